// Root-of-unity phenomena: the branching filtration of the restricted Specht
// module, A_zeta membership, and generator-matrix verification of the
// submodule theorems.
#pragma once

#include "seminormal/seminormal.hpp"

namespace seminormal {

struct BranchingFiltration {
  Partition shape;
  struct Layer {
    Node node;                    // removable node (k_j, l_j)
    Partition quotient_shape;     // lambda minus the node
    std::vector<int> members;     // basis indices with n in rows >= k_j
  };
  std::vector<Layer> layers;      // top to bottom; layer j spans E_{j+1} ... wait, E_j
  bool layers_closed = true;      // every E_j closed under T_1..T_{n-2}
  bool dims_match = true;         // dim(E_j/E_{j+1}) = dim S^{mu_j}
};

BranchingFiltration branching_filtration(SpechtModule& module);

struct SubmoduleReport {
  Partition shape;
  int node_index = 0;  // 1-based among removable nodes, top to bottom
  Node node;
  long e = 0;
  std::vector<int> radials;            // r_i, i = j+1..M
  std::vector<bool> hypothesis;        // [r_i]_zeta != 0
  bool hypothesis_holds = true;
  bool pole_free = true;               // generator f lies in S_{A_zeta}
  bool basis_independent = true;       // B spans a free module of full rank
  int generators_checked = 0;
  std::vector<bool> generator_equal;   // per generator T_1 .. T_max
  bool matrices_equal = true;
  std::string verdict;                 // "confirmed" | "failed" | "hypothesis-failed"
};

// Theorem check: f_n H_{A_zeta, n-1} is a Specht module S^mu when
// [r_i]_zeta != 0 for the removable nodes below the chosen one.
SubmoduleReport verify_submodule_fn(const Partition& shape, int node_index, long e);

// Theorem check for the restricted tableau module f_{t<=} H_{A_zeta, r-1}.
SubmoduleReport verify_submodule_tleq(const Partition& shape, const Tableau& t, int r, long e);

// Rank of the Gram matrix over Q[q]/(Phi_e); equals the dimension of the
// simple head of the specialized Specht module.
int radical_rank(const Partition& shape, long e);

}  // namespace seminormal
