// Young's seminormal basis {f_t}: the projector oracle, weak Gram-Schmidt,
// the stepwise seminormal-form walk, the fast row-sum recursions, gamma
// norms, base-change matrices, and denominator certificates.
#pragma once

#include <functional>
#include <optional>

#include "seminormal/cyclotomic.hpp"
#include "seminormal/specht.hpp"

namespace seminormal {

// f_t is unitriangular: coefficient 1 on e_t, support above t in dominance.
void assert_unitriangular(const SpechtVector& f, const Tableau& t);

// The ascent coefficient of Young's seminormal form, c_up = q [p+1][p-1] / [p]^2.
RatFunc seminormal_ascent_coefficient(int rho);

struct GenActionCoeffs {
  enum Case { SameRow, SameColumn, Descent, Ascent } kind;
  int rho = 0;          // axial distance, positive in the swap cases
  RatFunc diag;         // coefficient of f_t
  RatFunc cross;        // coefficient of f_{t s_i} (swap cases only)
  Tableau swapped;      // t s_i when standard
};

// Coefficients of f_t T_i over the seminormal basis.
GenActionCoeffs seminormal_gen_action(const Tableau& t, int i);

// f_t = e_t E_t with E_t the product of Jucys-Murphy projector factors.
SpechtVector seminormal_projector(SpechtModule& module, const Tableau& t);
// Same, but with the candidate residue set fixed globally over all contents
// realized by partitions of n (used to validate the per-entry candidate set).
SpechtVector seminormal_projector_global_residues(SpechtModule& module, const Tableau& t);

struct StepwiseResult {
  SpechtVector f;
  std::vector<long long> term_count_trace;  // formal term count after each step
  long long peak_terms = 1;
};

// Repeated inversion of Young's seminormal form along a reduced word of d(t)
// with standard prefixes; straightening happens only at the end.
StepwiseResult seminormal_stepwise(SpechtModule& module, const Tableau& t);

// A reduced word for d(t) every prefix of which yields a standard tableau.
std::vector<int> standard_prefix_word(const Tableau& t);

// One row-step of the seminormal walk:
// f_{t_beta} = f_{t_b} (T_{b,beta} + (1/[r]) (T_{b,beta-1} + ... + T_{b,b+1} + 1)).
SpechtVector row_step(SpechtModule& module, const SpechtVector& f_tb, const Tableau& t_b,
                      int b, int beta);

struct FatHookResult {
  SpechtVector f;       // f_n at the James-Murphy tableau of node (k_1, lambda_1)
  SpechtVector big_f;   // the recursion vector F_{k_1+k_2}
  Tableau t_n;
  int r = 0;            // the single radial denominator
};

// The fat-hook recursion; accepts rectangles and single rows as the
// degenerate case f_n = e_lambda.
FatHookResult fat_hook_vector(SpechtModule& module);

// The Hecke-algebra data of the general f_n recursion at a removable node.
struct FnElement {
  Node node;
  Tableau t_n;
  std::vector<Node> below;            // removable nodes below, top to bottom
  std::vector<int> radials;           // r_1..r_N
  std::vector<HeckeElement> f_elems;  // F_0..F_{N-1}
  std::vector<HeckeElement> brackets; // T_{sigma_j} + (1/[r_{j+1}]) F_j
  HeckeElement p;                     // product of the brackets
};

FnElement build_fn_element(const Partition& shape, const Node& node, int ambient_rank);

struct GeneralFnResult {
  SpechtVector f;
  FnElement element;
};

// f_n at the James-Murphy tableau of the node, via the row-sum recursion;
// produces only standard indices.
GeneralFnResult general_fn(SpechtModule& module, const Node& node);

struct GeneralFtResult {
  SpechtVector f;
  std::vector<HeckeElement> p_factors;  // P_n, P_{n-1}, ..., P_1
  HeckeElement p;                       // their product
};

// f_t = e_lambda P_n P_{n-1} ... P_1 for arbitrary standard t.
GeneralFtResult general_ft(SpechtModule& module, const Tableau& t);

// gamma_t = <f_t, f_t> by the ascent recursion from gamma_{t^lambda}.
std::vector<RatFunc> gamma_vector(SpechtModule& module);

enum class Method { Fast, Stepwise, Projector, GramSchmidt };
Method parse_method(const std::string& name);
std::string method_name(Method m);

struct BaseChange {
  Partition shape;
  std::vector<Tableau> order;
  std::vector<std::vector<RatFunc>> m;     // f = M e, rows in basis order
  std::vector<std::vector<RatFunc>> minv;  // e = Minv f
  std::vector<RatFunc> gammas;
};

BaseChange base_change(SpechtModule& module, Method method);

// The Murphy form computed in seminormal coordinates.
RatFunc bilinear_form(SpechtModule& module, const BaseChange& bc, const SpechtVector& u,
                      const SpechtVector& v);
std::vector<std::vector<RatFunc>> gram_matrix(SpechtModule& module, const BaseChange& bc);

// Weak Gram-Schmidt along the fixed enumeration; form is a callback so the
// oracle route (small n) and the seminormal route can both drive it.
using FormFn = std::function<RatFunc(const SpechtVector&, const SpechtVector&)>;
BaseChange gram_schmidt(SpechtModule& module, const FormFn& form);

struct DenominatorCertificate {
  Tableau tableau;
  std::vector<int> predicted_radials;       // empty for non James-Murphy input
  CyclotomicFactorization predicted;        // product of [r_i]_q
  struct Entry {
    Tableau index;
    CyclotomicFactorOutcome factorization;  // of the coefficient denominator
  };
  std::vector<Entry> denominators;          // entries with nontrivial denominator
  bool all_cyclotomic = true;
  bool all_divide_predicted = true;         // meaningful when radials known
  bool clears_after_multiplying = true;     // prod [r_i] * f is Laurent
};

DenominatorCertificate denominator_certificate(SpechtModule& module, const SpechtVector& f,
                                               const Tableau& t,
                                               const std::vector<int>& predicted_radials);

// Certificate for f_n at a removable node, with the predicted product.
DenominatorCertificate denominator_certificate_at_node(SpechtModule& module, const Node& node);

}  // namespace seminormal
