// The Iwahori-Hecke algebra H_{q,n} in the T_w basis, distinguished elements,
// and the small-n Murphy standard-basis oracle.
#pragma once

#include <map>
#include <vector>

#include "seminormal/ratfunc.hpp"
#include "seminormal/tableaux.hpp"

namespace seminormal {

struct HeckeElement {
  int n = 0;
  std::map<Permutation, RatFunc> terms;  // no zero coefficients stored

  explicit HeckeElement(int rank = 0) : n(rank) {}
  static HeckeElement zero(int n) { return HeckeElement(n); }
  static HeckeElement unit(int n);  // T_id
  void add_term(const Permutation& w, const RatFunc& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const HeckeElement& o) const { return n == o.n && terms == o.terms; }
};

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_sub(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_scale(const HeckeElement& a, const RatFunc& c);
// h * T_i via the quadratic relation case split.
HeckeElement mul_gen_right(const HeckeElement& h, int i);
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

HeckeElement t_of_word(int n, const Permutation& w);  // the basis element T_w
HeckeElement t_range(int n, int i, int j);            // T_{i,j} = T_{sigma_{i,j}}
HeckeElement jucys_murphy(int m, int n);              // L_m, L_1 = 0
// R_i = 1 + T_{a_i,a_i+1} + ... + T_{a_i,b_i-1} for row i >= 2 of t^lambda.
// n_ambient embeds the element into a larger rank when nonzero.
HeckeElement row_sum_element(const Partition& shape, int i, int n_ambient = 0);

// Ground-truth linear algebra in the Murphy basis {x_st}: the full transition
// between {T_w} and {x_st} is inverted exactly once per rank. Guarded to
// small n (factorial-dimension linear algebra).
class MurphyOracle {
 public:
  static constexpr int kMaxRank = 5;

  explicit MurphyOracle(int n);
  static const MurphyOracle& get(int n);  // cached per rank

  struct Cell {
    Partition shape;
    Tableau s, t;
  };

  int rank() const { return n_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const HeckeElement& x_element(int cell_index) const { return x_elems_[cell_index]; }
  HeckeElement x_lambda(const Partition& shape) const;

  // Coefficients of h in the Murphy basis, indexed like cells().
  std::vector<RatFunc> expand(const HeckeElement& h) const;
  // Recombines Murphy coefficients; expand followed by assemble is identity.
  HeckeElement assemble(const std::vector<RatFunc>& coeffs) const;

  // Expansion of x_lambda T_{d(u)} modulo the span of more dominant cells,
  // in the standard basis e_v of the lambda cell. u must be row-standard.
  std::map<Tableau, RatFunc> straighten(const Partition& shape, const Tableau& u) const;

  // Matrix of the right action of T_i on the Specht module of the shape in
  // the standard basis order of standard_tableaux(shape).
  std::vector<std::vector<RatFunc>> action_matrix(const Partition& shape, int i) const;

  // The Murphy bilinear form <e_s, e_t>.
  RatFunc form(const Partition& shape, const Tableau& s, const Tableau& t) const;

 private:
  int n_;
  std::vector<Permutation> perms_;       // all of S_n, sorted
  std::map<Permutation, int> perm_index_;
  std::vector<Cell> cells_;
  std::vector<HeckeElement> x_elems_;
  // inverse transition: column w of T->x coefficients, inv_[w][cell]
  std::vector<std::vector<RatFunc>> inv_;
};

}  // namespace seminormal
