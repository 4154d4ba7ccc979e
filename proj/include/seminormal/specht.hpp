// The Specht module S^lambda over K: standard basis vectors, the right action
// of the Hecke generators with Garnir straightening, and action matrices.
#pragma once

#include <map>
#include <vector>

#include "seminormal/hecke.hpp"

namespace seminormal {

struct SpechtVector {
  Partition shape;
  std::map<Tableau, RatFunc> terms;  // standard index tableaux, no zeros

  SpechtVector() = default;
  explicit SpechtVector(Partition sh) : shape(std::move(sh)) {}
  static SpechtVector basis_vector(const Tableau& t);
  void add_term(const Tableau& t, const RatFunc& c);
  bool is_zero() const { return terms.empty(); }
  RatFunc coeff(const Tableau& t) const;
  bool operator==(const SpechtVector& o) const {
    return shape == o.shape && terms == o.terms;
  }
  bool operator!=(const SpechtVector& o) const { return !(*this == o); }
};

SpechtVector specht_add(const SpechtVector& a, const SpechtVector& b);
SpechtVector specht_sub(const SpechtVector& a, const SpechtVector& b);
SpechtVector specht_scale(const SpechtVector& a, const RatFunc& c);

// Per-shape context: fixed basis enumeration, straightening memo, matrices.
class SpechtModule {
 public:
  explicit SpechtModule(Partition shape);

  const Partition& shape() const { return shape_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Tableau>& basis() const { return basis_; }
  const Tableau& tableau_at(int i) const { return basis_[i]; }
  int index_of(const Tableau& t) const;
  const Tableau& top_tableau() const { return basis_[0]; }  // t^lambda

  // v * T_i, straightening any nonstandard index eagerly.
  SpechtVector act_gen(const SpechtVector& v, int i);
  // v * T_w along a reduced word of w.
  SpechtVector act_word(const SpechtVector& v, const Permutation& w);
  SpechtVector act_hecke(const SpechtVector& v, const HeckeElement& h);
  // v * L_m as the weighted sum of transposition actions.
  SpechtVector jm_action(const SpechtVector& v, int m);

  // Expansion of e_u for a row-standard u in the standard basis.
  const SpechtVector& straighten(const Tableau& u);

  // Matrix of T_i in the standard basis (rows = images of basis vectors).
  const std::vector<std::vector<RatFunc>>& action_matrix(int i);

  // Number of straighten calls on nonstandard tableaux so far; fast-path
  // tests assert this does not move.
  long straighten_events() const { return straighten_events_; }

 private:
  SpechtVector straighten_uncached(const Tableau& u);

  Partition shape_;
  int n_;
  std::vector<Tableau> basis_;
  std::map<Tableau, int> index_;
  std::map<Tableau, SpechtVector> straighten_memo_;
  std::map<int, std::vector<std::vector<RatFunc>>> matrices_;
  long straighten_events_ = 0;
};

}  // namespace seminormal
