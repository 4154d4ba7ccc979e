#include "seminormal/specht.hpp"

#include <stdexcept>

namespace seminormal {

SpechtVector SpechtVector::basis_vector(const Tableau& t) {
  SpechtVector v(t.shape);
  v.terms.emplace(t, RatFunc::one());
  return v;
}

void SpechtVector::add_term(const Tableau& t, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms.find(t);
  if (it == terms.end()) {
    terms.emplace(t, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

RatFunc SpechtVector::coeff(const Tableau& t) const {
  auto it = terms.find(t);
  return it == terms.end() ? RatFunc::zero() : it->second;
}

SpechtVector specht_add(const SpechtVector& a, const SpechtVector& b) {
  SpechtVector r = a;
  if (r.shape.parts.empty()) r.shape = b.shape;
  for (const auto& [t, c] : b.terms) r.add_term(t, c);
  return r;
}

SpechtVector specht_sub(const SpechtVector& a, const SpechtVector& b) {
  SpechtVector r = a;
  if (r.shape.parts.empty()) r.shape = b.shape;
  for (const auto& [t, c] : b.terms) r.add_term(t, -c);
  return r;
}

SpechtVector specht_scale(const SpechtVector& a, const RatFunc& c) {
  SpechtVector r(a.shape);
  if (c.is_zero()) return r;
  for (const auto& [t, x] : a.terms) r.terms.emplace(t, x * c);
  return r;
}

SpechtModule::SpechtModule(Partition shape) : shape_(std::move(shape)), n_(shape_.n()) {
  basis_ = standard_tableaux(shape_);
  for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
}

int SpechtModule::index_of(const Tableau& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw std::invalid_argument("SpechtModule: tableau not standard");
  return it->second;
}

SpechtVector SpechtModule::act_gen(const SpechtVector& v, int i) {
  if (i < 1 || i >= n_) throw std::invalid_argument("act_gen: generator out of range");
  static const RatFunc q = RatFunc::q_power(1);
  static const RatFunc qm1 = RatFunc::q_power(1) - RatFunc::one();
  SpechtVector out(shape_);
  for (const auto& [t, c] : v.terms) {
    Node ni = t.node_of(i);
    Node ni1 = t.node_of(i + 1);
    if (ni.row == ni1.row) {
      out.add_term(t, c * q);
      continue;
    }
    Tableau u = apply(t, perm_gen(n_, i));
    if (ni.row < ni1.row) {
      // e_t T_i = e_{t s_i}; the only source of nonstandard indices.
      if (is_standard(u)) {
        out.add_term(u, c);
      } else {
        const SpechtVector& su = straighten(u);
        for (const auto& [tu, cu] : su.terms) out.add_term(tu, c * cu);
      }
    } else {
      out.add_term(u, c * q);
      out.add_term(t, c * qm1);
    }
  }
  return out;
}

SpechtVector SpechtModule::act_word(const SpechtVector& v, const Permutation& w) {
  SpechtVector r = v;
  for (int gen : reduced_word(w)) r = act_gen(r, gen);
  return r;
}

SpechtVector SpechtModule::act_hecke(const SpechtVector& v, const HeckeElement& h) {
  SpechtVector r(shape_);
  for (const auto& [w, c] : h.terms) {
    SpechtVector part = act_word(v, w);
    for (const auto& [t, x] : part.terms) r.add_term(t, x * c);
  }
  return r;
}

SpechtVector SpechtModule::jm_action(const SpechtVector& v, int m) {
  if (m < 1 || m > n_) throw std::invalid_argument("jm_action: index out of range");
  SpechtVector r(shape_);
  for (int k = 1; k < m; ++k) {
    SpechtVector part = act_word(v, transposition(n_, m - k, m));
    RatFunc w = RatFunc::q_power(-k);
    for (const auto& [t, x] : part.terms) r.add_term(t, x * w);
  }
  return r;
}

const SpechtVector& SpechtModule::straighten(const Tableau& u) {
  auto it = straighten_memo_.find(u);
  if (it != straighten_memo_.end()) return it->second;
  SpechtVector res = straighten_uncached(u);
  return straighten_memo_.emplace(u, std::move(res)).first->second;
}

SpechtVector SpechtModule::straighten_uncached(const Tableau& u) {
  if (!is_row_standard(u)) throw std::invalid_argument("straighten: tableau not row-standard");
  if (is_standard(u)) return SpechtVector::basis_vector(u);
  ++straighten_events_;

  Permutation du = d_of(u);
  int len_u = perm_length(du);
  // Pivot descents: leftmost column first, topmost first. The Garnir
  // relation translated by T_w applies whenever d(u) = d(g) w with lengths
  // adding; scan until a descent satisfies that.
  for (int c = 1; c <= shape_.part(1); ++c) {
    for (int r = 2; r <= shape_.rows(); ++r) {
      if (shape_.part(r) < c) break;
      if (u.at(r - 1, c) <= u.at(r, c)) continue;
      GarnirData garnir = garnir_tableau(shape_, r, c);
      Permutation w = perm_compose(perm_inverse(d_of(garnir.g)), du);
      int len_g = perm_length(d_of(garnir.g));
      int len_w = perm_length(w);
      if (len_g + len_w != len_u) continue;
      // e_u = e_g T_w and sum over belt redistributions of e_. T_w = 0.
      SpechtVector acc(shape_);
      for (const auto& cw : garnir.coset) {
        Tableau v = apply(garnir.g, cw);
        if (v == garnir.g) continue;
        SpechtVector sv = straighten(v);
        acc = specht_sub(acc, sv);
      }
      return act_word(acc, w);
    }
  }
  throw std::logic_error("straighten: no admissible Garnir pivot for " + u.str());
}

const std::vector<std::vector<RatFunc>>& SpechtModule::action_matrix(int i) {
  auto it = matrices_.find(i);
  if (it != matrices_.end()) return it->second;
  std::vector<std::vector<RatFunc>> mat(dim(), std::vector<RatFunc>(dim(), RatFunc::zero()));
  for (int r = 0; r < dim(); ++r) {
    SpechtVector img = act_gen(SpechtVector::basis_vector(basis_[r]), i);
    for (const auto& [t, c] : img.terms) mat[r][index_of(t)] = c;
  }
  return matrices_.emplace(i, std::move(mat)).first->second;
}

}  // namespace seminormal
