#include "seminormal/hecke.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace seminormal {

HeckeElement HeckeElement::unit(int n) {
  HeckeElement h(n);
  h.terms.emplace(Permutation::identity(n), RatFunc::one());
  return h;
}

void HeckeElement::add_term(const Permutation& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b) {
  if (a.n != b.n) throw std::invalid_argument("hecke_add: rank mismatch");
  HeckeElement r = a;
  for (const auto& [w, c] : b.terms) r.add_term(w, c);
  return r;
}

HeckeElement hecke_sub(const HeckeElement& a, const HeckeElement& b) {
  if (a.n != b.n) throw std::invalid_argument("hecke_sub: rank mismatch");
  HeckeElement r = a;
  for (const auto& [w, c] : b.terms) r.add_term(w, -c);
  return r;
}

HeckeElement hecke_scale(const HeckeElement& a, const RatFunc& c) {
  HeckeElement r(a.n);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : a.terms) r.terms.emplace(w, x * c);
  return r;
}

HeckeElement mul_gen_right(const HeckeElement& h, int i) {
  if (i < 1 || i >= h.n) throw std::invalid_argument("mul_gen_right: generator out of range");
  static const RatFunc q = RatFunc::q_power(1);
  static const RatFunc qm1 = RatFunc::q_power(1) - RatFunc::one();
  HeckeElement r(h.n);
  for (const auto& [w, c] : h.terms) {
    // T_w T_i = T_{w s_i} when the length goes up, i.e. i occurs before i+1
    // in the one-line notation of w.
    int pos_i = 0, pos_i1 = 0;
    for (int x = 1; x <= h.n; ++x) {
      if (w.img[x - 1] == i) pos_i = x;
      if (w.img[x - 1] == i + 1) pos_i1 = x;
    }
    Permutation ws = w;
    std::swap(ws.img[pos_i - 1], ws.img[pos_i1 - 1]);
    if (pos_i < pos_i1) {
      r.add_term(ws, c);
    } else {
      r.add_term(ws, c * q);
      r.add_term(w, c * qm1);
    }
  }
  return r;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  if (a.n != b.n) throw std::invalid_argument("hecke_mul: rank mismatch");
  HeckeElement r(a.n);
  for (const auto& [w, c] : b.terms) {
    HeckeElement part = hecke_scale(a, c);
    for (int gen : reduced_word(w)) part = mul_gen_right(part, gen);
    r = hecke_add(r, part);
  }
  return r;
}

HeckeElement t_of_word(int n, const Permutation& w) {
  if (w.n() != n) throw std::invalid_argument("t_of_word: rank mismatch");
  HeckeElement h(n);
  h.terms.emplace(w, RatFunc::one());
  return h;
}

HeckeElement t_range(int n, int i, int j) { return t_of_word(n, sigma_perm(n, i, j)); }

HeckeElement jucys_murphy(int m, int n) {
  if (m < 1 || m > n) throw std::invalid_argument("jucys_murphy: index out of range");
  HeckeElement h(n);
  for (int k = 1; k < m; ++k)
    h.add_term(transposition(n, m - k, m), RatFunc::q_power(-k));
  return h;
}

HeckeElement row_sum_element(const Partition& shape, int i, int n_ambient) {
  if (i < 2 || i > shape.rows())
    throw std::invalid_argument("row_sum_element: row index out of range");
  int n = n_ambient > 0 ? n_ambient : shape.n();
  Tableau top = superstandard(shape);
  int a = top.at(i - 1, shape.part(i - 1));  // last entry of row i-1
  int b = top.at(i, shape.part(i));          // last entry of row i
  HeckeElement r = HeckeElement::unit(n);
  for (int x = a + 1; x <= b - 1; ++x) r = hecke_add(r, t_range(n, a, x));
  return r;
}

namespace {

void all_perms(int n, std::vector<Permutation>& out) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i + 1;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
}

// All elements of the row stabilizer S_lambda of t^lambda.
void row_stabilizer(const Partition& shape, std::vector<Permutation>& out) {
  Tableau top = superstandard(shape);
  int n = shape.n();
  std::vector<Permutation> acc = {Permutation::identity(n)};
  for (int r = 0; r < shape.rows(); ++r) {
    std::vector<int> vals = top.rows[r];
    std::vector<int> perm_of_row(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) perm_of_row[i] = static_cast<int>(i);
    std::vector<Permutation> next;
    do {
      Permutation w = Permutation::identity(n);
      for (size_t i = 0; i < vals.size(); ++i) w.img[vals[i] - 1] = vals[perm_of_row[i]];
      for (const auto& base : acc) next.push_back(perm_compose(base, w));
    } while (std::next_permutation(perm_of_row.begin(), perm_of_row.end()));
    acc = std::move(next);
  }
  out = std::move(acc);
}

// Complexity score used for pivot selection: prefer sparse monomial entries.
long pivot_score(const RatFunc& f) {
  long nz = 0;
  for (const auto& c : f.num().coeffs)
    if (c != 0) ++nz;
  long dnz = 0;
  for (const auto& c : f.den().coeffs)
    if (c != 0) ++dnz;
  return nz + 4 * (dnz - 1);
}

}  // namespace

HeckeElement MurphyOracle::x_lambda(const Partition& shape) const {
  std::vector<Permutation> stab;
  row_stabilizer(shape, stab);
  HeckeElement h(n_);
  for (const auto& w : stab) h.add_term(w, RatFunc::one());
  return h;
}

MurphyOracle::MurphyOracle(int n) : n_(n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("MurphyOracle: rank guard exceeded");
  all_perms(n, perms_);
  std::sort(perms_.begin(), perms_.end());
  for (size_t i = 0; i < perms_.size(); ++i) perm_index_[perms_[i]] = static_cast<int>(i);

  for (const Partition& shape : partitions_of(n)) {
    HeckeElement xl = x_lambda(shape);
    auto tabs = standard_tableaux(shape);
    for (const Tableau& s : tabs) {
      HeckeElement left = hecke_mul(t_of_word(n_, perm_inverse(d_of(s))), xl);
      for (const Tableau& t : tabs) {
        cells_.push_back(Cell{shape, s, t});
        x_elems_.push_back(hecke_mul(left, t_of_word(n_, d_of(t))));
      }
    }
  }
  size_t dim = perms_.size();
  if (cells_.size() != dim) throw std::logic_error("MurphyOracle: cell count mismatch");

  // Gauss-Jordan inversion of the transition matrix M with M[w][cell] equal
  // to the T_w coefficient of x_cell; pivots prefer simple entries.
  std::vector<std::vector<RatFunc>> m(dim, std::vector<RatFunc>(dim, RatFunc::zero()));
  inv_.assign(dim, std::vector<RatFunc>(dim, RatFunc::zero()));
  for (size_t j = 0; j < dim; ++j) {
    for (const auto& [w, c] : x_elems_[j].terms) m[perm_index_.at(w)][j] = c;
    inv_[j][j] = RatFunc::one();
  }
  std::vector<bool> row_done(dim, false);
  std::vector<int> pivot_row_of_col(dim, -1);
  for (size_t col = 0; col < dim; ++col) {
    int best = -1;
    long best_score = 0;
    for (size_t r = 0; r < dim; ++r) {
      if (row_done[r] || m[r][col].is_zero()) continue;
      long sc = pivot_score(m[r][col]);
      if (best < 0 || sc < best_score) {
        best = static_cast<int>(r);
        best_score = sc;
      }
    }
    if (best < 0) throw std::logic_error("MurphyOracle: singular transition matrix");
    row_done[best] = true;
    pivot_row_of_col[col] = best;
    RatFunc piv = m[best][col].inverse();
    for (size_t j = 0; j < dim; ++j) {
      if (!m[best][j].is_zero()) m[best][j] *= piv;
      if (!inv_[best][j].is_zero()) inv_[best][j] *= piv;
    }
    for (size_t r = 0; r < dim; ++r) {
      if (r == static_cast<size_t>(best) || m[r][col].is_zero()) continue;
      RatFunc f = m[r][col];
      for (size_t j = 0; j < dim; ++j) {
        if (!m[best][j].is_zero()) m[r][j] -= f * m[best][j];
        if (!inv_[best][j].is_zero()) inv_[r][j] -= f * inv_[best][j];
      }
    }
  }
  // Now m has one-hot rows: row pivot_row_of_col[c] selects column c, and
  // inv_ holds (column-permuted) M^{-1}: coefficient of cell c in T_w is
  // inv_[pivot_row_of_col[c]] applied to the T-coordinate vector. Reorder
  // rows so that inv_[c] directly gives cell c.
  std::vector<std::vector<RatFunc>> reordered(dim);
  for (size_t c = 0; c < dim; ++c) reordered[c] = std::move(inv_[pivot_row_of_col[c]]);
  inv_ = std::move(reordered);
}

const MurphyOracle& MurphyOracle::get(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<MurphyOracle>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<MurphyOracle>(n)).first;
  return *it->second;
}

std::vector<RatFunc> MurphyOracle::expand(const HeckeElement& h) const {
  if (h.n != n_) throw std::invalid_argument("MurphyOracle::expand: rank mismatch");
  std::vector<RatFunc> out(cells_.size(), RatFunc::zero());
  for (const auto& [w, c] : h.terms) {
    int wi = perm_index_.at(w);
    for (size_t cell = 0; cell < cells_.size(); ++cell) {
      const RatFunc& entry = inv_[cell][wi];
      if (!entry.is_zero()) out[cell] += c * entry;
    }
  }
  return out;
}

HeckeElement MurphyOracle::assemble(const std::vector<RatFunc>& coeffs) const {
  HeckeElement h(n_);
  for (size_t cell = 0; cell < coeffs.size(); ++cell) {
    if (coeffs[cell].is_zero()) continue;
    for (const auto& [w, c] : x_elems_[cell].terms) h.add_term(w, c * coeffs[cell]);
  }
  return h;
}

std::map<Tableau, RatFunc> MurphyOracle::straighten(const Partition& shape,
                                                    const Tableau& u) const {
  if (!is_row_standard(u)) throw std::invalid_argument("oracle straighten: not row-standard");
  HeckeElement h = hecke_mul(x_lambda(shape), t_of_word(n_, d_of(u)));
  auto coeffs = expand(h);
  Tableau top = superstandard(shape);
  std::map<Tableau, RatFunc> out;
  for (size_t cell = 0; cell < cells_.size(); ++cell) {
    if (coeffs[cell].is_zero()) continue;
    const Cell& c = cells_[cell];
    if (c.shape == shape) {
      if (!(c.s == top))
        throw std::logic_error("oracle straighten: unexpected non-initial lambda cell");
      out[c.t] = coeffs[cell];
    } else if (!(total_prec(shape, c.shape) && dominance_leq(shape, c.shape))) {
      throw std::logic_error("oracle straighten: cell below lambda in dominance");
    }
  }
  return out;
}

std::vector<std::vector<RatFunc>> MurphyOracle::action_matrix(const Partition& shape,
                                                              int i) const {
  auto tabs = standard_tableaux(shape);
  std::map<Tableau, int> index;
  for (size_t k = 0; k < tabs.size(); ++k) index[tabs[k]] = static_cast<int>(k);
  std::vector<std::vector<RatFunc>> mat(tabs.size(),
                                        std::vector<RatFunc>(tabs.size(), RatFunc::zero()));
  HeckeElement xl = x_lambda(shape);
  for (size_t r = 0; r < tabs.size(); ++r) {
    HeckeElement h = hecke_mul(xl, t_of_word(n_, d_of(tabs[r])));
    h = mul_gen_right(h, i);
    auto coeffs = expand(h);
    Tableau top = superstandard(shape);
    for (size_t cell = 0; cell < cells_.size(); ++cell) {
      if (coeffs[cell].is_zero()) continue;
      const Cell& c = cells_[cell];
      if (c.shape == shape) {
        if (!(c.s == top)) throw std::logic_error("oracle action: unexpected cell");
        mat[r][index.at(c.t)] = coeffs[cell];
      }
    }
  }
  return mat;
}

RatFunc MurphyOracle::form(const Partition& shape, const Tableau& s, const Tableau& t) const {
  HeckeElement xl = x_lambda(shape);
  HeckeElement h = hecke_mul(xl, t_of_word(n_, d_of(s)));
  h = hecke_mul(h, t_of_word(n_, perm_inverse(d_of(t))));
  h = hecke_mul(h, xl);
  auto coeffs = expand(h);
  Tableau top = superstandard(shape);
  for (size_t cell = 0; cell < cells_.size(); ++cell) {
    const Cell& c = cells_[cell];
    if (c.shape == shape && c.s == top && c.t == top) return coeffs[cell];
  }
  throw std::logic_error("MurphyOracle::form: missing initial cell");
}

}  // namespace seminormal
