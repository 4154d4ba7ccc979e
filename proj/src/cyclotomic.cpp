#include "seminormal/cyclotomic.hpp"

#include <map>
#include <stdexcept>

namespace seminormal {

namespace {

// q^n - 1
Poly q_pow_minus_one(long n) {
  Poly p;
  p.coeffs.assign(n + 1, Int(0));
  p.coeffs[0] = -1;
  p.coeffs[n] = 1;
  return p;
}

}  // namespace

const Poly& cyclotomic_poly(long d) {
  static std::map<long, Poly> cache;
  if (d < 1) throw std::invalid_argument("cyclotomic_poly: d >= 1 required");
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // Phi_d = (q^d - 1) / prod_{d' | d, d' < d} Phi_{d'}
  Poly p = q_pow_minus_one(d);
  for (long dd = 1; dd < d; ++dd)
    if (d % dd == 0) p = poly_div_exact(p, cyclotomic_poly(dd));
  return cache.emplace(d, std::move(p)).first->second;
}

LaurentPoly CyclotomicFactorization::reassemble() const {
  Poly p = Poly::constant(unit.get_num());
  for (const auto& [d, m] : factors)
    for (int i = 0; i < m; ++i) p = poly_mul(p, cyclotomic_poly(d));
  if (unit.get_den() != 1) p = poly_div_exact(p, Poly::constant(unit.get_den()));
  return poly_to_laurent(p, qpower);
}

CyclotomicFactorOutcome factor_cyclotomic(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_cyclotomic: zero input");
  CyclotomicFactorOutcome out;
  long shift;
  Poly rem;
  laurent_split(p, shift, rem);
  out.factorization.qpower = shift;
  // Products of cyclotomics are monic with constant term of absolute value 1,
  // so the scalar unit is the content up to sign.
  Int c = poly_content(rem);
  if (rem.coeffs.back() < 0) c = -c;
  if (c != 1) {
    Poly q;
    if (!poly_try_div(rem, Poly::constant(c), q)) throw std::logic_error("content division");
    rem = q;
  }
  out.factorization.unit = Rat(c);
  // phi(d) >= sqrt(d/2), so phi(d) <= deg forces d <= 2*deg^2.
  long deg = rem.degree();
  long dmax = 2 * deg * deg + 1;
  for (long d = 2; d <= dmax && rem.degree() > 0; ++d) {
    const Poly& phi = cyclotomic_poly(d);
    if (phi.degree() > rem.degree()) continue;
    int mult = 0;
    Poly q;
    while (poly_try_div(rem, phi, q)) {
      rem = q;
      ++mult;
    }
    if (mult > 0) out.factorization.factors.emplace_back(d, mult);
  }
  if (rem.degree() == 0 && rem.coeff(0) == 1) {
    out.is_cyclotomic_product = true;
  } else {
    out.residual = rem;
  }
  return out;
}

bool cyclotomic_divides(const CyclotomicFactorization& a, const CyclotomicFactorization& b) {
  for (const auto& [d, m] : a.factors) {
    int avail = 0;
    for (const auto& [d2, m2] : b.factors)
      if (d2 == d) avail = m2;
    if (m > avail) return false;
  }
  return true;
}

CyclotomicField::CyclotomicField(long e) : e_(e) {
  if (e < 2) throw std::invalid_argument("CyclotomicField: e >= 2 required");
  phi_ = cyclotomic_poly(e);
  deg_ = phi_.degree();
}

CyclotomicField::Elem CyclotomicField::one() const {
  Elem a = zero();
  a[0] = 1;
  return a;
}

CyclotomicField::Elem CyclotomicField::from_rat(const Rat& c) const {
  Elem a = zero();
  a[0] = c;
  return a;
}

bool CyclotomicField::is_zero(const Elem& a) const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (int i = 0; i < deg_; ++i) r[i] += b[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (int i = 0; i < deg_; ++i) r[i] -= b[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
  Elem r = a;
  for (auto& c : r) c = -c;
  return r;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
  std::vector<Rat> prod(2 * deg_ - 1, Rat(0));
  for (int i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < deg_; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  // Reduce modulo the monic phi_.
  for (int k = static_cast<int>(prod.size()) - 1; k >= deg_; --k) {
    Rat c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int j = 0; j < deg_; ++j) prod[k - deg_ + j] -= c * Rat(phi_.coeffs[j]);
  }
  prod.resize(deg_);
  return prod;
}

CyclotomicField::Elem CyclotomicField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("CyclotomicField: inverse of zero");
  // Extended Euclid over Q[x] for (a, phi); phi is irreducible so gcd = 1.
  using QP = std::vector<Rat>;
  auto trim = [](QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  auto qp_divmod = [&](QP a_, const QP& b_, QP& quot) {
    quot.clear();
    if (b_.empty()) throw std::logic_error("qp_divmod by zero");
    if (a_.size() >= b_.size()) quot.assign(a_.size() - b_.size() + 1, Rat(0));
    while (a_.size() >= b_.size() && !a_.empty()) {
      Rat f = a_.back() / b_.back();
      size_t k = a_.size() - b_.size();
      quot[k] = f;
      for (size_t j = 0; j < b_.size(); ++j) a_[k + j] -= f * b_[j];
      trim(a_);
    }
    return a_;
  };
  QP r0(phi_.coeffs.size());
  for (size_t i = 0; i < phi_.coeffs.size(); ++i) r0[i] = Rat(phi_.coeffs[i]);
  QP r1(a.begin(), a.end());
  trim(r1);
  QP s0 = {}, s1 = {Rat(1)};  // coefficients of a in the Bezout identity
  while (!r1.empty()) {
    QP quot;
    QP r2 = qp_divmod(r0, r1, quot);
    // s2 = s0 - quot * s1
    QP qs(quot.size() + (s1.empty() ? 0 : s1.size() - 1) + (s1.empty() ? 0 : 1), Rat(0));
    if (!s1.empty() && !quot.empty()) {
      qs.assign(quot.size() + s1.size() - 1, Rat(0));
      for (size_t i = 0; i < quot.size(); ++i)
        for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += quot[i] * s1[j];
    } else {
      qs.clear();
    }
    QP s2(std::max(s0.size(), qs.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (a nonzero constant), s0 * a ≡ r0 mod phi.
  if (r0.size() != 1) throw std::logic_error("CyclotomicField::inv: gcd not constant");
  Elem r = zero();
  for (size_t i = 0; i < s0.size() && i < static_cast<size_t>(deg_); ++i) r[i] = s0[i] / r0[0];
  return r;
}

CyclotomicField::Elem CyclotomicField::q_class() const { return q_power_class(1); }

CyclotomicField::Elem CyclotomicField::q_power_class(long k) const {
  // q has multiplicative order e modulo Phi_e.
  long r = ((k % e_) + e_) % e_;
  Poly p = Poly::monomial(static_cast<int>(r));
  return reduce_poly(p);
}

CyclotomicField::Elem CyclotomicField::reduce_poly(const Poly& p) const {
  std::vector<Rat> v(std::max<int>(p.degree() + 1, 1), Rat(0));
  for (int i = 0; i <= p.degree(); ++i) v[i] = Rat(p.coeffs[i]);
  for (int k = static_cast<int>(v.size()) - 1; k >= deg_; --k) {
    Rat c = v[k];
    if (c == 0) continue;
    v[k] = 0;
    for (int j = 0; j < deg_; ++j) v[k - deg_ + j] -= c * Rat(phi_.coeffs[j]);
  }
  v.resize(deg_, Rat(0));
  return v;
}

CyclotomicField::Elem CyclotomicField::reduce_laurent(const LaurentPoly& p) const {
  Elem r = zero();
  for (const auto& [e, c] : p.terms) {
    Elem t = q_power_class(e);
    for (auto& x : t) x *= Rat(c);
    r = add(r, t);
  }
  return r;
}

std::optional<CyclotomicField::Elem> CyclotomicField::reduce(const RationalFunction& f) const {
  if (f.is_zero()) return zero();
  Elem d = reduce_poly(f.den());
  if (is_zero(d)) return std::nullopt;
  Elem n = reduce_poly(f.num());
  Elem r = mul(n, inv(d));
  return mul(r, q_power_class(f.shift()));
}

}  // namespace seminormal
