#include "seminormal/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace seminormal {

Poly Poly::monomial(int deg, Int c) {
  Poly p;
  if (c != 0) {
    p.coeffs.assign(deg + 1, Int(0));
    p.coeffs[deg] = std::move(c);
  }
  return p;
}

const Int& Poly::coeff(int k) const {
  static const Int zero(0);
  if (k < 0 || k >= static_cast<int>(coeffs.size())) return zero;
  return coeffs[k];
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  r.trim();
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  r.trim();
  return r;
}

Poly poly_neg(const Poly& a) {
  Poly r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs.size(); ++j) {
      if (b.coeffs[j] == 0) continue;
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  r.trim();
  return r;
}

Poly poly_scale(const Poly& a, const Int& c) {
  if (c == 0) return Poly();
  Poly r = a;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

bool poly_try_div(const Poly& a, const Poly& b, Poly& quot) {
  if (b.is_zero()) throw std::invalid_argument("poly_try_div: zero divisor");
  quot = Poly();
  if (a.is_zero()) return true;
  if (a.degree() < b.degree()) return false;
  Poly rem = a;
  quot.coeffs.assign(a.degree() - b.degree() + 1, Int(0));
  const Int& lead = b.coeffs.back();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    int d = k + b.degree();
    if (d > rem.degree()) continue;
    Int c = rem.coeff(d);
    if (c == 0) continue;
    if (c % lead != 0) return false;
    Int f = c / lead;
    quot.coeffs[k] = f;
    for (int j = 0; j <= b.degree(); ++j) {
      if (b.coeffs[j] == 0) continue;
      int idx = k + j;
      if (idx >= static_cast<int>(rem.coeffs.size())) rem.coeffs.resize(idx + 1, Int(0));
      rem.coeffs[idx] -= f * b.coeffs[j];
    }
    rem.trim();
  }
  if (!rem.is_zero()) return false;
  quot.trim();
  return true;
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  Poly q;
  if (!poly_try_div(a, b, q)) throw std::logic_error("poly_div_exact: inexact division");
  return q;
}

Int poly_content(const Poly& a) {
  Int g = 0;
  for (const auto& c : a.coeffs) {
    if (c == 0) continue;
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Poly poly_primitive_part(const Poly& a) {
  if (a.is_zero()) return a;
  Int c = poly_content(a);
  Poly r = a;
  if (c != 1)
    for (auto& x : r.coeffs) x /= c;
  return r;
}

// Primitive PRS via pseudo-remainders; result primitive with positive leading
// coefficient.
Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly u = poly_primitive_part(a);
  Poly v = poly_primitive_part(b);
  if (u.is_zero()) std::swap(u, v);
  while (!v.is_zero()) {
    // pseudo-remainder of u by v
    Poly rem = u;
    const Int& lead = v.coeffs.back();
    while (!rem.is_zero() && rem.degree() >= v.degree()) {
      int k = rem.degree() - v.degree();
      Int c = rem.coeffs.back();
      // rem := lead * rem - c * q^k * v  (degree strictly drops)
      for (auto& x : rem.coeffs) x *= lead;
      for (int j = 0; j <= v.degree(); ++j) rem.coeffs[k + j] -= c * v.coeffs[j];
      rem.trim();
    }
    u = v;
    v = poly_primitive_part(rem);
  }
  if (u.is_zero()) return u;
  u = poly_primitive_part(u);
  if (u.coeffs.back() < 0)
    for (auto& x : u.coeffs) x = -x;
  return u;
}

Rat poly_eval(const Poly& a, const Rat& x) {
  Rat r(0);
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) r = r * x + Rat(*it);
  return r;
}

std::string poly_str(const Poly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= a.degree(); ++k) {
    const Int& c = a.coeffs[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int ab = abs(c);
    if (ab != 1 || k == 0) os << ab.get_str();
    if (k > 0) {
      if (ab != 1) os << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

void LaurentPoly::add_term(long e, const Int& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

LaurentPoly laurent_sub(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, -c);
  return r;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly laurent_neg(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [e, c] : a.terms) r.terms[e] = -c;
  return r;
}

Rat laurent_eval(const LaurentPoly& a, const Rat& x) {
  if (x == 0) throw std::invalid_argument("laurent_eval at 0");
  Rat r(0);
  for (const auto& [e, c] : a.terms) {
    Rat p(1);
    long k = e >= 0 ? e : -e;
    Rat base = e >= 0 ? x : Rat(1) / x;
    for (long i = 0; i < k; ++i) p *= base;
    r += Rat(c) * p;
  }
  return r;
}

std::string laurent_str(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int ab = abs(c);
    if (ab != 1 || e == 0) os << ab.get_str();
    if (e != 0) {
      if (ab != 1) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

void laurent_split(const LaurentPoly& a, long& shift, Poly& poly) {
  poly = Poly();
  if (a.is_zero()) {
    shift = 0;
    return;
  }
  shift = a.min_exp();
  poly.coeffs.assign(a.max_exp() - shift + 1, Int(0));
  for (const auto& [e, c] : a.terms) poly.coeffs[e - shift] = c;
  poly.trim();
}

LaurentPoly poly_to_laurent(const Poly& p, long shift) {
  LaurentPoly r;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeffs[k] != 0) r.terms[k + shift] = p.coeffs[k];
  return r;
}

}  // namespace seminormal
