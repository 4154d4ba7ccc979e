// Sparse Laurent polynomials in q over Z, and dense ordinary polynomials
// used for numerator/denominator arithmetic (gcd, exact division, content).
#pragma once

#include <map>
#include <vector>
#include <string>

#include "seminormal/rational.hpp"

namespace seminormal {

// Dense polynomial in q with integer coefficients, ascending exponents.
// Invariant: coeffs.empty() means zero; otherwise coeffs.back() != 0.
struct Poly {
  std::vector<Int> coeffs;

  Poly() = default;
  explicit Poly(std::vector<Int> c) : coeffs(std::move(c)) { trim(); }
  static Poly constant(Int c) {
    Poly p;
    if (c != 0) p.coeffs.push_back(std::move(c));
    return p;
  }
  static Poly one() { return constant(1); }
  static Poly monomial(int deg, Int c = 1);

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Int& coeff(int k) const;
  bool operator==(const Poly& o) const { return coeffs == o.coeffs; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Int& c);

// Quotient of an exact division; aborts if the division is not exact.
Poly poly_div_exact(const Poly& a, const Poly& b);
// Attempts a/b over Z; returns false if not exact.
bool poly_try_div(const Poly& a, const Poly& b, Poly& quot);

Int poly_content(const Poly& a);          // gcd of coefficients, >= 0
Poly poly_primitive_part(const Poly& a);  // a / content, leading coeff sign kept
Poly poly_gcd(const Poly& a, const Poly& b);  // primitive, positive leading coeff
Rat poly_eval(const Poly& a, const Rat& x);

std::string poly_str(const Poly& a);  // human-readable, ascending powers of q

// Sparse Laurent polynomial: exponent -> nonzero coefficient.
struct LaurentPoly {
  std::map<long, Int> terms;

  LaurentPoly() = default;
  static LaurentPoly constant(const Int& c) {
    LaurentPoly p;
    if (c != 0) p.terms[0] = c;
    return p;
  }
  static LaurentPoly monomial(long e, const Int& c) {
    LaurentPoly p;
    if (c != 0) p.terms[e] = c;
    return p;
  }
  bool is_zero() const { return terms.empty(); }
  long min_exp() const { return terms.begin()->first; }
  long max_exp() const { return terms.rbegin()->first; }
  void add_term(long e, const Int& c);
  bool operator==(const LaurentPoly& o) const { return terms == o.terms; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
};

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_neg(const LaurentPoly& a);
Rat laurent_eval(const LaurentPoly& a, const Rat& x);  // x != 0
std::string laurent_str(const LaurentPoly& a);

// Splits a Laurent polynomial as q^shift * poly with nonzero constant term.
// Zero input gives shift 0 and the zero polynomial.
void laurent_split(const LaurentPoly& a, long& shift, Poly& poly);
LaurentPoly poly_to_laurent(const Poly& p, long shift = 0);

}  // namespace seminormal
