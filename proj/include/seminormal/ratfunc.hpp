// Exact rational functions in q over Z: the coefficient field K.
// Canonical form: value = q^shift * num / den where num and den have nonzero
// constant terms, gcd(num, den) = 1 over Q, den has positive leading
// coefficient, and gcd(content(num), content(den)) = 1.
#pragma once

#include <string>

#include "seminormal/laurent.hpp"

namespace seminormal {

class RationalFunction {
 public:
  RationalFunction() : shift_(0), num_(), den_(Poly::one()) {}
  RationalFunction(long shift, Poly num, Poly den);
  /* implicit */ RationalFunction(long value) { *this = from_int(Int(value)); }

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return from_int(1); }
  static RationalFunction from_int(const Int& c);
  static RationalFunction from_rat(const Rat& c);
  static RationalFunction q_power(long k);  // q^k
  static RationalFunction from_laurent(const LaurentPoly& p);
  static RationalFunction from_poly(const Poly& p, long shift = 0);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  long shift() const { return shift_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  // True when the value lies in A = Z[q, q^-1].
  bool is_laurent() const { return den_.degree() == 0 && den_.coeff(0) == 1; }
  LaurentPoly as_laurent() const;  // requires is_laurent()

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;  // o != 0
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  bool operator==(const RationalFunction& o) const {
    return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction inverse() const;

  // Exact evaluation at a nonzero rational point.
  Rat eval(const Rat& x) const;

  std::string str() const;

 private:
  void normalize();

  long shift_;
  Poly num_;
  Poly den_;
};

using RatFunc = RationalFunction;

// Quantum integer [k]_q = (q^k - 1)/(q - 1), defined for any integer k.
RatFunc quantum_int(long k);
// [k]_q! = [1]_q [2]_q ... [k]_q, k >= 0.
RatFunc quantum_factorial(long k);

}  // namespace seminormal
