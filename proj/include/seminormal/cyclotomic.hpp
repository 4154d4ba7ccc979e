// Cyclotomic polynomials, factorization of denominators into cyclotomics,
// and exact arithmetic in Q[q]/(Phi_e) for root-of-unity specialization.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "seminormal/ratfunc.hpp"

namespace seminormal {

// The d-th cyclotomic polynomial, d >= 1. Cached.
const Poly& cyclotomic_poly(long d);

struct CyclotomicFactorization {
  Rat unit;                                  // rational scalar
  long qpower = 0;                           // power of q split off
  std::vector<std::pair<long, int>> factors; // (d >= 2, multiplicity), d ascending

  LaurentPoly reassemble() const;
};

// Result of attempting to factor a Laurent polynomial as
// unit * q^qpower * prod Phi_d^mult. When no such factorization exists the
// residual non-cyclotomic factor is reported.
struct CyclotomicFactorOutcome {
  bool is_cyclotomic_product = false;
  CyclotomicFactorization factorization;
  Poly residual;  // nontrivial only on failure
};

CyclotomicFactorOutcome factor_cyclotomic(const LaurentPoly& p);

// Multiset inclusion of cyclotomic factors: every factor of a divides b.
bool cyclotomic_divides(const CyclotomicFactorization& a, const CyclotomicFactorization& b);

// The field F = Q[q]/(Phi_e); elements are coefficient vectors of length
// deg Phi_e over Q.
class CyclotomicField {
 public:
  using Elem = std::vector<Rat>;

  explicit CyclotomicField(long e);

  long order() const { return e_; }
  int degree() const { return deg_; }

  Elem zero() const { return Elem(deg_, Rat(0)); }
  Elem one() const;
  Elem from_rat(const Rat& c) const;
  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;  // a != 0
  Elem q_class() const;           // the class of q
  Elem q_power_class(long k) const;

  Elem reduce_poly(const Poly& p) const;
  Elem reduce_laurent(const LaurentPoly& p) const;

  // Class of f in Q[q]/(Phi_e), or nullopt when the denominator vanishes at
  // the root of unity (f has a pole at zeta_e).
  std::optional<Elem> reduce(const RationalFunction& f) const;

 private:
  long e_;
  int deg_;
  Poly phi_;
};

}  // namespace seminormal
