// Arbitrary-precision integer and rational scalars (GMP-backed).
#pragma once

#include <gmpxx.h>
#include <string>

namespace seminormal {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline std::string int_str(const Int& a) { return a.get_str(); }

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace seminormal
