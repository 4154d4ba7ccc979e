// Cyclotomic polynomials, factorization outcomes, and Q[q]/(Phi_e) arithmetic.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seminormal/cyclotomic.hpp"
#include "seminormal/verify.hpp"

using namespace seminormal;

namespace {
Poly mk(std::vector<long> cs) {
  Poly p;
  for (long c : cs) p.coeffs.push_back(Int(c));
  p.trim();
  return p;
}
}  // namespace

TEST_CASE("small cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == mk({-1, 1}));
  CHECK(cyclotomic_poly(2) == mk({1, 1}));
  CHECK(cyclotomic_poly(3) == mk({1, 1, 1}));
  CHECK(cyclotomic_poly(6) == mk({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == mk({1, 0, -1, 0, 1}));
}

TEST_CASE("factor_cyclotomic on quantum integers") {
  // [6]_q = Phi_2 Phi_3 Phi_6
  auto out = factor_cyclotomic(quantum_int(6).as_laurent());
  REQUIRE(out.is_cyclotomic_product);
  CHECK(out.factorization.qpower == 0);
  CHECK(out.factorization.unit == Rat(1));
  std::vector<std::pair<long, int>> expected = {{2, 1}, {3, 1}, {6, 1}};
  CHECK(out.factorization.factors == expected);

  auto qcubed = factor_cyclotomic(LaurentPoly::monomial(3, 1));
  REQUIRE(qcubed.is_cyclotomic_product);
  CHECK(qcubed.factorization.qpower == 3);
  CHECK(qcubed.factorization.factors.empty());

  LaurentPoly bad;
  bad.add_term(0, Int(2));
  bad.add_term(2, Int(1));
  auto fail = factor_cyclotomic(bad);
  CHECK_FALSE(fail.is_cyclotomic_product);
  CHECK_FALSE(fail.residual.is_zero());

  CHECK_THROWS(factor_cyclotomic(LaurentPoly{}));
}

TEST_CASE("factorizations reassemble exactly for [k]_q, k <= 40") {
  for (long k = 1; k <= 40; ++k) {
    auto out = factor_cyclotomic(quantum_int(k).as_laurent());
    REQUIRE(out.is_cyclotomic_product);
    CHECK(out.factorization.reassemble() == quantum_int(k).as_laurent());
  }
}

TEST_CASE("reduction mod Phi_e") {
  CyclotomicField f3(3);
  // [3]_q reduces to zero at a primitive cube root of unity.
  auto v = f3.reduce(quantum_int(3));
  REQUIRE(v.has_value());
  CHECK(f3.is_zero(*v));
  // 1/[2]_q reduces to -q: (q+1)(-q) = -q^2 - q = 1 mod Phi_3.
  auto inv2 = f3.reduce(quantum_int(2).inverse());
  REQUIRE(inv2.has_value());
  CyclotomicField::Elem expected = f3.neg(f3.q_class());
  CHECK(f3.is_zero(f3.sub(*inv2, expected)));
  // 1/[3]_q has a pole at zeta_3.
  CHECK_FALSE(f3.reduce(quantum_int(3).inverse()).has_value());
}

TEST_CASE("reduction is multiplicative when defined") {
  SplitMix rng(11);
  for (long e : {2L, 3L, 4L, 5L}) {
    CyclotomicField field(e);
    for (int trial = 0; trial < 30; ++trial) {
      RatFunc a = random_ratfunc(rng);
      RatFunc b = random_ratfunc(rng);
      auto ra = field.reduce(a);
      auto rb = field.reduce(b);
      auto rab = field.reduce(a * b);
      if (ra && rb && rab)
        CHECK(field.is_zero(field.sub(*rab, field.mul(*ra, *rb))));
    }
  }
}

TEST_CASE("field inversion in Q[q]/(Phi_e)") {
  for (long e : {2L, 3L, 4L, 5L, 7L, 12L}) {
    CyclotomicField field(e);
    SplitMix rng(e);
    for (int trial = 0; trial < 12; ++trial) {
      CyclotomicField::Elem a = field.zero();
      for (auto& c : a) c = Rat(static_cast<long>(rng.below(7)) - 3);
      if (field.is_zero(a)) continue;
      CHECK(field.is_zero(field.sub(field.mul(a, field.inv(a)), field.one())));
    }
  }
}
