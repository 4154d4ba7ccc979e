// Specht module action, straightening against the Murphy oracle, forms.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seminormal/seminormal.hpp"
#include "seminormal/verify.hpp"

using namespace seminormal;

namespace {

// All row-standard tableaux of a shape.
std::vector<Tableau> row_standard_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  int n = shape.n();
  std::vector<int> values(n);
  for (int i = 0; i < n; ++i) values[i] = i + 1;
  std::vector<std::vector<int>> rows(shape.rows());
  // choose sorted subsets row by row
  std::function<void(int, std::vector<int>&)> rec = [&](int r, std::vector<int>& pool) {
    if (r == shape.rows()) {
      out.push_back(Tableau(shape, rows));
      return;
    }
    int len = shape.parts[r];
    std::vector<int> idx(len);
    for (int i = 0; i < len; ++i) idx[i] = i;
    while (true) {
      rows[r].clear();
      std::vector<int> rest;
      std::vector<bool> used(pool.size(), false);
      for (int i : idx) used[i] = true;
      for (size_t i = 0; i < pool.size(); ++i)
        (used[i] ? rows[r] : rest).push_back(pool[i]);
      rec(r + 1, rest);
      int p = len - 1;
      int limit = static_cast<int>(pool.size());
      while (p >= 0 && idx[p] == limit - len + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int t = p + 1; t < len; ++t) idx[t] = idx[t - 1] + 1;
    }
  };
  rec(0, values);
  return out;
}

}  // namespace

TEST_CASE("generator action on small displayed cases") {
  RatFunc q = RatFunc::q_power(1);
  Partition shape21 = parse_partition("2,1");
  SpechtModule m21(shape21);
  Tableau top = superstandard(shape21);
  // e_{t^lambda} T_1 = q e (1 and 2 share a row)
  CHECK(m21.act_gen(SpechtVector::basis_vector(top), 1) ==
        specht_scale(SpechtVector::basis_vector(top), q));
  // e_{(1,2/3)} T_2 = e_{(1,3/2)}
  Tableau t2 = parse_tableau(shape21, "1,3/2");
  CHECK(m21.act_gen(SpechtVector::basis_vector(top), 2) == SpechtVector::basis_vector(t2));

  // shape (2,2): e_{(1,3/2,4)} T_2 = q e_{top} + (q-1) e_{(1,3/2,4)}
  Partition shape22 = parse_partition("2,2");
  SpechtModule m22(shape22);
  Tableau t22 = parse_tableau(shape22, "1,3/2,4");
  SpechtVector img = m22.act_gen(SpechtVector::basis_vector(t22), 2);
  SpechtVector expected(shape22);
  expected.add_term(superstandard(shape22), q);
  expected.add_term(t22, q - RatFunc::one());
  CHECK(img == expected);
}

TEST_CASE("straightening the first violating case via the Garnir relation") {
  Partition shape = parse_partition("2,2");
  SpechtModule module(shape);
  // e_{(1,3/2,4)} T_1 = e_{(2,3/1,4)} which straightens.
  Tableau t = parse_tableau(shape, "1,3/2,4");
  SpechtVector img = module.act_gen(SpechtVector::basis_vector(t), 1);
  SpechtVector expected(shape);
  expected.add_term(parse_tableau(shape, "1,3/2,4"), -RatFunc::one());
  expected.add_term(parse_tableau(shape, "1,2/3,4"), -RatFunc::one());
  CHECK(img == expected);
}

TEST_CASE("straightening agrees with the oracle on every row-standard tableau") {
  for (int n = 2; n <= 5; ++n) {
    const MurphyOracle& oracle = MurphyOracle::get(n);
    for (const Partition& shape : partitions_of(n)) {
      SpechtModule module(shape);
      for (const Tableau& u : row_standard_tableaux(shape)) {
        auto expected = oracle.straighten(shape, u);
        const SpechtVector& got = module.straighten(u);
        CHECK(got.terms.size() == expected.size());
        for (const auto& [t, c] : expected) CHECK(got.coeff(t) == c);
      }
    }
  }
}

TEST_CASE("action matrices agree with the oracle") {
  for (int n = 2; n <= 5; ++n) {
    const MurphyOracle& oracle = MurphyOracle::get(n);
    for (const Partition& shape : partitions_of(n)) {
      SpechtModule module(shape);
      for (int i = 1; i < n; ++i)
        CHECK(module.action_matrix(i) == oracle.action_matrix(shape, i));
    }
  }
}

TEST_CASE("act_word is independent of the reduced word and satisfies the quadratic rule") {
  Partition shape = parse_partition("3,2");
  SpechtModule module(shape);
  SplitMix rng(17);
  RatFunc q = RatFunc::q_power(1);
  for (int trial = 0; trial < 10; ++trial) {
    SpechtVector v(shape);
    for (const Tableau& t : module.basis())
      v.add_term(t, RatFunc::from_int(static_cast<long>(rng.below(5)) - 2));
    CHECK(module.act_word(v, Permutation::identity(5)) == v);
    for (int i = 1; i < 5; ++i) {
      SpechtVector once = module.act_gen(v, i);
      SpechtVector twice = module.act_gen(once, i);
      CHECK(twice == specht_add(specht_scale(once, q - RatFunc::one()), specht_scale(v, q)));
    }
    // T_1 T_2 T_1 = T_2 T_1 T_2 as operators
    auto lhs = module.act_gen(module.act_gen(module.act_gen(v, 1), 2), 1);
    auto rhs = module.act_gen(module.act_gen(module.act_gen(v, 2), 1), 2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("act_hecke expands row sums termwise") {
  Partition shape = parse_partition("3,2,2");
  SpechtModule module(shape);
  SpechtVector e = SpechtVector::basis_vector(superstandard(shape));
  HeckeElement r2 = row_sum_element(shape, 2);
  SpechtVector lhs = module.act_hecke(e, r2);
  SpechtVector rhs = e;
  rhs = specht_add(rhs, module.act_hecke(e, t_range(7, 3, 4)));
  CHECK(lhs == rhs);
}

TEST_CASE("jm_action eigenvalues on the top vector") {
  Partition shape = parse_partition("3,2");
  SpechtModule module(shape);
  Tableau top = superstandard(shape);
  SpechtVector e = SpechtVector::basis_vector(top);
  CHECK(module.jm_action(e, 1).is_zero());
  for (int m = 1; m <= 5; ++m) {
    RatFunc expected = quantum_int(content(top.node_of(m)));
    CHECK(module.jm_action(e, m) == specht_scale(e, expected));
  }
}

TEST_CASE("bilinear form: oracle route and seminormal route agree") {
  for (int n = 2; n <= 5; ++n) {
    const MurphyOracle& oracle = MurphyOracle::get(n);
    for (const Partition& shape : partitions_of(n)) {
      SpechtModule module(shape);
      BaseChange bc = base_change(module, Method::Fast);
      // <e_lambda, e_lambda> = prod [lambda_i]!
      RatFunc expected = RatFunc::one();
      for (int p : shape.parts) expected *= quantum_factorial(p);
      Tableau top = superstandard(shape);
      CHECK(oracle.form(shape, top, top) == expected);
      for (const Tableau& s : module.basis())
        for (const Tableau& t : module.basis()) {
          RatFunc via_oracle = oracle.form(shape, s, t);
          RatFunc via_bc = bilinear_form(module, bc, SpechtVector::basis_vector(s),
                                         SpechtVector::basis_vector(t));
          CHECK(via_oracle == via_bc);
        }
    }
  }
}

TEST_CASE("self-adjointness of generators under the form, randomized") {
  SplitMix rng(23);
  for (const char* sh : {"2,1", "2,2", "3,1,1"}) {
    Partition shape = parse_partition(sh);
    SpechtModule module(shape);
    BaseChange bc = base_change(module, Method::Fast);
    for (int trial = 0; trial < 6; ++trial) {
      SpechtVector u(shape), v(shape);
      for (const Tableau& t : module.basis()) {
        u.add_term(t, RatFunc::from_int(static_cast<long>(rng.below(5)) - 2));
        v.add_term(t, RatFunc::from_int(static_cast<long>(rng.below(5)) - 2));
      }
      for (int i = 1; i < module.n(); ++i)
        CHECK(bilinear_form(module, bc, module.act_gen(u, i), v) ==
              bilinear_form(module, bc, u, module.act_gen(v, i)));
    }
  }
}

TEST_CASE("Gram matrices are symmetric and nondegenerate for n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (const Partition& shape : partitions_of(n)) {
      SpechtModule module(shape);
      BaseChange bc = base_change(module, Method::Fast);
      auto gram = gram_matrix(module, bc);
      int dim = module.dim();
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) CHECK(gram[i][j] == gram[j][i]);
      // determinant of the Gram matrix is prod gamma_t, nonzero over K
      RatFunc det = RatFunc::one();
      for (const auto& g : bc.gammas) {
        CHECK_FALSE(g.is_zero());
        det *= g;
      }
      CHECK_FALSE(det.is_zero());
      // Gram entries lie in A
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) CHECK(gram[i][j].is_laurent());
    }
}

TEST_CASE("gram matrix of shape (2,1) against the oracle") {
  Partition shape = parse_partition("2,1");
  SpechtModule module(shape);
  BaseChange bc = base_change(module, Method::Fast);
  auto gram = gram_matrix(module, bc);
  const MurphyOracle& oracle = MurphyOracle::get(3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(gram[i][j] == oracle.form(shape, module.tableau_at(i), module.tableau_at(j)));
}
