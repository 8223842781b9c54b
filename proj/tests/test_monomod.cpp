#include <doctest.h>

#include <algorithm>

#include "dhs/fgp.hpp"
#include "dhs/monomod.hpp"
#include "dhs/oracles.hpp"
#include "dhs/prng.hpp"

using namespace dhs;

TEST_CASE("root action on torus characters") {
  ModuleSpace M = ModuleSpace::torus_characters(2, 5, 10);
  // L_{(0,1)} Xi_(2,-1,-1) = -1 * Xi_(3,-2,-1)
  ActionResult r = act_root(M, Root(0, 1), monomial({2, -1, -1}));
  REQUIRE(r.value.size() == 1);
  CHECK(r.value.at({3, -2, -1}) == 4);
  CHECK_FALSE(r.overflow);

  // zero coefficient when the divided slot carries exponent 0
  CHECK(act_root(M, Root(0, 1), monomial({1, 0, -1})).value.empty());

  // infinitesimal torus: diag(t) acts by sum m_i t_i
  LieMatrix t{{{0, 0}, 2}, {{1, 1}, 3}, {{2, 2}, 1}};
  Element v = monomial({1, 0, -1});
  ActionResult tr = act_lie(M, t, v);
  REQUIRE(tr.value.size() == 1);
  CHECK(tr.value.at({1, 0, -1}) == mod_canon(2 * 1 + 3 * 0 + 1 * (-1), 5));
}

TEST_CASE("divided-power action: pinned examples and the order-1 degeneration") {
  ModuleSpace M1 = ModuleSpace::torus_characters(1, 5, 10);
  ActionResult a = act_divided(M1, DividedPower{Root(1, 0), 2}, monomial({2, -2}));
  REQUIRE(a.value.size() == 1);
  CHECK(a.value.at({0, 0}) == 1);  // C(2,2)

  ModuleSpace M2 = ModuleSpace::torus_characters(2, 5, 10);
  ActionResult b = act_divided(M2, DividedPower{Root(0, 1), 2}, monomial({0, -2, 2}));
  REQUIRE(b.value.size() == 1);
  CHECK(b.value.at({2, -4, 2}) == 3);  // C(-2,2) = 3

  SplitMix64 rng(31);
  for (int t = 0; t < 40; ++t) {
    Exponents n{static_cast<i64>(rng.below(9)) - 4, static_cast<i64>(rng.below(9)) - 4, 0};
    n[2] = -n[0] - n[1];
    int i = static_cast<int>(rng.below(3));
    if (i == 0) continue;
    Root unit(i, 0);
    CHECK(act_divided(M2, DividedPower{unit, 1}, monomial(n)).value ==
          act_root(M2, unit, monomial(n)).value);
  }
}

TEST_CASE("iterate-then-divide oracle equivalence (sample)") {
  for (i64 p : {5, 7}) {
    for (int d = 1; d <= 2; ++d) {
      ModuleSpace M = ModuleSpace::torus_characters(d, p, 6);
      for (const Exponents& mono : M.basis())
        for (const Root& unit : all_roots(d))
          for (i64 n = 0; n <= 12; ++n)
            CHECK(lucas_binom(mono[unit.j], n, p) ==
                  oracle::iterate_then_divide(mono, unit, n, p));
    }
  }
}

TEST_CASE("torus binomial action") {
  ModuleSpace M = ModuleSpace::torus_characters(2, 5, 10);
  Element v = monomial({2, -1, -1});
  CHECK(act_torus_binom(M, TorusBinom{simple_root(0), 0}, v) == v);
  // <mu, alpha^vee> = p kills the order-1 binomial
  ModuleSpace M1 = ModuleSpace::torus_characters(1, 5, 10);
  Element w = monomial({5, -5});
  CHECK(act_torus_binom(M1, TorusBinom{Root(0, 1), 1}, w).empty());
  // C(3,2) = 3 on the alpha_{0,1} pairing of (2,-1,-1)
  Element u = act_torus_binom(M, TorusBinom{Root(0, 1), 2}, v);
  REQUIRE(u.size() == 1);
  CHECK(u.at({2, -1, -1}) == 3);
}

TEST_CASE("weight additivity of divided generators") {
  ModuleSpace M = ModuleSpace::torus_characters(2, 7, 8);
  SplitMix64 rng(77);
  auto basis = M.basis();
  for (int t = 0; t < 100; ++t) {
    const Exponents& n = basis[rng.below(basis.size())];
    int ui = static_cast<int>(rng.below(3)), uj = static_cast<int>(rng.below(3));
    if (ui == uj) continue;
    Root unit(ui, uj);
    i64 ord = 1 + static_cast<i64>(rng.below(4));
    ActionResult r = act_divided(M, DividedPower{unit, ord}, monomial(n));
    for (const auto& [m, c] : r.value) {
      (void)c;
      CHECK(weight_of(m) == weight_of(n) + ord * unit.as_weight(2));
    }
  }
}

TEST_CASE("divided-power composition law as operators") {
  for (i64 p : {5, 7}) {
    ModuleSpace M = ModuleSpace::torus_characters(1, p, 40);
    for (i64 a = 0; a <= p; ++a) {
      for (i64 b = 0; a + b <= 2 * p; ++b) {
        for (i64 k = -6; k <= 6; ++k) {
          Element v = monomial({k, -k});
          ActionResult two =
              act_divided(M, DividedPower{Root(0, 1), a},
                          act_divided(M, DividedPower{Root(0, 1), b}, v).value);
          ActionResult one = act_divided(M, DividedPower{Root(0, 1), a + b}, v);
          vec_scale(one.value, lucas_binom(a + b, a, p), p);
          REQUIRE_FALSE(two.overflow);
          CHECK(two.value == one.value);
        }
      }
    }
  }
}

TEST_CASE("local cohomology bases") {
  CHECK(ModuleSpace::reduced_local_cohomology(2, 0, 5, 2).basis() ==
        std::vector<Exponents>{{2, -1, -1}});
  CHECK(ModuleSpace::reduced_local_cohomology(1, 0, 5, 3).basis() ==
        std::vector<Exponents>{{1, -1}, {2, -2}, {3, -3}});
  CHECK(ModuleSpace::reduced_local_cohomology(1, 0, 5, 0).basis().empty());
  CHECK_THROWS_AS(ModuleSpace::reduced_local_cohomology(2, 2, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(ModuleSpace::reduced_local_cohomology(1, -1, 5, 3), std::invalid_argument);

  // brute-force box oracle
  for (int d = 1; d <= 3; ++d)
    for (int j = 0; j <= d - 1; ++j)
      for (i64 W : {2, 4})
        CHECK(ModuleSpace::reduced_local_cohomology(d, j, 5, W).basis() ==
              oracle::enumerate_sector(d, j, 0, W));
}

TEST_CASE("sector quotient kills the right monomials") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(2, 0, 5, 10);
  CHECK(M.classify({3, -2, -1}) == MonomialClass::Alive);
  CHECK(M.classify({1, 0, -1}) == MonomialClass::Killed);   // n_1 >= 0
  CHECK(M.classify({-1, -1, 2}) == MonomialClass::Killed);
  CHECK(M.classify({11, -10, -1}) == MonomialClass::OutOfWindow);
  // raising out of the sector is exactly zero, not overflow
  ActionResult r = act_root(M, Root(1, 0), monomial({2, -1, -1}));
  CHECK(r.value.empty());
  CHECK_FALSE(r.overflow);
}

TEST_CASE("reduced parts") {
  ReducedPart same = reduced_part(ModuleSpace::local_cohomology(2, 0, 5, 4));
  CHECK(same.excluded.empty());  // H^2(P^2, O) = 0
  CHECK(oracle::serre_top_cohomology_count(2, 0, 4) == 0);

  ModuleSpace full = ModuleSpace::local_cohomology(1, 0, 5, 6, -2);
  ReducedPart red = reduced_part(full);
  CHECK(red.excluded == std::vector<Exponents>{{-1, -1}});
  CHECK(static_cast<i64>(full.basis().size()) ==
        static_cast<i64>(red.space.basis().size()) + 1);
  CHECK(oracle::serre_top_cohomology_count(1, -2, 6) == 1);

  ReducedPart zero = reduced_part(ModuleSpace::local_cohomology(1, 0, 5, 0, -2));
  CHECK(zero.space.basis().empty());
  CHECK_THROWS_AS(reduced_part(ModuleSpace::torus_characters(1, 5, 3)), std::invalid_argument);
}

TEST_CASE("dual-basis pairing") {
  ParabolicData P = ParabolicData::from_composition(2, {1, 2});
  auto radical = P.radical_roots();
  REQUIRE(radical.size() == 2);
  Root g = radical[0];
  CHECK(pairing({{g, 2}}, {{g, 2}}, P) == 1);
  CHECK(pairing({{g, 2}}, {{g, 3}}, P) == 0);
  CHECK_THROWS_AS(pairing({{Root(2, 1), 1}}, {{Root(2, 1), 1}}, P), std::invalid_argument);

  // Gram matrix is the identity over the window of multidegrees
  std::vector<std::map<Root, i64>> degrees;
  for (i64 a = 0; a <= 2; ++a)
    for (i64 b = 0; b <= 2; ++b) degrees.push_back({{radical[0], a}, {radical[1], b}});
  for (size_t i = 0; i < degrees.size(); ++i)
    for (size_t j = 0; j < degrees.size(); ++j)
      CHECK(pairing(degrees[i], degrees[j], P) == (i == j ? 1 : 0));
}

TEST_CASE("graded duals keep labels and dimensions") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(1, 0, 5, 5);
  auto dims = M.weight_dims();
  auto dual = graded_dual_dims(dims);
  CHECK(dual == dims);
  CHECK(graded_dual_dims(dual) == dims);  // (M')' = M on the truncation
  CHECK(graded_dual_dims({}).empty());
}

TEST_CASE("extremal monomials are highest weight vectors") {
  for (int d = 1; d <= 3; ++d) {
    for (int j = 0; j <= d - 1; ++j) {
      ModuleSpace M = ModuleSpace::reduced_local_cohomology(d, j, 5, 12);
      Element v = monomial(extremal_monomial(M));
      CHECK(annihilated_by_all_raising(M, v, 6));
      // and non-extremal monomials are not
      Exponents other = extremal_monomial(M);
      other[j] -= 1;
      other[d] -= 1;
      if (M.classify(other) == MonomialClass::Alive)
        CHECK_FALSE(annihilated_by_all_raising(M, monomial(other), 6));
    }
  }
}

TEST_CASE("elementary substitutions") {
  // within the sector the series truncates exactly
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(2, 0, 5, 10);
  ActionResult r = act_elementary(M, 1, 2, 1, monomial({2, -1, -1}));
  REQUIRE_FALSE(r.overflow);
  // (X_2 + X_1)^{-1}: only k=0 survives the quotient
  CHECK(r.value == monomial({2, -1, -1}));

  // deeper denominators keep the terms the quotient allows: (X_2+X_1)^{-3}
  ActionResult deep = act_elementary(M, 1, 2, 1, monomial({5, -2, -3}));
  REQUIRE_FALSE(deep.overflow);
  Element expect = monomial({5, -2, -3});
  vec_axpy(expect, mod_canon(-3, 5), monomial({5, -1, -4}), 5);
  CHECK(deep.value == expect);

  ModuleSpace T = ModuleSpace::torus_characters(2, 5, 6);
  ActionResult inf = act_elementary(T, 0, 1, 2, monomial({0, -2, 2}));
  CHECK(inf.overflow);  // the geometric series leaves the window
  // the in-window terms match the binomial series directly
  for (const auto& [n, c] : inf.value) {
    i64 k = n[0];
    CHECK(c == mod_canon(lucas_binom(-2, k, 5) * pow_mod(2, k, 5), 5));
  }
}

TEST_CASE("basis dump format") {
  CHECK(ModuleSpace::reduced_local_cohomology(1, 0, 5, 3).dump_basis() ==
        "# d=1 j=0 W=3 p=5\n1 -1\n2 -2\n3 -3\n");
}
