#include <doctest.h>

#include <algorithm>

#include "dhs/monomod.hpp"
#include "dhs/prng.hpp"
#include "dhs/weyl.hpp"

using namespace dhs;

TEST_CASE("coroot pairings") {
  CHECK(coroot_pairing(Weight({1, -1}), Root(0, 1)) == 2);
  CHECK(coroot_pairing(Weight({0, 0, 0}), Root(2, 0)) == 0);
  CHECK(coroot_pairing(Weight({2, -1, -1}), Root(1, 2)) == 0);
}

TEST_CASE("root bookkeeping under the lower-triangular convention") {
  CHECK(Root(1, 0).positive());
  CHECK_FALSE(Root(0, 1).positive());
  CHECK(Root(3, 0).height() == 3);
  CHECK(simple_root(0) == Root(1, 0));
  CHECK(simple_root(0).is_simple());
  CHECK_FALSE(Root(2, 0).is_simple());
  CHECK(static_cast<int>(positive_roots(3).size()) == 6);
  CHECK(static_cast<int>(all_roots(3).size()) == 12);
  CHECK_THROWS_AS(Root(1, 1), std::invalid_argument);
}

TEST_CASE("dot action basics") {
  Weight lambda({3, -1, 2});
  CHECK(dot_action(WeylElement::identity(2), lambda) == lambda);
  // reflections are involutions for the dot action
  SplitMix64 rng(5);
  for (int d = 1; d <= 3; ++d) {
    for (int s = 0; s < d; ++s) {
      WeylElement w = WeylElement::simple_reflection(d, s);
      for (int t = 0; t < 10; ++t) {
        Weight mu = Weight::zero(d);
        for (auto& v : mu.m) v = static_cast<i64>(rng.below(11)) - 5;
        CHECK(dot_action(w, dot_action(w, mu)) == mu);
      }
    }
  }
}

TEST_CASE("dot chains match the extremal monomial weights") {
  // the DERIVED cross-check that pins the rho and positivity conventions
  for (int d = 1; d <= 3; ++d) {
    for (int j = 0; j <= d - 1; ++j) {
      ModuleSpace M = ModuleSpace::reduced_local_cohomology(d, j, 5, 10);
      CHECK(dot_chain(d, d - j) == weight_of(extremal_monomial(M)));
    }
  }
  CHECK(dot_chain(1, 1) == Weight({1, -1}));
  CHECK(dot_chain(2, 2) == Weight({2, -1, -1}));
  CHECK(dot_chain(2, 1) == Weight({0, 1, -1}));
}

TEST_CASE("maximal parabolic from pairings") {
  CHECK(maximal_parabolic_for(Weight({0, 1, 2})) == ParabolicData::full(2));
  CHECK(maximal_parabolic_for(Weight({1, -1})) == ParabolicData::borel(1));
  // d=2 with exactly one nonnegative simple pairing
  ParabolicData P = maximal_parabolic_for(Weight({0, 0, -1}));
  CHECK(P.composition() == std::vector<int>{2, 1});
  // the extremal weights recover their own parabolic
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(2, 0, 5, 10);
  CHECK(maximal_parabolic_for(weight_of(extremal_monomial(M))).composition() ==
        std::vector<int>{1, 2});
}

TEST_CASE("composition and subset round-trip") {
  for (int d = 1; d <= 4; ++d) {
    for (i64 mask = 0; mask < (i64{1} << d); ++mask) {
      std::vector<bool> I(d);
      for (int s = 0; s < d; ++s) I[s] = (mask >> s) & 1;
      ParabolicData P = ParabolicData::from_subset(d, I);
      CHECK(P.subset() == I);
      CHECK(ParabolicData::from_composition(d, P.composition()) == P);
      i64 total = 0;
      for (int c : P.composition()) total += c;
      CHECK(total == d + 1);
    }
  }
}

TEST_CASE("coset strata") {
  auto full = weyl_coset_data(ParabolicData::full(2));
  REQUIRE(full.size() == 1);
  CHECK(full[0].w == WeylElement::identity(2));
  CHECK(full[0].ubw_roots.empty());

  auto rank1 = weyl_coset_data(ParabolicData::borel(1));
  REQUIRE(rank1.size() == 2);
  CHECK(rank1[0].ubw_roots.empty());
  CHECK(rank1[1].ubw_roots == std::vector<Root>{Root(1, 0)});
  CHECK(rank1[1].w.length() == 1);
}

TEST_CASE("|W^I| * |W_I| = (d+1)!") {
  auto factorial = [](int n) {
    i64 f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (int d = 1; d <= 4; ++d) {
    for (i64 mask = 0; mask < (i64{1} << d); ++mask) {
      std::vector<bool> I(d);
      for (int s = 0; s < d; ++s) I[s] = (mask >> s) & 1;
      ParabolicData P = ParabolicData::from_subset(d, I);
      i64 levi = 1;
      for (int c : P.composition()) levi *= factorial(c);
      CHECK(static_cast<i64>(weyl_coset_data(P).size()) * levi == factorial(d + 1));
    }
  }
}

TEST_CASE("length equals the inversion count of U_{B,w}") {
  for (const CosetStratum& st : weyl_coset_data(ParabolicData::borel(3)))
    CHECK(st.w.length() == static_cast<int>(st.ubw_roots.size()));
}

TEST_CASE("Ad transport by permutation representatives") {
  GeneratorLabel y{Root(1, 0), GeneratorKind::Lowering};
  AdImage same = ad_weyl(WeylElement::identity(1), y);
  CHECK(same.sign == 1);
  CHECK(same.label.unit() == y.unit());

  // the rank-1 reflection swaps lowering and raising
  WeylElement s = WeylElement::simple_reflection(1, 0);
  AdImage moved = ad_weyl(s, y);
  CHECK(moved.sign == 1);
  CHECK(moved.label.kind == GeneratorKind::Raising);
  CHECK(moved.label.unit() == Root(1, 0));

  // applying w then w^{-1} restores the generator with sign +1
  SplitMix64 rng(17);
  for (const WeylElement& w : weyl_group(2)) {
    for (const Root& g : positive_roots(2)) {
      GeneratorLabel lab{g, GeneratorKind::Lowering};
      AdImage once = ad_weyl(w, lab);
      AdImage back = ad_weyl(w.inverse(), once.label);
      CHECK(back.sign * once.sign == 1);
      CHECK(back.label.unit() == lab.unit());
      CHECK(back.label.kind == lab.kind);
    }
  }
}
