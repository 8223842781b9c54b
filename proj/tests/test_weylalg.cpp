#include <doctest.h>

#include <algorithm>

#include "dhs/oracles.hpp"
#include "dhs/prng.hpp"
#include "dhs/weylalg.hpp"

using namespace dhs;

namespace {
const Root kVar(0, 1);

WeylOperator mono_op(i64 p, i64 m, i64 n, i64 c = 1) {
  return WeylOperator::term(p, c, m ? VarExp{{kVar, m}} : VarExp{},
                            n ? VarExp{{kVar, n}} : VarExp{});
}
}  // namespace

TEST_CASE("divided derivatives on chart monomials") {
  WeylOperator y = mono_op(5, 0, 1);
  ChartPoly r = y.apply(chart_monomial({{kVar, 3}}));
  REQUIRE(r.size() == 1);
  CHECK(r.at({{kVar, 2}}) == 3);

  WeylOperator yp = mono_op(5, 0, 5);
  ChartPoly s = yp.apply(chart_monomial({{kVar, 5}}));
  REQUIRE(s.size() == 1);
  CHECK(s.at({}) == 1);  // C(p,p) = 1

  WeylOperator y2 = mono_op(5, 0, 2);
  ChartPoly t = y2.apply(chart_monomial({{kVar, -1}}));
  REQUIRE(t.size() == 1);
  CHECK(t.at({{kVar, -3}}) == 1);  // C(-1,2) = 1
}

TEST_CASE("algebra product: y T = T y + 1") {
  for (i64 p : {5, 7}) {
    WeylOperator lhs = mono_op(p, 0, 1) * mono_op(p, 1, 0);
    WeylOperator rhs = mono_op(p, 1, 1) + WeylOperator::one(p);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("divided-power composition in the algebra") {
  for (i64 a = 0; a <= 6; ++a)
    for (i64 b = 0; b <= 6; ++b) {
      WeylOperator prod = mono_op(7, 0, a) * mono_op(7, 0, b);
      WeylOperator expect = mono_op(7, 0, a + b, lucas_binom(a + b, a, 7));
      CHECK(prod == expect);
    }
}

TEST_CASE("q-linearity levels") {
  CHECK(q_linearity_level(mono_op(5, 0, 1)) == 5);
  CHECK(q_linearity_level(mono_op(5, 0, 5)) == 25);
  CHECK(q_linearity_level(mono_op(5, 2, 0)) == 1);
  CHECK(q_linearity_level(mono_op(5, 0, 1), 0) == std::nullopt);  // bound exceeded
}

TEST_CASE("accepted q-levels commute with q-th powers on monomials") {
  for (i64 p : {5, 7}) {
    for (auto [m, n] : {std::pair<i64, i64>{2, 1}, {p - 1, p}, {1, 3}}) {
      WeylOperator op = mono_op(p, m, n);
      auto q = q_linearity_level(op);
      REQUIRE(q.has_value());
      WeylOperator tq = mono_op(p, *q, 0);
      for (i64 e = -12; e <= 12; ++e) {
        ChartPoly f = chart_monomial(e ? VarExp{{kVar, e}} : VarExp{});
        CHECK(op.apply(tq.apply(f)) == tq.apply(op.apply(f)));
      }
    }
  }
}

TEST_CASE("membership in the global operators") {
  for (i64 p : {5, 7}) {
    MembershipVerdict acc = membership_D(mono_op(p, 2, 1));
    CHECK(acc.accepted());
    CHECK(acc.q_level == p);

    MembershipVerdict top = membership_D(mono_op(p, p - 1, p));
    CHECK(top.accepted());
    CHECK(top.q_level == p * p);

    MembershipVerdict rej = membership_D(mono_op(p, p, 1));
    CHECK_FALSE(rej.accepted());
    REQUIRE(rej.witness.has_value());
    CHECK(rej.witness->at(kVar) == 2);  // first box input escaping

    // op(1) outside the constants
    MembershipVerdict mult = membership_D(mono_op(p, 1, 0));
    CHECK_FALSE(mult.accepted());
    REQUIRE(mult.witness.has_value());
    CHECK(mult.witness->empty());
  }
  CHECK_THROWS_AS(membership_D(WeylOperator::term(5, 1, {{kVar, -1}}, {})),
                  std::invalid_argument);
}

TEST_CASE("membership agrees with the two-chart oracle on random operators") {
  for (i64 p : {5, 7}) {
    SplitMix64 rng(400 + p);
    for (int trial = 0; trial < 40; ++trial) {
      WeylOperator op(p);
      int terms = 1 + static_cast<int>(rng.below(3));
      for (int t = 0; t < terms; ++t)
        op.add_term(1 + static_cast<i64>(rng.below(static_cast<u64>(p - 1))),
                    {{kVar, static_cast<i64>(rng.below(static_cast<u64>(p * p)))}},
                    {{kVar, static_cast<i64>(rng.below(static_cast<u64>(p + 1)))}});
      if (op.is_zero()) continue;
      CHECK(membership_D(op).accepted() == oracle::two_chart_regular(op));
    }
  }
}

TEST_CASE("binomial operator identity") {
  CHECK(check_binom_identity(1, 5, 20));
  CHECK(check_binom_identity(2, 5, 20));
  CHECK(check_binom_identity(5, 5, 20));
  CHECK(check_binom_identity(7, 7, 20));
}

TEST_CASE("subalgebra generator families") {
  ParabolicData P = ParabolicData::from_composition(2, {1, 2});
  auto torus = subalgebra_generators(Family::T, P, {3, 3}, 5);
  bool has_ty = std::any_of(torus.begin(), torus.end(), [](const WeylOperator& op) {
    return op == WeylOperator::term(5, 1, {{Root(0, 1), 1}}, {{Root(0, 1), 1}});
  });
  CHECK(has_ty);  // T_alpha y_alpha realizes 2 h_alpha

  auto opp = subalgebra_generators(Family::U_P_minus, P, {5, 5}, 5);
  bool has_tp = std::any_of(opp.begin(), opp.end(), [](const WeylOperator& op) {
    return op == WeylOperator::term(5, 1, {{Root(0, 1), 4}}, {{Root(0, 1), 5}});
  });
  CHECK(has_tp);  // T^{p-1} y^{[p]}
  for (const WeylOperator& op : opp) CHECK(membership_D(op).accepted());

  CHECK(subalgebra_generators(Family::U_P, P, {0, 0}, 5).empty());
}

TEST_CASE("operator grammar round trip") {
  for (const char* text : {
           "2 * T(0,1)^3 * y(0,1)^[2] + 4 * y(1,2)^[1]",
           "T(0,1)^1",
           "y(0,2)^[7]",
           "3",
           "1 * T(1,2)^2 * y(1,2)^[2] + 1 * T(0,1)^1",
       }) {
    WeylOperator op = WeylOperator::parse(text, 5);
    CHECK(WeylOperator::parse(op.to_string(), 5) == op);
    CHECK(WeylOperator::parse(op.to_string(), 5).to_string() == op.to_string());
  }
  // canonical order: terms sorted by (coefficient multidegree, derivative orders)
  CHECK(WeylOperator::parse("2 * T(0,1)^3 * y(0,1)^[2] + 4 * y(1,2)^[1]", 5).to_string() ==
        "4 * y(1,2)^[1] + 2 * T(0,1)^3 * y(0,1)^[2]");
  // coefficients reduce mod p and terms merge
  CHECK(WeylOperator::parse("3 + 4", 5).to_string() == "2");
  CHECK(WeylOperator::parse("5", 5).is_zero());
  CHECK_THROWS_AS(WeylOperator::parse("T(0,1 + 2", 5), std::invalid_argument);
  CHECK_THROWS_AS(WeylOperator::parse("", 5), std::invalid_argument);
  CHECK_THROWS_AS(WeylOperator::parse("y(0,1)^[-1]", 5), std::invalid_argument);
}

TEST_CASE("closure generates the rank-1 local cohomology window") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(1, 0, 5, 8);
  std::vector<RealizedOp> gens;
  for (i64 n = 1; n <= 4; ++n)
    gens.push_back({"y^[" + std::to_string(n) + "]", {RealizedOp::Divided{Root(0, 1), n}}});
  ClosureResult closure = generate_submodule(M, gens, {{1, -1}});
  CHECK(closure.verified_window == 4);
  std::vector<Exponents> inside;
  for (const Exponents& n : closure.basis_monomials())
    if (n[0] <= closure.verified_window) inside.push_back(n);
  CHECK(inside == ModuleSpace::reduced_local_cohomology(1, 0, 5, 4).basis());
}

TEST_CASE("closure edge cases and confluence") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(2, 0, 5, 10);
  CHECK(generate_submodule(M, generation_operators(M), {}).span.rank() == 0);
  CHECK_THROWS_AS(generate_submodule(M, {}, {{20, -10, -10}}), std::invalid_argument);

  auto gens = generation_operators(M);
  ClosureResult a = generate_submodule(M, gens, generation_seeds(M));
  std::reverse(gens.begin(), gens.end());
  auto seeds = generation_seeds(M);
  std::reverse(seeds.begin(), seeds.end());
  ClosureResult b = generate_submodule(M, gens, seeds);
  CHECK(a.span == b.span);  // independent of application and seed order
}

TEST_CASE("generation seeds") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(2, 0, 5, 10);
  CHECK(generation_seeds(M) ==
        std::vector<Exponents>{{2, -1, -1}});
  ModuleSpace M1 = ModuleSpace::reduced_local_cohomology(2, 1, 5, 10);
  CHECK(generation_seeds(M1) == std::vector<Exponents>{{0, 1, -1}, {1, 0, -1}});
}

TEST_CASE("simplicity probe sanity") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(1, 0, 5, 12);
  // the extremal vector trivially generates itself
  ProbeResult r = simplicity_probe(M, probe_operators(M, 5), 5, 11);
  CHECK(r.pass);
  // with no generators the probe must fail and report witnesses
  ProbeResult none = simplicity_probe(M, {}, 3, 11);
  CHECK_FALSE(none.pass);
  CHECK_FALSE(none.failures.empty());
}
