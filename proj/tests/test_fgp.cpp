#include <doctest.h>

#include <set>

#include "dhs/fgp.hpp"
#include "dhs/oracles.hpp"
#include "dhs/prng.hpp"

using namespace dhs;

TEST_CASE("induced module shapes") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(1, 0, 5, 6);

  // I = the whole group needs a module with a full parabolic
  FgpModule whole = build_fgp_dual(ModuleSpace::torus_characters(1, 5, 4), PRep::trivial(), 1, 2,
                                   ParabolicData::full(1));
  CHECK(whole.summands() == 1);

  FgpModule F = build_fgp_dual(M, PRep::trivial(), 1, 2, ParabolicData::borel(1));
  CHECK(F.summands() == 3);
  std::map<i64, i64> dims = F.graded_dims();
  for (const auto& [deg, dim] : dims_by_pole(M)) CHECK(dims.at(deg) == 3 * dim);

  FgpModule doubled = build_fgp_dual(M, PRep::direct_sum(PRep::trivial(), PRep::trivial()), 1, 2,
                                     ParabolicData::borel(1));
  for (const auto& [deg, dim] : dims) CHECK(doubled.graded_dims().at(deg) == 2 * dim);

  // summand count always matches the coset count
  FgpModule F2 = build_fgp_dual(ModuleSpace::reduced_local_cohomology(2, 0, 5, 4),
                                PRep::trivial(), 2, 2, ParabolicData::from_composition(2, {1, 2}));
  CHECK(F2.summands() == bruhat_point_count(ParabolicData::from_composition(2, {1, 2}), 2));

  // the functor parabolic must sit inside the module's parabolic
  CHECK_THROWS_AS(build_fgp_dual(ModuleSpace::reduced_local_cohomology(2, 0, 5, 4),
                                 PRep::trivial(), 2, 2,
                                 ParabolicData::from_composition(2, {2, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_fgp_dual(M, PRep::trivial(), 2, 2, ParabolicData::borel(2)),
                  std::invalid_argument);
}

TEST_CASE("twisted action") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(1, 0, 5, 8);
  FgpModule F = build_fgp_dual(M, PRep::trivial(), 1, 2, ParabolicData::borel(1));
  Element vplus = monomial(extremal_monomial(M));

  // summand 0 is the identity coset: the ordinary action
  DividedPower y{Root(0, 1), 2};
  FgpModule::Result r = F.act_divided(y, F.embed(0, 0, vplus));
  FgpModule::Vec expect = F.embed(0, 0, act_divided(M, y, vplus).value);
  CHECK(r.value == expect);

  // on the reflected summand the lowering generators annihilate v+
  int reflected = -1;
  for (int s = 0; s < F.summands(); ++s)
    if (F.twist_w(s).length() == 1 && F.twist_u(s) == Mat::identity(F.cosets().field(), 2))
      reflected = s;
  REQUIRE(reflected >= 0);
  for (i64 n = 1; n <= 10; ++n) {
    FgpModule::Result dead = F.act_divided(DividedPower{Root(0, 1), n}, F.embed(reflected, 0, vplus));
    CHECK(dead.value.empty());
    CHECK_FALSE(dead.overflow);
  }
}

TEST_CASE("smash compatibility g(z m) = (Ad(g) z)(g m)") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(2, 0, 5, 14);
  const GaloisField& F5 = GaloisField::get(5);
  SplitMix64 rng(2718);
  auto basis = ModuleSpace::reduced_local_cohomology(2, 0, 5, 4).basis();

  for (int trial = 0; trial < 120; ++trial) {
    Element m = monomial(basis[rng.below(basis.size())]);
    int kind = static_cast<int>(rng.below(3));
    if (kind == 0) {
      // permutation inside the Levi blocks: transport relabels the generator
      WeylElement w = WeylElement::transposition(2, 1, 2);
      Mat g = Mat::permutation(F5, w);
      int ui = static_cast<int>(rng.below(3)), uj = static_cast<int>(rng.below(3));
      if (ui == uj) continue;
      Root unit(ui, uj);
      i64 order = 1 + static_cast<i64>(rng.below(5));
      Element lhs = parabolic_act(M, g, act_divided(M, DividedPower{unit, order}, m).value).value;
      Root moved(w(unit.i), w(unit.j));
      Element rhs =
          act_divided(M, DividedPower{moved, order}, parabolic_act(M, g, m).value).value;
      CHECK(lhs == rhs);
    } else if (kind == 1) {
      // torus: Ad(t) scales the generator by the root value
      std::vector<i64> t{1 + static_cast<i64>(rng.below(4)), 1 + static_cast<i64>(rng.below(4)),
                         1 + static_cast<i64>(rng.below(4))};
      int ui = static_cast<int>(rng.below(3)), uj = static_cast<int>(rng.below(3));
      if (ui == uj) continue;
      Root unit(ui, uj);
      i64 order = 1 + static_cast<i64>(rng.below(5));
      Element lhs = act_diagonal(M, t, act_divided(M, DividedPower{unit, order}, m).value);
      i64 scale = pow_mod(t[unit.i] * inv_mod(t[unit.j], 5) % 5, order, 5);
      Element rhs = act_divided(M, DividedPower{unit, order}, act_diagonal(M, t, m)).value;
      vec_scale(rhs, scale, 5);
      CHECK(lhs == rhs);
    } else {
      // elementary unipotent in P with an order-1 generator: Ad(g) z by
      // matrix conjugation
      int choice = static_cast<int>(rng.below(3));
      int a = choice == 0 ? 1 : 2, b = choice == 2 ? 1 : 0;
      i64 c = 1 + static_cast<i64>(rng.below(4));
      Mat g = Mat::elementary(F5, 3, a, b, static_cast<int>(c));
      int ui = static_cast<int>(rng.below(3)), uj = static_cast<int>(rng.below(3));
      if (ui == uj) continue;
      Root unit(ui, uj);
      ActionResult zl = act_root(M, unit, m);
      ActionResult lhs = parabolic_act(M, g, zl.value);
      // Ad(g)(E_unit) = (I + cE_{ab}) E_unit (I - cE_{ab}) expanded exactly
      LieMatrix z = lie_unit(unit);
      LieMatrix adg = z;
      LieMatrix e{{{a, b}, c}};
      LieMatrix bracket = lie_bracket(e, z, 5);
      for (const auto& [key, val] : bracket) {
        i64& slot = adg[key];
        slot = mod_canon(slot + val, 5);
        if (slot == 0) adg.erase(key);
      }
      LieMatrix inner = lie_bracket(e, bracket, 5);  // -c^2 E z E term via iterated ad
      for (const auto& [key, val] : inner) {
        i64& slot = adg[key];
        slot = mod_canon(slot + val * inv_mod(2, 5), 5);
        if (slot == 0) adg.erase(key);
      }
      ActionResult gm = parabolic_act(M, g, m);
      ActionResult rhs = act_lie(M, adg, gm.value);
      if (!lhs.overflow && !rhs.overflow && !zl.overflow && !gm.overflow)
        CHECK(lhs.value == rhs.value);
    }
  }
}

TEST_CASE("group action on the induced module is multiplicative") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(1, 0, 5, 14);
  FgpModule F = build_fgp_dual(M, PRep::trivial(), 1, 5, ParabolicData::borel(1));
  const GaloisField& F5 = GaloisField::get(5);
  std::vector<Mat> group = enumerate_gl(1, 5);
  SplitMix64 rng(999);
  auto basis = ModuleSpace::reduced_local_cohomology(1, 0, 5, 4).basis();
  for (int trial = 0; trial < 40; ++trial) {
    const Mat& a = group[rng.below(group.size())];
    const Mat& b = group[rng.below(group.size())];
    FgpModule::Vec v = F.embed(static_cast<int>(rng.below(3)), 0,
                               monomial(basis[rng.below(basis.size())]));
    FgpModule::Result lhs = F.act_group(a * b, v);
    FgpModule::Result step = F.act_group(b, v);
    FgpModule::Result rhs = F.act_group(a, step.value);
    if (!lhs.overflow && !step.overflow && !rhs.overflow) CHECK(lhs.value == rhs.value);
    // identity and inverses
    FgpModule::Result idv = F.act_group(Mat::identity(F5, 2), v);
    CHECK(idv.value == v);
    FgpModule::Result undo = F.act_group(a.inverse(), F.act_group(a, v).value);
    if (!undo.overflow) CHECK(undo.value == v);
  }
}

TEST_CASE("realized operators agree with native twisted actions") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(2, 0, 5, 10);
  FgpModule F = build_fgp_dual(M, PRep::trivial(), 2, 5,
                               ParabolicData::from_composition(2, {1, 2}));
  SplitMix64 rng(555);
  auto basis = ModuleSpace::reduced_local_cohomology(2, 0, 5, 4).basis();
  for (int trial = 0; trial < 60; ++trial) {
    int s = static_cast<int>(rng.below(static_cast<u64>(F.summands())));
    FgpModule::Vec v = F.embed(s, 0, monomial(basis[rng.below(basis.size())]));
    int ui = static_cast<int>(rng.below(3)), uj = static_cast<int>(rng.below(3));
    if (ui == uj) continue;
    i64 order = 1 + static_cast<i64>(rng.below(5));
    DividedPower z{Root(ui, uj), order};
    RealizedOp as_realized{"", {RealizedOp::Divided{z.unit, z.order}}};
    FgpModule::Result native = F.act_divided(z, v);
    FgpModule::Result realized = F.act_realized(as_realized, v);
    if (!native.overflow && !realized.overflow) CHECK(native.value == realized.value);
  }
}

TEST_CASE("pairwise non-isomorphy of summands") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(1, 0, 5, 6);
  FgpModule F = build_fgp_dual(M, PRep::trivial(), 1, 2, ParabolicData::borel(1));
  NonIsoResult r = pairwise_noniso_check(F);
  CHECK(r.pass);

  // negative control: a module all of whose twists look alike
  ModuleSpace triv = ModuleSpace::torus_characters(1, 5, 0);
  FgpModule control = build_fgp_dual(triv, PRep::trivial(), 1, 2, ParabolicData::borel(1));
  NonIsoResult bad = pairwise_noniso_check(control);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.witness.has_value());
}

TEST_CASE("locally finite test") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(1, 0, 5, 30);
  LocallyFiniteReport zero = locally_finite_test(M, Root(1, 0), {}, 10);
  CHECK(zero.nonvanishing.empty());
  CHECK(zero.certified_bound == 10);

  Element vplus = monomial(extremal_monomial(M));
  LocallyFiniteReport rep = locally_finite_test(M, Root(1, 0), vplus, 25);
  CHECK(rep.certified_bound == 25);
  CHECK(rep.heightone_ok);
  CHECK(rep.nonvanishing.size() == 25);  // y never kills v+
  std::vector<i64> predicted;
  for (i64 n = 1; n <= 25; ++n)
    if (lucas_binom(-2, n, 5) != 0) predicted.push_back(n);
  CHECK(rep.composite_nonvanishing == predicted);

  // a Levi-direction generator acts with finite nonvanishing set
  ModuleSpace M2 = ModuleSpace::reduced_local_cohomology(2, 0, 5, 10);
  Element w = monomial(extremal_monomial(M2));
  LocallyFiniteReport levi = locally_finite_test(M2, Root(2, 1), w, 8);
  CHECK(levi.nonvanishing.empty());

  CHECK_THROWS_AS(locally_finite_test(M, Root(0, 1), vplus, 5), std::invalid_argument);
}

TEST_CASE("commutator expansion engine") {
  CHECK_THROWS_AS(divided_commutator_expand(Root(1, 0), {}, 2, 3), std::invalid_argument);

  // a z commuting with x: single term [x^{(0)}, z] x^{[k]}
  LieMatrix commuting{{{2, 2}, 1}};
  auto terms = divided_commutator_expand(Root(1, 0), {commuting}, 3, 5);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].tail_order == 3);
  CHECK(terms[0].coeff == 1);

  // the expansion reproduces x^{[k]} z_1 ... z_n on module elements
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(2, 0, 5, 14);
  Root x(2, 1);
  LieMatrix y = lie_unit(Root(0, 2));
  Element vplus = monomial(extremal_monomial(M));
  for (i64 k = 1; k <= 4; ++k) {
    std::vector<LieMatrix> zs(2, y);
    auto expansion = divided_commutator_expand(x, zs, k, 5);
    ActionResult via_terms = apply_expansion(M, expansion, x, vplus);
    Element direct = vplus;
    for (int t = 0; t < 2; ++t) direct = act_lie(M, y, direct).value;
    direct = act_divided(M, DividedPower{x, k}, direct).value;
    CHECK(via_terms.value == direct);
  }
}

TEST_CASE("x^[n] y^[n] v = [x,y]^[n] v under the bracket hypotheses") {
  // x v = 0 and [x,[x,y]] = 0 realized on the d=2 window
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(2, 0, 5, 14);
  Element vplus = monomial(extremal_monomial(M));
  Root x(2, 1);            // kills v+
  Root ylab(0, 2);         // lowering toward deeper denominators
  CHECK(act_root(M, x, vplus).value.empty());
  LieMatrix bracket = lie_bracket(lie_unit(x), lie_unit(ylab), 5);
  REQUIRE(bracket.size() == 1);  // [E_{21}, E_{02}] = -E_{01}
  CHECK(bracket.count({0, 1}) == 1);
  CHECK(lie_bracket(lie_unit(x), bracket, 5).empty());  // [x,[x,y]] = 0

  for (i64 n = 1; n <= 10; ++n) {
    Element lhs =
        act_divided(M, DividedPower{x, n}, act_divided(M, DividedPower{ylab, n}, vplus).value)
            .value;
    // [x,y] = -E_{01}: its divided power acts with sign (-1)^n
    Element rhs = act_divided(M, DividedPower{Root(0, 1), n}, vplus).value;
    vec_scale(rhs, pow_mod(mod_canon(-1, 5), n, 5), 5);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("exactness of degreewise dimensions") {
  std::map<i64, i64> a{{0, 1}, {1, 2}};
  std::map<i64, i64> b{{0, 1}, {1, 3}, {2, 1}};
  std::map<i64, i64> mid{{0, 2}, {1, 5}, {2, 1}};
  CHECK(exactness_dims_check(a, mid, b));
  CHECK(exactness_dims_check(a, a, {}));
  CHECK_FALSE(exactness_dims_check(a, mid, a));
}

TEST_CASE("transitivity of induction") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(2, 0, 5, 6);
  ParabolicData B = ParabolicData::borel(2);
  ParabolicData Q = ParabolicData::from_composition(2, {1, 2});
  // P = Q degenerates to equality
  TransitivityResult same = transitivity_check(M, 2, 2, Q, Q);
  CHECK(same.pass());
  TransitivityResult tr = transitivity_check(M, 2, 2, B, Q);
  CHECK(tr.pass());
  CHECK_THROWS_AS(transitivity_check(M, 2, 2, Q, B), std::invalid_argument);
}

TEST_CASE("induced permutation representation") {
  auto table = std::make_shared<const CosetTable>(2, 2, ParabolicData::borel(2));
  ParabolicData Q = ParabolicData::from_composition(2, {1, 2});
  PRep ind = PRep::induced_trivial(table, Q);
  CHECK(ind.dim == 3);  // [P_(1,2) : B] over F_2
  // matrices of Q-elements are permutation matrices
  for (const Mat& g : enumerate_gl(2, 2)) {
    if (!in_parabolic(g, Q)) continue;
    auto m = ind.matrix(g, 5);
    for (int col = 0; col < 3; ++col) {
      int ones = 0;
      for (int row = 0; row < 3; ++row) {
        CHECK((m[row][col] == 0 || m[row][col] == 1));
        ones += m[row][col] == 1;
      }
      CHECK(ones == 1);
    }
  }
}

TEST_CASE("induced simplicity probe and reducible control") {
  ModuleSpace M = ModuleSpace::reduced_local_cohomology(1, 0, 5, 8);
  FgpModule F = build_fgp_dual(M, PRep::trivial(), 1, 5, ParabolicData::borel(1));
  FgpProbeResult r = simplicity_probe_fgp(F, 10, 77);
  CHECK(r.pass);

  FgpModule control = build_fgp_dual(M, PRep::direct_sum(PRep::trivial(), PRep::det_character()),
                                     1, 5, ParabolicData::borel(1));
  FgpProbeResult bad = simplicity_probe_fgp(control, 3, 78, 0);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.submodule_note.empty());
}
