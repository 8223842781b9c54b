#pragma once

// The crystalline Weyl algebra on the big cell: polynomial coefficients in
// the chart variables T_gamma with divided-power derivatives y_gamma^{[n]},
// y^{[n]}(T^m) = C(m,n) T^{m-n}. Carries the global-regularity membership
// test, the binomial operator identity, the subalgebra generator families,
// and the closure/probe engines on realized monomial modules.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dhs/monomod.hpp"
#include "dhs/prng.hpp"

namespace dhs {

/// Multidegree in the chart variables, zero entries erased.
using VarExp = std::map<Root, i64>;

/// Laurent polynomial in the chart variables over F_p.
using ChartPoly = SparseVec<VarExp>;

ChartPoly chart_monomial(const VarExp& e);
std::string chart_poly_to_string(const ChartPoly& f);

/// Normal form: sum of terms c * T^A * y^{[B]}, keyed by (A, B), coefficients
/// canonical in [1, p), zero terms pruned.
class WeylOperator {
public:
  explicit WeylOperator(i64 p) : p_(p) {}
  static WeylOperator zero(i64 p) { return WeylOperator(p); }
  static WeylOperator one(i64 p);
  static WeylOperator term(i64 p, i64 coeff, VarExp t_deg, VarExp dp_ord);

  i64 p() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<std::pair<VarExp, VarExp>, i64>& terms() const { return terms_; }

  void add_term(i64 coeff, VarExp t_deg, VarExp dp_ord);

  WeylOperator& operator+=(const WeylOperator& o);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  /// Product in the algebra (normal ordering via the divided Leibniz rule).
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
  friend bool operator==(const WeylOperator&, const WeylOperator&) = default;

  ChartPoly apply(const ChartPoly& f) const;

  /// Variables occurring in coefficients or derivatives.
  std::vector<Root> support() const;
  i64 max_divided_order() const;
  i64 max_coeff_degree() const;
  /// All coefficient exponents nonnegative (membership in D^1 proper).
  bool polynomial_coefficients() const;

  /// Text grammar: terms "c * T(i,j)^a * y(i,j)^[n] * ..." joined by "+".
  static WeylOperator parse(const std::string& text, i64 p);
  std::string to_string() const;

private:
  i64 p_;
  std::map<std::pair<VarExp, VarExp>, i64> terms_;
};

/// Smallest q = p^s with op T_gamma^q = T_gamma^q op for every variable,
/// verified symbolically; nullopt when none up to p^max_power.
std::optional<i64> q_linearity_level(const WeylOperator& op, int max_power = 6);

enum class MembershipStatus { Accepted, Rejected, QLevelExceeded };

struct MembershipVerdict {
  MembershipStatus status = MembershipStatus::Rejected;
  i64 q_level = 0;
  std::optional<VarExp> witness;  // violating input monomial on rejection
  bool accepted() const { return status == MembershipStatus::Accepted; }
};

/// Global-regularity test: op in D iff op(1) is constant and every box
/// monomial input (0 <= i_gamma <= q-1) lands in the box 0 <= j_gamma <= q.
MembershipVerdict membership_D(const WeylOperator& op, int max_power = 6);

/// C(T_alpha y_alpha, n) = T_alpha^n y_alpha^{[n]}: expand the left side over
/// a characteristic-0 lift (asserting integrality), reduce mod p, and compare
/// with the right side both as normal forms and on {T^m : |m| <= window}.
bool check_binom_identity(i64 n, i64 p, i64 window);

enum class Family { P, U_P, U_P_minus, L_P, T };

struct GeneratorBounds {
  i64 max_m = 0;
  i64 max_n = 0;
};

/// All single-variable pattern generators T_gamma^m y_gamma^{[n]} of the
/// family within bounds that also pass membership_D.
std::vector<WeylOperator> subalgebra_generators(Family family, const ParabolicData& P,
                                                const GeneratorBounds& bounds, i64 p);

/// A realized operator on a P^d monomial module: a composite of divided-power
/// root actions, coefficient shifts X_a/X_b and torus binomials, applied left
/// to right.
struct RealizedOp {
  struct Divided { Root unit; i64 order; };
  struct RatioShift { int a; int b; i64 times; };
  struct Torus { Root gamma; i64 order; };
  using Step = std::variant<Divided, RatioShift, Torus>;

  std::string name;
  std::vector<Step> steps;
  i64 max_shift() const;  // largest per-slot exponent change per application
};

ActionResult apply_realized(const ModuleSpace& M, const RealizedOp& op, const Element& v);

/// The finite-generation operator set for H^{d-j}_{P^j}(P^d, O): the order-1
/// lowering operators of the opposite radical of P_{(j+1,d-j)}, their p-th
/// divided powers, and the operators T_{(a,b)}^{p-1} L_{(a,b)}^{[p]} for
/// j+1 <= a < b <= d.
std::vector<RealizedOp> generation_operators(const ModuleSpace& M);

/// The seed monomials: numerator degree d-j spread over X_0..X_j, all
/// denominator exponents -1.
std::vector<Exponents> generation_seeds(const ModuleSpace& M);

/// Generator set for simplicity probes: divided powers of every root label
/// with orders {1, p, p^2 <= bound}, torus binomials at p-power orders, and
/// the generation operators.
std::vector<RealizedOp> probe_operators(const ModuleSpace& M, i64 order_bound);

struct ClosureResult {
  EchelonBasis<Exponents> span;
  i64 verified_window = 0;  // closure is exact for monomials within this window
  bool overflowed = false;
  std::vector<Exponents> basis_monomials() const;  // pivots, sorted
};

ClosureResult generate_submodule(const ModuleSpace& M, const std::vector<RealizedOp>& gens,
                                 const std::vector<Exponents>& seeds);

struct ProbeFailure {
  i64 trial = 0;
  Element witness;
};

struct ProbeResult {
  bool pass = false;
  i64 trials = 0;
  i64 verified_window = 0;
  std::vector<ProbeFailure> failures;
};

/// Seeded randomized simplicity probe: the closure of each random nonzero
/// vector must contain the extremal monomial of the space.
ProbeResult simplicity_probe(const ModuleSpace& M, const std::vector<RealizedOp>& gens,
                             i64 trials, u64 seed);

}  // namespace dhs
