#pragma once

// The induction functor on Bruhat-indexed twisted sums: the dual side
// Ind^G_P(M (x) V') realized as one summand per coset representative u*w,
// with the smash-product action (group elements permute summands through
// coset refactoring; algebra generators act through Ad(w)-transport followed
// by module-level u-conjugation). Probes certify consistency over a window,
// never the theorems themselves.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dhs/fingrp.hpp"
#include "dhs/weylalg.hpp"

namespace dhs {

/// Finite-dimensional P-representation by explicit matrices over F_p.
struct PRep {
  int dim = 1;
  std::string name = "triv";
  std::function<std::vector<std::vector<i64>>(const Mat&, i64 p)> matrix;

  static PRep trivial();
  static PRep det_character();  // g -> det(g), q = p contexts
  static PRep direct_sum(const PRep& a, const PRep& b);
  /// Ind^Q_P(triv) as a permutation representation of Q on the cosets of P
  /// contained in Q (table over the full group).
  static PRep induced_trivial(std::shared_ptr<const CosetTable> P_table, ParabolicData Q);

  std::vector<std::vector<i64>> dual_matrix(const Mat& g, i64 p) const;
};

class FgpModule {
public:
  /// F^G_P(M, V)' for a realized base module M (carrying the P-action of its
  /// own parabolic) and a P_I-representation V; requires P_I contained in the
  /// module's parabolic so every twist acts on M.
  FgpModule(ModuleSpace M, PRep V, int d, i64 q, ParabolicData I);

  const ModuleSpace& base() const { return M_; }
  const CosetTable& cosets() const { return *cosets_; }
  const PRep& coefficient_rep() const { return V_; }
  int summands() const { return static_cast<int>(cosets_->size()); }
  int vdim() const { return V_.dim; }
  i64 p() const { return M_.p(); }

  const WeylElement& twist_w(int s) const;
  const Mat& twist_u(int s) const { return u_[s]; }

  /// Keys: (summand, coefficient coordinate, monomial).
  using Key = std::tuple<int, int, Exponents>;
  using Vec = SparseVec<Key>;

  struct Result {
    Vec value;
    bool overflow = false;
  };

  Vec embed(int summand, int vcoord, const Element& e) const;

  Result act_divided(const DividedPower& z, const Vec& v) const;
  Result act_torus(const TorusBinom& z, const Vec& v) const;
  /// Twisted action of a realized Weyl-algebra operator: transport the steps
  /// through the summand's Weyl element, evaluate on the ambient Laurent
  /// space, project back through the sector quotient, and conjugate by the
  /// unipotent twist.
  Result act_realized(const RealizedOp& op, const Vec& v) const;

  struct GroupAction {
    // per source summand: target summand, P-part substitution, V'-matrix
    std::vector<int> target;
    std::vector<Mat> p_part;
    std::vector<std::vector<std::vector<i64>>> vdual;
  };
  GroupAction precompute_group(const Mat& g) const;
  Result act_group(const GroupAction& ga, const Vec& v) const;
  Result act_group(const Mat& g, const Vec& v) const;

  /// Degreewise (pole-degree) dimensions: index * dim V * dims of M.
  std::map<i64, i64> graded_dims() const;

  /// Per-summand fingerprint: the w-translated weight support together with a
  /// stable hash of the twisted action tables of a fixed probe set.
  std::string fingerprint(int summand) const;

private:
  ModuleSpace M_;
  PRep V_;
  int d_;
  ParabolicData I_;
  std::shared_ptr<const CosetTable> cosets_;
  std::vector<WeylElement> w_;
  std::vector<Mat> u_, uinv_;
};

FgpModule build_fgp_dual(const ModuleSpace& M, const PRep& V, int d, i64 q,
                         const ParabolicData& I);

struct NonIsoResult {
  bool pass = false;
  std::optional<std::pair<int, int>> witness;  // indices of an isomorphic-looking pair
};
NonIsoResult pairwise_noniso_check(const FgpModule& F);

struct LocallyFiniteReport {
  std::vector<i64> nonvanishing;  // orders n with y_gamma^{[n]} v != 0, n <= certified_bound
  std::vector<i64> composite_nonvanishing;  // orders with x^{[n]} y^{[n]} v != 0
  i64 certified_bound = 0;        // shrunk when the window overflows
  bool heightone_ok = true;       // x^{[n]} y^{[n]} v = C(<lambda,gamma^vee>,n) v throughout
};
LocallyFiniteReport locally_finite_test(const ModuleSpace& M, const Root& gamma,
                                        const Element& v, i64 bound);

/// Elements of gl_{d+1} as sparse matrices (units and diagonals), enough for
/// the commutator-expansion engine.
using LieMatrix = std::map<std::pair<int, int>, i64>;

LieMatrix lie_unit(const Root& r);
LieMatrix lie_bracket(const LieMatrix& a, const LieMatrix& b, i64 p);
LieMatrix lie_ad_power(const Root& x, const LieMatrix& z, int times, i64 p);
ActionResult act_lie(const ModuleSpace& M, const LieMatrix& z, const Element& v);

struct ExpansionTerm {
  i64 coeff = 1;                    // 1/(i_1! ... i_n!) mod p
  std::vector<LieMatrix> brackets;  // [x^{(i_t)}, z_t], left to right
  i64 tail_order = 0;               // trailing x^{[i_{n+1}]}
};

/// x^{[k]} z_1 ... z_n as a sum over compositions i_1 + ... + i_{n+1} = k,
/// with the ad-nilpotency cutoff [x^{(i)}, z] = 0 for i >= 4. Requires p > 3.
std::vector<ExpansionTerm> divided_commutator_expand(const Root& x_unit,
                                                     const std::vector<LieMatrix>& zs, i64 k,
                                                     i64 p);
ActionResult apply_expansion(const ModuleSpace& M, const std::vector<ExpansionTerm>& terms,
                             const Root& x_unit, const Element& v);

struct FgpProbeResult {
  bool pass = false;
  i64 trials = 0;
  i64 verified_window = 0;
  std::vector<i64> failed_trials;
  std::string submodule_note;  // filled when a proper invariant subspace is exhibited
};

/// Randomized simplicity probe: the closure of each seeded random vector
/// under group generators and divided-power generators must contain every
/// summand's extremal vector (all coefficient coordinates). When
/// restrict_coordinate is set, start vectors are drawn inside that
/// coefficient coordinate only (negative controls for reducible V).
FgpProbeResult simplicity_probe_fgp(const FgpModule& F, i64 trials, u64 seed,
                                    std::optional<int> restrict_coordinate = std::nullopt);

/// Degreewise-dimension exactness: middle = sub + quotient in every degree.
bool exactness_dims_check(const std::map<i64, i64>& sub, const std::map<i64, i64>& mid,
                          const std::map<i64, i64>& quot);

struct TransitivityResult {
  bool dims_equal = false;
  bool fingerprints_match = false;
  bool pass() const { return dims_equal && fingerprints_match; }
};

/// F^G_P(M, triv) vs F^G_Q(M, Ind^Q_P triv) for P inside Q: graded dimension
/// equality and the summand-support multiset bijection.
TransitivityResult transitivity_check(const ModuleSpace& M, int d, i64 q,
                                      const ParabolicData& P, const ParabolicData& Q);

}  // namespace dhs
