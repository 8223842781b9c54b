#pragma once

// Sparse Laurent-monomial weight modules over F_p: torus characters Xi_mu,
// the monomial presentations of the local cohomology modules H^{d-j}_{P^j} of
// projective space and their reduced parts, and spaces of forms. Everything
// is truncated to a per-variable exponent window; leaving the window is a
// first-class signal, never silent dropping.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dhs/linalg.hpp"
#include "dhs/weyl.hpp"

namespace dhs {

using Exponents = std::vector<i64>;

inline Weight weight_of(const Exponents& n) { return Weight(n); }
i64 total_degree(const Exponents& n);

using Element = SparseVec<Exponents>;

Element monomial(const Exponents& n);
std::string exponents_to_string(const Exponents& n);
std::string element_to_string(const Element& e);

enum class Flavor {
  TorusCharacters,          // sum of exponents zero, signs free
  LocalCohomology,          // sector + the finitely many Serre monomials
  ReducedLocalCohomology,   // n_0..n_j >= 0, n_{j+1}..n_d < 0, fixed total
  PolynomialRing,           // all exponents >= 0, fixed total
};

enum class MonomialClass {
  Alive,        // a basis monomial of the module
  Killed,       // exactly zero in the presentation (left the sector)
  OutOfWindow,  // alive but outside the truncation window
};

/// The ambient truncated module: flavor, dimensions and window. Elements are
/// plain sparse vectors; all operations take the space as context. Spaces are
/// immutable and cheap to copy.
class ModuleSpace {
public:
  static ModuleSpace torus_characters(int d, i64 p, i64 window);
  /// Ambient Laurent monomials of a fixed total degree: sign-free, used to
  /// evaluate composite operators before passing through a sector quotient.
  static ModuleSpace laurent_ambient(int d, i64 p, i64 window, i64 total);
  static ModuleSpace local_cohomology(int d, int j, i64 p, i64 window, i64 twist = 0);
  static ModuleSpace reduced_local_cohomology(int d, int j, i64 p, i64 window, i64 twist = 0);
  static ModuleSpace polynomial_forms(int d, i64 p, i64 window, i64 degree);

  int d() const { return d_; }
  int j() const { return j_; }
  i64 p() const { return p_; }
  i64 window() const { return window_; }
  i64 twist() const { return twist_; }
  Flavor flavor() const { return flavor_; }

  MonomialClass classify(const Exponents& n) const;
  bool in_window(const Exponents& n) const;
  bool is_serre_monomial(const Exponents& n) const;

  /// All alive monomials in the window, lexicographically sorted.
  std::vector<Exponents> basis() const;
  std::map<Weight, i64> weight_dims() const;

  /// Basis dump: header "# d=<d> j=<j> W=<W> p=<p>", one monomial per line,
  /// space-separated exponents, lexicographic order.
  std::string dump_basis() const;

  friend bool operator==(const ModuleSpace&, const ModuleSpace&) = default;

private:
  int d_ = 0;
  int j_ = -1;
  i64 p_ = 0;
  i64 window_ = 0;
  i64 twist_ = 0;
  Flavor flavor_ = Flavor::TorusCharacters;
};

struct ActionResult {
  Element value;
  bool overflow = false;  // some output monomial left the window

  ActionResult& merge(ActionResult other, i64 p) {
    vec_axpy(value, 1, other.value, p);
    overflow = overflow || other.overflow;
    return *this;
  }
};

/// Divided-power generator (E_{a,b})^{[order]}, labeled by the matrix unit.
/// On a monomial of exponents n it contributes C(n_b, order) and shifts the
/// exponents by order * (eps_a - eps_b).
struct DividedPower {
  Root unit;  // matrix-unit label (a, b), any a != b
  i64 order = 1;
};

/// Torus binomial C(h_gamma, order), acting on weight mu by C(<mu, gamma^vee>, order).
struct TorusBinom {
  Root gamma;
  i64 order = 1;
};

ActionResult act_root(const ModuleSpace& M, const Root& unit, const Element& v);
ActionResult act_divided(const ModuleSpace& M, const DividedPower& g, const Element& v);
Element act_torus_binom(const ModuleSpace& M, const TorusBinom& g, const Element& v);
/// The torus unit E_{ii}: scales each monomial by its i-th exponent.
Element act_torus_unit(const ModuleSpace& M, int i, const Element& v);

/// Multiplication by X_a / X_b (exact on local cohomology when both slots lie
/// in the inverted variables, i.e. a, b > j).
ActionResult act_ratio_shift(const ModuleSpace& M, int a, int b, i64 times, const Element& v);

/// Substitution X_b -> X_b + c X_a, the action of the elementary matrix
/// I + c E_{ab}. The binomial series truncates exactly through the sector
/// quotient whenever it is infinite in the ambient Laurent ring.
ActionResult act_elementary(const ModuleSpace& M, int a, int b, i64 c, const Element& v);

/// Substitution X_i -> X_{sigma(i)} for a permutation sigma.
ActionResult act_permutation(const ModuleSpace& M, const WeylElement& sigma, const Element& v);

/// Diagonal substitution X_i -> t_i X_i, t_i nonzero mod p.
Element act_diagonal(const ModuleSpace& M, const std::vector<i64>& t, const Element& v);

/// The extremal (highest-weight) monomial of a reduced local cohomology
/// window: numerator concentrated on slot j, all denominators -1.
Exponents extremal_monomial(const ModuleSpace& M);

/// True when every raising generator (order 1..max_order) kills the vector.
bool annihilated_by_all_raising(const ModuleSpace& M, const Element& v, i64 max_order);

/// Reduced part of a full local cohomology module: the Serre monomials span
/// the image in H^{d-j}(P^d, O(twist)) and are excluded.
struct ReducedPart {
  ModuleSpace space;
  std::vector<Exponents> excluded;
};
ReducedPart reduced_part(const ModuleSpace& M);

/// Dual-basis pairing of a divided-power monomial prod y_gamma^{[n_gamma]}
/// in U(u_P^-) against a polynomial monomial prod t_gamma^{m_gamma} on U_P^-:
/// 1 exactly when the multidegrees agree. Throws when either side uses a root
/// outside the radical of P.
i64 pairing(const std::map<Root, i64>& divided_orders,
            const std::map<Root, i64>& function_exponents, const ParabolicData& P);

/// Graded dual at the level of weight-space dimensions. Labels are kept (no
/// Cartan-involution twist), so the double dual is literally the original map.
std::map<Weight, i64> graded_dual_dims(const std::map<Weight, i64>& dims);

}  // namespace dhs
