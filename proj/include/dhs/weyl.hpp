#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dhs/weight.hpp"

namespace dhs {

/// A Weyl group element of GL_{d+1}: a permutation sigma of {0..d}, acting on
/// weights by pushing coordinates forward, (sigma.w)_{sigma(i)} = w_i, and on
/// roots by alpha_{i,j} -> alpha_{sigma(i), sigma(j)}.
class WeylElement {
public:
  WeylElement() = default;
  static WeylElement identity(int d);
  /// Transposition (a, b).
  static WeylElement transposition(int d, int a, int b);
  /// Reflection in the simple root alpha_{s+1,s}.
  static WeylElement simple_reflection(int d, int s) { return transposition(d, s, s + 1); }

  explicit WeylElement(std::vector<int> images);

  int rank() const { return static_cast<int>(sigma_.size()) - 1; }
  int operator()(int i) const { return sigma_[i]; }
  const std::vector<int>& images() const { return sigma_; }

  WeylElement inverse() const;
  /// Composition as functions: (a * b)(i) = a(b(i)); b is applied first.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

  Weight act(const Weight& w) const;
  Root act(const Root& r) const { return Root(sigma_[r.i], sigma_[r.j]); }

  /// Number of positive roots sent to negative ones.
  int length() const;

private:
  std::vector<int> sigma_;
};

/// Dot action w . lambda = w(lambda + rho) - rho.
Weight dot_action(const WeylElement& w, const Weight& lambda);

/// s_count ... s_1 . 0 with s_k the transposition (d-k, d-k+1).
Weight dot_chain(int d, int count);

/// A standard parabolic of GL_{d+1}: a composition (i_1,...,i_r) of d+1,
/// equivalently the subset I of simple-root indices kept in the Levi.
class ParabolicData {
public:
  static ParabolicData from_composition(int d, std::vector<int> composition);
  static ParabolicData from_subset(int d, const std::vector<bool>& I);
  static ParabolicData borel(int d);
  static ParabolicData full(int d);

  int rank() const { return d_; }
  const std::vector<int>& composition() const { return composition_; }
  const std::vector<bool>& subset() const { return I_; }
  /// block_of[i] = index of the Levi block containing slot i.
  const std::vector<int>& block_of() const { return block_of_; }

  bool is_levi_root(const Root& r) const { return block_of_[r.i] == block_of_[r.j]; }
  /// Roots of the radical U_P: positive roots across blocks.
  std::vector<Root> radical_roots() const;
  /// Roots gamma with y_gamma in u_P^-: the same list (each y_gamma = E_{j,i}
  /// spans the opposite radical's weight space of weight -gamma).
  std::vector<Root> levi_roots() const;

  bool contains(const ParabolicData& other) const;  // other <= this as parabolics

  std::string to_string() const;

  friend bool operator==(const ParabolicData&, const ParabolicData&) = default;

private:
  int d_ = 0;
  std::vector<int> composition_;
  std::vector<bool> I_;
  std::vector<int> block_of_;
};

/// Maximal parabolic for lambda: I = { s : <lambda, alpha_s^vee> >= 0 }.
ParabolicData maximal_parabolic_for(const Weight& lambda);

struct CosetStratum {
  WeylElement w;
  std::vector<Root> ubw_roots;  // positive roots of U_{B,w} = U cap w U^- w^{-1}
};

/// Minimal-length coset representatives W^I with the root sets of U_{B,w},
/// sorted by (length, permutation images) for determinism.
std::vector<CosetStratum> weyl_coset_data(const ParabolicData& P);

/// All elements of the Weyl group (d <= 7 or so; desk scale).
std::vector<WeylElement> weyl_group(int d);

/// Number of F_q points of G/P_I: sum over W^I of q^{l(w)}.
i64 bruhat_point_count(const ParabolicData& P, i64 q);

/// The generator kinds transported by permutation representatives.
enum class GeneratorKind { Raising, Lowering };

struct GeneratorLabel {
  Root gamma;  // positive root
  GeneratorKind kind = GeneratorKind::Lowering;
  /// Matrix-unit label (a, b): E_{a,b} spans the root space this generator
  /// lives in (g_gamma for raising, g_{-gamma} for lowering).
  Root unit() const { return kind == GeneratorKind::Raising ? gamma : gamma.negated(); }
};

struct AdImage {
  GeneratorLabel label;
  int sign = 1;  // always +1 with 0/1 permutation representatives
};

/// Ad(w) of a divided-power generator: permutation matrices conjugate matrix
/// units without signs, so w . E_{a,b}^{[n]} = E_{w(a),w(b)}^{[n]}.
AdImage ad_weyl(const WeylElement& w, const GeneratorLabel& g);

}  // namespace dhs
