#pragma once

// The finite group G = GL_{d+1}(F_q): element enumeration at desk scale,
// parabolic subgroups and Bruhat coset tables with u*w representatives,
// Steinberg and generalized Steinberg dimensions, degreewise induction, and
// the substitution action of parabolic elements on monomial modules.

#include <string>
#include <unordered_map>
#include <vector>

#include "dhs/monomod.hpp"

namespace dhs {

/// Square matrix over a table-backed finite field; entries are field indices.
class Mat {
public:
  Mat(const GaloisField& F, int n);
  static Mat identity(const GaloisField& F, int n);
  static Mat elementary(const GaloisField& F, int n, int a, int b, int c);  // I + c E_{ab}
  static Mat permutation(const GaloisField& F, const WeylElement& w);
  static Mat diagonal(const GaloisField& F, const std::vector<int>& t);

  const GaloisField& field() const { return *F_; }
  int n() const { return n_; }
  int at(int r, int c) const { return a_[r * n_ + c]; }
  int& at(int r, int c) { return a_[r * n_ + c]; }

  friend Mat operator*(const Mat& x, const Mat& y);
  Mat inverse() const;
  int det() const;
  bool invertible() const { return det() != 0; }

  /// Canonical byte encoding, usable as a hash key.
  std::string encode() const;
  /// Entries as canonical integers (field indices; for prime fields these are
  /// the residues).
  std::vector<std::vector<i64>> to_int_rows() const;

  friend bool operator==(const Mat&, const Mat&) = default;

private:
  const GaloisField* F_;
  int n_;
  std::vector<int> a_;
};

i64 group_order(int d, i64 q);

/// All of GL_{d+1}(F_q); throws when the order exceeds the ceiling.
std::vector<Mat> enumerate_gl(int d, i64 q, i64 ceiling = 1000000);

bool in_parabolic(const Mat& g, const ParabolicData& P);

/// Coset table of G/P with representatives u*w, u in U_{B,w}(F_q), w in W^I.
class CosetTable {
public:
  CosetTable(int d, i64 q, const ParabolicData& P, i64 ceiling = 100000);

  int d() const { return d_; }
  i64 q() const { return F_->q(); }
  const GaloisField& field() const { return *F_; }
  const ParabolicData& parabolic() const { return P_; }

  i64 size() const { return static_cast<i64>(reps_.size()); }
  const Mat& representative(int idx) const { return reps_[idx]; }
  const WeylElement& stratum_of(int idx) const { return strata_[stratum_idx_[idx]].w; }
  int stratum_length(int idx) const {
    return static_cast<int>(strata_[stratum_idx_[idx]].ubw_roots.size());
  }

  int index_of(const Mat& g) const;  // coset of g
  /// The P-part of g relative to the coset representative: g = rep * p.
  Mat p_part(const Mat& g, int idx) const;

  std::string to_csv() const;  // index, representative row-major entries

private:
  std::string flag_key(const Mat& g) const;

  int d_;
  const GaloisField* F_;
  ParabolicData P_;
  std::vector<CosetStratum> strata_;
  std::vector<Mat> reps_;
  std::vector<int> stratum_idx_;
  std::unordered_map<std::string, int> key_to_idx_;
};

i64 steinberg_dim(int n, i64 q);

/// dim of the generalized Steinberg v^G_P for the given composition: the
/// quotient of F_p[G/P] by the sum of the images of F_p[G/Q] over all
/// parabolics Q strictly containing P, computed by rank over F_p.
i64 generalized_steinberg_dim(int d, i64 q, const std::vector<int>& composition,
                              i64 ceiling = 100000);

/// Degreewise dims of Ind^G_P: multiply by the index [G : P_I].
std::map<i64, i64> induce_graded(const std::map<i64, i64>& dims, const ParabolicData& P, i64 q);

/// Substitution action of a parabolic element on a monomial module, entries
/// given as canonical integers reduced mod p. The element must be block lower
/// triangular for the module's numerator/denominator split (sector flavors);
/// it is factored into diagonal, permutation and elementary substitutions,
/// each exact within the window.
ActionResult parabolic_act(const ModuleSpace& M, const std::vector<std::vector<i64>>& g,
                           const Element& v);
ActionResult parabolic_act(const ModuleSpace& M, const Mat& g, const Element& v);

/// Pole degree bookkeeping for graded induction: pole(X^n) = sum of the
/// denominator-slot exponent magnitudes.
i64 pole_degree(const ModuleSpace& M, const Exponents& n);
std::map<i64, i64> dims_by_pole(const ModuleSpace& M);

}  // namespace dhs
