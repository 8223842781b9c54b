#pragma once

// Sections of line bundles O(m) on the Drinfeld halfspace over F_q, filtered
// by pole order along the rational hyperplane arrangement, and the desk-scale
// reconciliation of those dimensions against the boundary-filtration
// predictions (induced local cohomology pieces plus generalized Steinberg
// corrections).

#include <optional>
#include <string>
#include <vector>

#include "dhs/fingrp.hpp"

namespace dhs {

struct Arrangement {
  int d = 0;
  i64 q = 0;
  std::vector<std::vector<i64>> normals;  // canonical: first nonzero entry 1, lex sorted
  i64 count() const { return static_cast<i64>(normals.size()); }
};

Arrangement arrangement(int d, i64 q);

/// dim of the k-th pole stage of H^0(X, O(m)): forms of degree m + k*N over
/// the common denominator, so C(m + kN + d, d) when nonnegative.
std::vector<i64> sections_dims(int d, i64 q, i64 m, i64 k_max);

enum class StConvention {
  SecondLeviBlock,  // St_{d-j}, the second Levi block of P_{(j+1, d-j)}
  Literal,          // St_{d+1-j}
};
std::string to_string(StConvention c);

/// Stage dims of the j-th graded piece prediction: index of P_{(j+1,d-j)}
/// times the pole-counted reduced local cohomology, times the Steinberg
/// factor of the selected convention, plus the generalized-Steinberg tensor
/// H^{d-j}(P^d, O(m)) correction when that cohomology is nonzero.
std::vector<i64> predicted_graded_dims(int d, i64 q, i64 m, int j, i64 k_max, StConvention conv);

struct ReconcileRow {
  i64 k = 0;
  i64 lhs = 0;
  i64 rhs_second_block = 0;
  i64 rhs_literal = 0;
  bool match_second_block = false;
  bool match_literal = false;
};

struct ReconcileReport {
  int d = 0;
  i64 q = 0, m = 0;
  std::vector<ReconcileRow> rows;
  std::optional<StConvention> winner;  // the convention matching every stage, if any
};

ReconcileReport reconcile_filtration(int d, i64 q, i64 m, i64 k_max);

/// CSV: d,q,m,k,lhs_dim,rhs_dim_conventionA,rhs_dim_conventionB,match_A,match_B
std::string to_csv(const ReconcileReport& report);

/// dim H^i(P^d, O(m)) by the standard computation (nonzero only for i = 0 and i = d).
i64 projective_space_cohomology_dim(int d, int i, i64 m);

/// The four-term comparison at d = 1: dim H^0(X,O(m))_k - dim H^0(P^1,O(m))
/// equals dim(H^1_Y)_k - dim H^1(P^1,O(m)), with H^1_Y summed over the
/// rational points by pole order.
bool four_term_dims_check(i64 q, i64 m, i64 k_max);

}  // namespace dhs
