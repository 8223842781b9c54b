#pragma once

// Independent verification oracles. Everything here recomputes expected
// values by a route disjoint from the implementation it checks: big-integer
// arithmetic instead of Lucas digits, chart-by-chart regularity instead of
// the box criterion, brute-force enumeration instead of structured bases.
// Only test binaries and the acceptance runner link this.

#include <string>
#include <vector>

#include "dhs/monomod.hpp"
#include "dhs/weylalg.hpp"

namespace dhs::oracle {

/// C(m, n) mod p through exact big integers (falling factorial over n!).
i64 bigint_binom_mod(i64 m, i64 n, i64 p);

/// (sum parts)! / prod parts! mod p through exact big integers.
i64 bigint_multinomial_mod(const std::vector<i64>& parts, i64 p);

/// Divided-power action by iterating the order-1 rule n times over the
/// integers and dividing by n! before reducing mod p. Returns the scalar for
/// the monomial with exponents `n_in` under (E_{a,b})^{[order]}.
i64 iterate_then_divide(const Exponents& n_in, const Root& unit, i64 order, i64 p);

/// Two-chart regularity on the one-variable model: the operator preserves
/// F[T] and F[T^{-1}] (checked on monomial inputs up to the degree bound
/// forced by the operator's shape).
bool two_chart_regular(const WeylOperator& op);

/// Brute-force enumeration of the local cohomology sector over the window box
/// (independent of ModuleSpace::basis).
std::vector<Exponents> enumerate_sector(int d, int j, i64 twist, i64 window);

/// dim H^d(P^d, O(m)) by counting Cech denominators (all exponents <= -1).
i64 serre_top_cohomology_count(int d, i64 m, i64 window);

/// Alternating sum over parabolic subsets of explicit coset counts.
i64 steinberg_dim_by_inclusion_exclusion(int n, i64 q);

/// Number of F_q points of G/P_I by direct orbit counting over the
/// enumerated group (small cases only).
i64 coset_count_by_enumeration(int d, i64 q, const ParabolicData& P);

/// Multiplication by the product of all arrangement linear forms, as a map
/// from degree-(m + kN) forms to degree-(m + (k+1)N) forms over F_p, is
/// injective (rank equals the source dimension).
bool transition_injective(int d, i64 q, i64 m, i64 k);

}  // namespace dhs::oracle
