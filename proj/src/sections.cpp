#include "dhs/sections.hpp"

#include <algorithm>
#include <sstream>

namespace dhs {

namespace {

i64 binom_i64(i64 m, i64 n) {
  if (n < 0 || m < n) return 0;
  i64 r = 1;
  for (i64 i = 0; i < n; ++i) r = r * (m - i) / (i + 1);
  return r;
}

i64 ipow(i64 b, i64 e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

Arrangement arrangement(int d, i64 q) {
  const GaloisField& F = GaloisField::get(q);
  Arrangement out;
  out.d = d;
  out.q = q;
  int n = d + 1;
  std::vector<int> v(n, 0);
  while (true) {
    int lead = -1;
    for (int i = 0; i < n; ++i)
      if (v[i] != 0) {
        lead = i;
        break;
      }
    if (lead >= 0 && v[lead] == F.one()) {
      std::vector<i64> normal(v.begin(), v.end());
      out.normals.push_back(std::move(normal));
    }
    int t = 0;
    for (; t < n; ++t) {
      if (v[t] < F.q() - 1) {
        ++v[t];
        std::fill(v.begin(), v.begin() + t, 0);
        break;
      }
    }
    if (t == n) break;
  }
  std::sort(out.normals.begin(), out.normals.end());
  i64 expected = (ipow(q, d + 1) - 1) / (q - 1);
  if (out.count() != expected) throw std::logic_error("arrangement: point count mismatch");
  return out;
}

std::vector<i64> sections_dims(int d, i64 q, i64 m, i64 k_max) {
  i64 N = (ipow(q, d + 1) - 1) / (q - 1);
  std::vector<i64> out;
  for (i64 k = 0; k <= k_max; ++k) {
    i64 deg = m + k * N;
    out.push_back(deg < 0 ? 0 : binom_i64(deg + d, d));
  }
  return out;
}

std::string to_string(StConvention c) {
  return c == StConvention::SecondLeviBlock ? "St(d-j)" : "St(d+1-j)";
}

i64 projective_space_cohomology_dim(int d, int i, i64 m) {
  if (i == 0) return m >= 0 ? binom_i64(m + d, d) : 0;
  if (i == d) return m <= -(d + 1) ? binom_i64(-m - 1, d) : 0;
  return 0;
}

namespace {

// number of sector monomials of H~^{d-j}(P^d, O(m)) with pole degree <= k
i64 pole_count(int d, int j, i64 m, i64 k) {
  // choose denominator exponents first: b_i >= 1, sum b = pole; numerators sum
  // to m + pole over j+1 slots
  i64 total = 0;
  i64 denom_slots = d - j, numer_slots = j + 1;
  for (i64 pole = denom_slots; pole <= k; ++pole) {
    i64 numer_total = m + pole;
    if (numer_total < 0) continue;
    // compositions of pole into denom_slots parts >= 1, numer_total into numer_slots parts >= 0
    i64 denom_ways = binom_i64(pole - 1, denom_slots - 1);
    i64 numer_ways = binom_i64(numer_total + numer_slots - 1, numer_slots - 1);
    total += denom_ways * numer_ways;
  }
  return total;
}

}  // namespace

std::vector<i64> predicted_graded_dims(int d, i64 q, i64 m, int j, i64 k_max, StConvention conv) {
  if (j < 0 || j > d - 1) throw std::invalid_argument("predicted_graded_dims: invalid j");
  ParabolicData P = ParabolicData::from_composition(d, {j + 1, d - j});
  i64 index = bruhat_point_count(P, q);
  int st_rank = conv == StConvention::SecondLeviBlock ? d - j : d + 1 - j;
  i64 st = steinberg_dim(st_rank, q);

  i64 htop = projective_space_cohomology_dim(d, d - j, m);
  i64 vterm = 0;
  if (htop != 0) {
    std::vector<int> comp{j + 1};
    for (int t = j + 1; t <= d; ++t) comp.push_back(1);
    vterm = generalized_steinberg_dim(d, q, comp) * htop;
  }

  std::vector<i64> out;
  for (i64 k = 0; k <= k_max; ++k) {
    i64 ind = index * pole_count(d, j, m, k) * st;
    out.push_back(ind + (k >= 1 ? vterm : 0));
  }
  return out;
}

ReconcileReport reconcile_filtration(int d, i64 q, i64 m, i64 k_max) {
  ReconcileReport report;
  report.d = d;
  report.q = q;
  report.m = m;
  std::vector<i64> lhs = sections_dims(d, q, m, k_max);
  std::vector<i64> rhsA(k_max + 1, projective_space_cohomology_dim(d, 0, m));
  std::vector<i64> rhsB = rhsA;
  for (int j = 0; j <= d - 1; ++j) {
    std::vector<i64> a = predicted_graded_dims(d, q, m, j, k_max, StConvention::SecondLeviBlock);
    std::vector<i64> b = predicted_graded_dims(d, q, m, j, k_max, StConvention::Literal);
    for (i64 k = 0; k <= k_max; ++k) {
      rhsA[k] += a[k];
      rhsB[k] += b[k];
    }
  }
  bool allA = true, allB = true;
  for (i64 k = 0; k <= k_max; ++k) {
    ReconcileRow row;
    row.k = k;
    row.lhs = lhs[k];
    row.rhs_second_block = rhsA[k];
    row.rhs_literal = rhsB[k];
    row.match_second_block = lhs[k] == rhsA[k];
    row.match_literal = lhs[k] == rhsB[k];
    allA = allA && row.match_second_block;
    allB = allB && row.match_literal;
    report.rows.push_back(row);
  }
  if (allA && !allB)
    report.winner = StConvention::SecondLeviBlock;
  else if (allB && !allA)
    report.winner = StConvention::Literal;
  else if (allA && allB)
    report.winner = StConvention::SecondLeviBlock;  // degenerate tie; conventions agree here
  return report;
}

std::string to_csv(const ReconcileReport& r) {
  std::ostringstream os;
  os << "d,q,m,k,lhs_dim,rhs_dim_conventionA,rhs_dim_conventionB,match_A,match_B\n";
  for (const ReconcileRow& row : r.rows) {
    os << r.d << ',' << r.q << ',' << r.m << ',' << row.k << ',' << row.lhs << ','
       << row.rhs_second_block << ',' << row.rhs_literal << ',' << (row.match_second_block ? 1 : 0)
       << ',' << (row.match_literal ? 1 : 0) << "\n";
  }
  return os.str();
}

bool four_term_dims_check(i64 q, i64 m, i64 k_max) {
  // d = 1: H^1_Y is the sum over the N rational points of the full local
  // cohomology at that point, whose stage-k piece has dimension k for every
  // twist (monomials with pole order 1..k at the point). The stagewise
  // identity needs stage k >= 1 so the map onto H^1(P^1, O(m)) is onto.
  i64 N = q + 1;
  i64 h0 = projective_space_cohomology_dim(1, 0, m);
  i64 h1 = projective_space_cohomology_dim(1, 1, m);
  std::vector<i64> dims = sections_dims(1, q, m, k_max);
  for (i64 k = h1 == 0 ? 0 : 1; k <= k_max; ++k)
    if (dims[k] - h0 != N * k - h1) return false;
  return true;
}

}  // namespace dhs
