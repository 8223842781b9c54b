#include "dhs/oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <set>

#include "dhs/fingrp.hpp"
#include "dhs/sections.hpp"

namespace dhs::oracle {

namespace {
using bigint = boost::multiprecision::cpp_int;

bigint big_binom(i64 m, i64 n) {
  bigint num = 1, den = 1;
  for (i64 i = 0; i < n; ++i) {
    num *= bigint(m) - i;
    den *= i + 1;
  }
  return num / den;
}
}  // namespace

i64 bigint_binom_mod(i64 m, i64 n, i64 p) {
  if (n < 0) return 0;
  bigint r = big_binom(m, n) % p;
  if (r < 0) r += p;
  return r.convert_to<i64>();
}

i64 bigint_multinomial_mod(const std::vector<i64>& parts, i64 p) {
  bigint num = 1;
  i64 total = 0;
  for (i64 part : parts) {
    for (i64 i = 1; i <= part; ++i) num *= total + i;
    bigint den = 1;
    for (i64 i = 2; i <= part; ++i) den *= i;
    num /= den;
    total += part;
  }
  bigint r = num % p;
  if (r < 0) r += p;
  return r.convert_to<i64>();
}

i64 iterate_then_divide(const Exponents& n_in, const Root& unit, i64 order, i64 p) {
  bigint coeff = 1;
  i64 e = n_in[unit.j];
  for (i64 t = 0; t < order; ++t) coeff *= bigint(e) - t;
  bigint fact = 1;
  for (i64 t = 2; t <= order; ++t) fact *= t;
  coeff /= fact;  // exact by divided-power integrality
  bigint r = coeff % p;
  if (r < 0) r += p;
  return r.convert_to<i64>();
}

bool two_chart_regular(const WeylOperator& op) {
  if (!op.polynomial_coefficients()) return false;
  auto vars = op.support();
  i64 bound = op.max_coeff_degree() + op.max_divided_order() + 2;
  // chart F[T..]: nonnegative inputs must stay nonnegative
  // chart F[T^{-1}..]: nonpositive inputs must stay nonpositive
  std::vector<i64> idx(vars.size(), 0);
  if (vars.empty()) return true;
  while (true) {
    VarExp pos, neg;
    for (size_t t = 0; t < vars.size(); ++t) {
      if (idx[t] != 0) {
        pos[vars[t]] = idx[t];
        neg[vars[t]] = -idx[t];
      }
    }
    for (const auto& [e, c] : op.apply(chart_monomial(pos))) {
      (void)c;
      for (const auto& [r, k] : e) {
        (void)r;
        if (k < 0) return false;
      }
    }
    for (const auto& [e, c] : op.apply(chart_monomial(neg))) {
      (void)c;
      for (const auto& [r, k] : e) {
        (void)r;
        if (k > 0) return false;
      }
    }
    size_t t = 0;
    for (; t < vars.size(); ++t) {
      if (idx[t] < bound) {
        ++idx[t];
        std::fill(idx.begin(), idx.begin() + t, 0);
        break;
      }
    }
    if (t == vars.size()) break;
  }
  return true;
}

std::vector<Exponents> enumerate_sector(int d, int j, i64 twist, i64 window) {
  std::vector<Exponents> out;
  Exponents cur(d + 1, 0);
  std::function<void(int)> rec = [&](int slot) {
    if (slot == d + 1) {
      i64 total = 0;
      for (i64 v : cur) total += v;
      if (total != twist) return;
      for (int i = 0; i <= d; ++i) {
        if (i <= j && cur[i] < 0) return;
        if (i > j && cur[i] >= 0) return;
      }
      out.push_back(cur);
      return;
    }
    for (i64 v = -window; v <= window; ++v) {
      cur[slot] = v;
      rec(slot + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

i64 serre_top_cohomology_count(int d, i64 m, i64 window) {
  i64 count = 0;
  Exponents cur(d + 1, 0);
  std::function<void(int, i64)> rec = [&](int slot, i64 total) {
    if (slot == d + 1) {
      if (total == m) ++count;
      return;
    }
    for (i64 v = -window; v <= -1; ++v) {
      cur[slot] = v;
      rec(slot + 1, total + v);
    }
  };
  rec(0, 0);
  return count;
}

i64 steinberg_dim_by_inclusion_exclusion(int n, i64 q) {
  int d = n - 1;
  i64 total = 0;
  for (i64 mask = 0; mask < (i64{1} << d); ++mask) {
    std::vector<bool> J(d);
    int size = 0;
    for (int s = 0; s < d; ++s) {
      J[s] = (mask >> s) & 1;
      if (J[s]) ++size;
    }
    ParabolicData P = ParabolicData::from_subset(d, J);
    i64 sign = (size % 2 == 0) ? 1 : -1;
    total += sign * coset_count_by_enumeration(d, q, P);
  }
  return total;
}

i64 coset_count_by_enumeration(int d, i64 q, const ParabolicData& P) {
  std::vector<Mat> all = enumerate_gl(d, q);
  std::set<std::string> keys;
  CosetTable table(d, q, P);
  for (const Mat& g : all) keys.insert(std::to_string(table.index_of(g)));
  return static_cast<i64>(keys.size());
}

namespace {

// dense multivariate polynomials over F_p keyed by exponent vectors
using Poly = std::map<Exponents, i64>;

Poly poly_mul(const Poly& a, const Poly& b, i64 p) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      i64& slot = out[e];
      slot = mod_canon(slot + ca * cb, p);
      if (slot == 0) out.erase(e);
    }
  return out;
}

std::vector<Exponents> degree_monomials(int nvars, i64 deg) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  std::function<void(int, i64)> rec = [&](int slot, i64 left) {
    if (slot == nvars - 1) {
      cur[slot] = left;
      out.push_back(cur);
      return;
    }
    for (i64 v = 0; v <= left; ++v) {
      cur[slot] = v;
      rec(slot + 1, left - v);
    }
  };
  if (deg >= 0) rec(0, deg);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool transition_injective(int d, i64 q, i64 m, i64 k) {
  const GaloisField& F = GaloisField::get(q);
  i64 p = F.p();
  Arrangement arr = arrangement(d, q);
  Poly prod{{Exponents(d + 1, 0), 1}};
  for (const auto& normal : arr.normals) {
    Poly lin;
    for (int i = 0; i <= d; ++i)
      if (normal[i] != 0) {
        Exponents e(d + 1, 0);
        e[i] = 1;
        lin[e] = mod_canon(normal[i], p);
      }
    prod = poly_mul(prod, lin, p);
  }
  i64 N = arr.count();
  i64 src_deg = m + k * N;
  if (src_deg < 0) return true;
  std::vector<Exponents> src = degree_monomials(d + 1, src_deg);
  std::vector<Exponents> dst = degree_monomials(d + 1, src_deg + N);
  std::map<Exponents, int> dst_index;
  for (size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = static_cast<int>(i);
  std::vector<std::vector<i64>> rows;
  for (const Exponents& s : src) {
    std::vector<i64> row(dst.size(), 0);
    for (const auto& [e, c] : prod) {
      Exponents t = e;
      for (size_t i = 0; i < t.size(); ++i) t[i] += s[i];
      row[dst_index.at(t)] = c;
    }
    rows.push_back(std::move(row));
  }
  return dense_rank_mod_p(std::move(rows), p) == static_cast<i64>(src.size());
}

}  // namespace dhs::oracle
