#pragma once

// Root-datum conventions for GL_{d+1}, fixed once and read by every module.
//
//   * epsilon_i are the diagonal torus characters; alpha_{i,j} = eps_i - eps_j.
//   * The Borel B is the group of lower-triangular matrices. Its radical U is
//     strictly lower triangular, so the POSITIVE roots are alpha_{i,j} with
//     i > j, and the simple roots are alpha_{s+1,s} for s = 0..d-1.
//   * rho = (0, 1, ..., d): <rho, alpha^vee> = 1 on every simple positive root.
//   * x_gamma for a positive gamma = alpha_{i,j} (i > j) is the matrix unit
//     E_{i,j}; y_gamma = E_{j,i} lies in the opposite (strictly upper) radical.
//   * Weyl elements are permutations sigma of {0..d} with 0/1 matrix
//     representatives; sigma pushes coordinates forward: (sigma.w)_{sigma(i)} = w_i.
//   * The reflection s_k (k = 1..d) used in dot-action chains is the
//     transposition (d-k, d-k+1), numbered from the right end of the diagram.
//
// These choices make the monomial realizations of the local cohomology modules
// honest highest-weight modules: their extremal weights are the chains
// s_{d-j} ... s_1 . 0, and the strictly lower radical acts locally finitely.

#include <cstdlib>
#include <numeric>
#include <vector>

#include "dhs/fq.hpp"

namespace dhs {

/// Integer character/exponent vector (m_0, ..., m_d).
struct Weight {
  std::vector<i64> m;

  Weight() = default;
  explicit Weight(std::vector<i64> v) : m(std::move(v)) {}
  static Weight zero(int d) { return Weight(std::vector<i64>(d + 1, 0)); }

  int rank() const { return static_cast<int>(m.size()) - 1; }
  i64 sum() const { return std::accumulate(m.begin(), m.end(), i64{0}); }

  Weight& operator+=(const Weight& o) {
    for (size_t i = 0; i < m.size(); ++i) m[i] += o.m[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (size_t i = 0; i < m.size(); ++i) m[i] -= o.m[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(i64 c, Weight a) {
    for (auto& v : a.m) v *= c;
    return a;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Root alpha_{i,j} = eps_i - eps_j, i != j. Positive means i > j.
struct Root {
  int i = 0, j = 0;

  Root() = default;
  Root(int i_, int j_) : i(i_), j(j_) {
    if (i == j) throw std::invalid_argument("Root: i == j");
  }

  bool positive() const { return i > j; }
  int height() const { return std::abs(i - j); }
  bool is_simple() const { return positive() && height() == 1; }
  Root negated() const { return Root(j, i); }

  Weight as_weight(int d) const {
    Weight w = Weight::zero(d);
    w.m[i] += 1;
    w.m[j] -= 1;
    return w;
  }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Simple positive root with index s: alpha_{s+1, s}.
inline Root simple_root(int s) { return Root(s + 1, s); }

/// <lambda, gamma^vee> = m_i - m_j for gamma = alpha_{i,j}.
inline i64 coroot_pairing(const Weight& lambda, const Root& gamma) {
  return lambda.m[gamma.i] - lambda.m[gamma.j];
}

/// rho = (0, 1, ..., d).
inline Weight rho(int d) {
  Weight w = Weight::zero(d);
  std::iota(w.m.begin(), w.m.end(), i64{0});
  return w;
}

/// All roots of GL_{d+1}: alpha_{i,j}, 0 <= i != j <= d.
std::vector<Root> all_roots(int d);
std::vector<Root> positive_roots(int d);

}  // namespace dhs
