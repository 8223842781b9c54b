#include "dhs/fingrp.hpp"

#include <algorithm>
#include <sstream>
#include <variant>

namespace dhs {

Mat::Mat(const GaloisField& F, int n) : F_(&F), n_(n), a_(n * n, 0) {}

Mat Mat::identity(const GaloisField& F, int n) {
  Mat m(F, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

Mat Mat::elementary(const GaloisField& F, int n, int a, int b, int c) {
  if (a == b) throw std::invalid_argument("Mat::elementary: a == b");
  Mat m = identity(F, n);
  m.at(a, b) = c;
  return m;
}

Mat Mat::permutation(const GaloisField& F, const WeylElement& w) {
  int n = w.rank() + 1;
  Mat m(F, n);
  for (int i = 0; i < n; ++i) m.at(w(i), i) = F.one();
  return m;
}

Mat Mat::diagonal(const GaloisField& F, const std::vector<int>& t) {
  Mat m(F, static_cast<int>(t.size()));
  for (size_t i = 0; i < t.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = t[i];
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.F_ != y.F_ || x.n_ != y.n_) throw std::invalid_argument("Mat: shape/field mismatch");
  const GaloisField& F = *x.F_;
  Mat out(F, x.n_);
  for (int i = 0; i < x.n_; ++i)
    for (int k = 0; k < x.n_; ++k) {
      int v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n_; ++j)
        out.at(i, j) = F.add(out.at(i, j), F.mul(v, y.at(k, j)));
    }
  return out;
}

Mat Mat::inverse() const {
  const GaloisField& F = *F_;
  Mat a = *this, inv = identity(F, n_);
  for (int c = 0; c < n_; ++c) {
    int pivot = -1;
    for (int r = c; r < n_; ++r)
      if (a.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("Mat::inverse: singular matrix");
    for (int k = 0; k < n_; ++k) {
      std::swap(a.a_[pivot * n_ + k], a.a_[c * n_ + k]);
      std::swap(inv.a_[pivot * n_ + k], inv.a_[c * n_ + k]);
    }
    int s = F.inv(a.at(c, c));
    for (int k = 0; k < n_; ++k) {
      a.at(c, k) = F.mul(s, a.at(c, k));
      inv.at(c, k) = F.mul(s, inv.at(c, k));
    }
    for (int r = 0; r < n_; ++r) {
      if (r == c || a.at(r, c) == 0) continue;
      int f = a.at(r, c);
      for (int k = 0; k < n_; ++k) {
        a.at(r, k) = F.sub(a.at(r, k), F.mul(f, a.at(c, k)));
        inv.at(r, k) = F.sub(inv.at(r, k), F.mul(f, inv.at(c, k)));
      }
    }
  }
  return inv;
}

int Mat::det() const {
  const GaloisField& F = *F_;
  Mat a = *this;
  int det = F.one();
  for (int c = 0; c < n_; ++c) {
    int pivot = -1;
    for (int r = c; r < n_; ++r)
      if (a.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int k = 0; k < n_; ++k) std::swap(a.a_[pivot * n_ + k], a.a_[c * n_ + k]);
      det = F.neg(det);
    }
    det = F.mul(det, a.at(c, c));
    int s = F.inv(a.at(c, c));
    for (int r = c + 1; r < n_; ++r) {
      if (a.at(r, c) == 0) continue;
      int f = F.mul(a.at(r, c), s);
      for (int k = c; k < n_; ++k) a.at(r, k) = F.sub(a.at(r, k), F.mul(f, a.at(c, k)));
    }
  }
  return det;
}

std::string Mat::encode() const {
  std::string out;
  out.reserve(a_.size());
  for (int v : a_) out.push_back(static_cast<char>(v));
  return out;
}

std::vector<std::vector<i64>> Mat::to_int_rows() const {
  std::vector<std::vector<i64>> out(n_, std::vector<i64>(n_));
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out[r][c] = at(r, c);
  return out;
}

i64 group_order(int d, i64 q) {
  int n = d + 1;
  i64 qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  i64 order = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

std::vector<Mat> enumerate_gl(int d, i64 q, i64 ceiling) {
  if (group_order(d, q) > ceiling)
    throw std::invalid_argument("enumerate_gl: group order exceeds enumeration ceiling");
  const GaloisField& F = GaloisField::get(q);
  int n = d + 1;
  i64 cells = static_cast<i64>(n) * n;
  std::vector<Mat> out;
  Mat m(F, n);
  std::vector<int> digits(cells, 0);
  while (true) {
    for (i64 t = 0; t < cells; ++t) m.at(static_cast<int>(t / n), static_cast<int>(t % n)) = digits[t];
    if (m.invertible()) out.push_back(m);
    i64 t = 0;
    for (; t < cells; ++t) {
      if (digits[t] < F.q() - 1) {
        ++digits[t];
        std::fill(digits.begin(), digits.begin() + t, 0);
        break;
      }
    }
    if (t == cells) break;
  }
  return out;
}

bool in_parabolic(const Mat& g, const ParabolicData& P) {
  const auto& blk = P.block_of();
  for (int r = 0; r < g.n(); ++r)
    for (int c = 0; c < g.n(); ++c)
      if (g.at(r, c) != 0 && blk[r] < blk[c]) return false;
  return true;
}

CosetTable::CosetTable(int d, i64 q, const ParabolicData& P, i64 ceiling)
    : d_(d), F_(&GaloisField::get(q)), P_(P) {
  if (P.rank() != d) throw std::invalid_argument("CosetTable: parabolic rank mismatch");
  if (bruhat_point_count(P, q) > ceiling)
    throw std::invalid_argument("CosetTable: coset count exceeds ceiling");
  strata_ = weyl_coset_data(P);
  int n = d + 1;
  for (size_t si = 0; si < strata_.size(); ++si) {
    const CosetStratum& st = strata_[si];
    Mat wmat = Mat::permutation(*F_, st.w);
    size_t nroots = st.ubw_roots.size();
    std::vector<int> coeff(nroots, 0);
    while (true) {
      Mat u = Mat::identity(*F_, n);
      for (size_t t = 0; t < nroots; ++t)
        if (coeff[t] != 0) u = u * Mat::elementary(*F_, n, st.ubw_roots[t].i, st.ubw_roots[t].j, coeff[t]);
      Mat rep = u * wmat;
      int idx = static_cast<int>(reps_.size());
      reps_.push_back(rep);
      stratum_idx_.push_back(static_cast<int>(si));
      key_to_idx_.emplace(flag_key(rep), idx);

      size_t t = 0;
      for (; t < nroots; ++t) {
        if (coeff[t] < F_->q() - 1) {
          ++coeff[t];
          std::fill(coeff.begin(), coeff.begin() + t, 0);
          break;
        }
      }
      if (t == nroots) break;
    }
  }
}

std::string CosetTable::flag_key(const Mat& g) const {
  // row-reduced bases of the spans of the last s columns, s over the suffix
  // sums of the composition; invariant under right multiplication by P
  const GaloisField& F = *F_;
  int n = d_ + 1;
  std::ostringstream key;
  const auto& comp = P_.composition();
  int s = 0;
  for (size_t t = comp.size(); t-- > 1;) {
    s += comp[t];
    std::vector<std::vector<int>> rows;
    for (int c = n - s; c < n; ++c) {
      std::vector<int> row(n);
      for (int r = 0; r < n; ++r) row[r] = g.at(r, c);
      rows.push_back(std::move(row));
    }
    // row reduce over F_q
    int rk = 0;
    for (int c = 0; c < n && rk < static_cast<int>(rows.size()); ++c) {
      int pivot = -1;
      for (int r = rk; r < static_cast<int>(rows.size()); ++r)
        if (rows[r][c] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(rows[rk], rows[pivot]);
      int inv = F.inv(rows[rk][c]);
      for (int k = 0; k < n; ++k) rows[rk][k] = F.mul(inv, rows[rk][k]);
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (r == rk || rows[r][c] == 0) continue;
        int f = rows[r][c];
        for (int k = 0; k < n; ++k) rows[r][k] = F.sub(rows[r][k], F.mul(f, rows[rk][k]));
      }
      ++rk;
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& row : rows)
      for (int v : row) key << v << ',';
    key << ';';
  }
  return key.str();
}

int CosetTable::index_of(const Mat& g) const {
  auto it = key_to_idx_.find(flag_key(g));
  if (it == key_to_idx_.end()) throw std::domain_error("CosetTable::index_of: unknown coset");
  return it->second;
}

Mat CosetTable::p_part(const Mat& g, int idx) const {
  Mat p = reps_[idx].inverse() * g;
  if (!in_parabolic(p, P_)) throw std::domain_error("CosetTable::p_part: not in the parabolic");
  return p;
}

std::string CosetTable::to_csv() const {
  std::ostringstream os;
  os << "index";
  int n = d_ + 1;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) os << ",g" << r << c;
  os << "\n";
  for (size_t idx = 0; idx < reps_.size(); ++idx) {
    os << idx;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) os << ',' << reps_[idx].at(r, c);
    os << "\n";
  }
  return os.str();
}

i64 steinberg_dim(int n, i64 q) {
  i64 e = static_cast<i64>(n) * (n - 1) / 2;
  i64 out = 1;
  for (i64 i = 0; i < e; ++i) out *= q;
  return out;
}

i64 generalized_steinberg_dim(int d, i64 q, const std::vector<int>& composition, i64 ceiling) {
  ParabolicData P = ParabolicData::from_composition(d, composition);
  CosetTable base(d, q, P, ceiling);
  i64 p = GaloisField::get(q).p();
  // rows: indicator functions of the fibers of G/P -> G/Q, all Q strictly above P
  std::vector<std::vector<i64>> rows;
  int dsz = static_cast<int>(base.size());
  int nsimple = d;
  for (i64 mask = 0; mask < (i64{1} << nsimple); ++mask) {
    std::vector<bool> J(nsimple);
    bool above = true, strict = false;
    for (int s = 0; s < nsimple; ++s) {
      J[s] = (mask >> s) & 1;
      if (P.subset()[s] && !J[s]) above = false;
      if (J[s] && !P.subset()[s]) strict = true;
    }
    if (!above || !strict) continue;
    ParabolicData Q = ParabolicData::from_subset(d, J);
    CosetTable qt(d, q, Q, ceiling);
    std::vector<std::vector<i64>> fibers(qt.size(), std::vector<i64>(dsz, 0));
    for (int i = 0; i < dsz; ++i)
      fibers[qt.index_of(base.representative(i))][i] = 1;
    for (auto& f : fibers) rows.push_back(std::move(f));
  }
  if (rows.empty()) return base.size();  // P = G: the trivial module
  return base.size() - dense_rank_mod_p(std::move(rows), p);
}

std::map<i64, i64> induce_graded(const std::map<i64, i64>& dims, const ParabolicData& P, i64 q) {
  i64 index = bruhat_point_count(P, q);
  std::map<i64, i64> out;
  for (const auto& [deg, dim] : dims)
    if (dim != 0) out[deg] = dim * index;
  return out;
}

namespace {

struct ElemStep {
  int a, b;
  i64 c;
};
struct PermStep {
  WeylElement w;
};
struct DiagStep {
  std::vector<i64> t;
};
using SubstStep = std::variant<ElemStep, PermStep, DiagStep>;

// Factor an invertible matrix mod p into row operations: returns factors in
// application order (first applied first), so that pi(g) = fold of pi(F_i)
// applied right-to-left over the returned list reversed; we return them in
// the order they should be applied to a module element.
std::vector<SubstStep> gauss_factor(std::vector<std::vector<i64>> m, i64 p, int lo, int hi) {
  // operates on the principal block [lo, hi); other slots untouched
  std::vector<SubstStep> inverses;  // F_1, F_2, ... with M = F_1 F_2 ... F_k
  for (int c = lo; c < hi; ++c) {
    int pivot = -1;
    for (int r = c; r < hi; ++r)
      if (mod_canon(m[r][c], p) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("parabolic_act: singular block");
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      int n = static_cast<int>(m.size());
      inverses.push_back(PermStep{WeylElement::transposition(n - 1, pivot, c)});
    }
    i64 s = mod_canon(m[c][c], p);
    if (s != 1) {
      i64 sinv = inv_mod(s, p);
      for (int k = 0; k < static_cast<int>(m[c].size()); ++k) m[c][k] = mod_canon(m[c][k] * sinv, p);
      std::vector<i64> t(m.size(), 1);
      t[c] = s;
      inverses.push_back(DiagStep{std::move(t)});
    }
    for (int r = lo; r < hi; ++r) {
      if (r == c) continue;
      i64 f = mod_canon(m[r][c], p);
      if (f == 0) continue;
      for (int k = 0; k < static_cast<int>(m[r].size()); ++k)
        m[r][k] = mod_canon(m[r][k] - f * m[c][k], p);
      inverses.push_back(ElemStep{r, c, f});  // inverse of the row op I - f E_{rc}
    }
  }
  // M = F_1 ... F_k: apply F_k first
  std::reverse(inverses.begin(), inverses.end());
  return inverses;
}

ActionResult apply_step(const ModuleSpace& M, const SubstStep& s, const Element& v) {
  if (std::holds_alternative<ElemStep>(s)) {
    const auto& e = std::get<ElemStep>(s);
    return act_elementary(M, e.a, e.b, e.c, v);
  }
  if (std::holds_alternative<PermStep>(s)) return act_permutation(M, std::get<PermStep>(s).w, v);
  return ActionResult{act_diagonal(M, std::get<DiagStep>(s).t, v), false};
}

}  // namespace

ActionResult parabolic_act(const ModuleSpace& M, const std::vector<std::vector<i64>>& g,
                           const Element& v) {
  int n = M.d() + 1;
  if (static_cast<int>(g.size()) != n)
    throw std::invalid_argument("parabolic_act: matrix size mismatch");
  i64 p = M.p();
  std::vector<std::vector<i64>> r(n, std::vector<i64>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = mod_canon(g[i][j], p);

  bool sector = M.flavor() == Flavor::ReducedLocalCohomology;
  std::vector<SubstStep> steps;
  if (sector) {
    int cut = M.j() + 1;  // blocks {0..j}, {j+1..d}
    for (int a = 0; a < cut; ++a)
      for (int b = cut; b < n; ++b)
        if (r[a][b] != 0)
          throw std::invalid_argument("parabolic_act: unsupported element class (not in the parabolic)");
    // radical part: g = u_rad * blockdiag, u_rad = I + (cross-block entries of g * blockdiag^{-1})
    std::vector<std::vector<i64>> blockdiag(n, std::vector<i64>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((a < cut) == (b < cut)) blockdiag[a][b] = r[a][b];
    // invert blockdiag mod p blockwise to extract the radical coefficients
    auto inv_block = [&](int lo, int hi) {
      int sz = hi - lo;
      std::vector<std::vector<i64>> a(sz, std::vector<i64>(2 * sz, 0));
      for (int i = 0; i < sz; ++i) {
        for (int j = 0; j < sz; ++j) a[i][j] = blockdiag[lo + i][lo + j];
        a[i][sz + i] = 1;
      }
      for (int c = 0; c < sz; ++c) {
        int pivot = -1;
        for (int rr = c; rr < sz; ++rr)
          if (a[rr][c] != 0) {
            pivot = rr;
            break;
          }
        if (pivot < 0) throw std::domain_error("parabolic_act: singular matrix");
        std::swap(a[c], a[pivot]);
        i64 s = inv_mod(a[c][c], p);
        for (int k = 0; k < 2 * sz; ++k) a[c][k] = a[c][k] * s % p;
        for (int rr = 0; rr < sz; ++rr) {
          if (rr == c || a[rr][c] == 0) continue;
          i64 f = a[rr][c];
          for (int k = 0; k < 2 * sz; ++k) a[rr][k] = mod_canon(a[rr][k] - f * a[c][k], p);
        }
      }
      std::vector<std::vector<i64>> out(sz, std::vector<i64>(sz));
      for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) out[i][j] = a[i][sz + j];
      return out;
    };
    auto inv0 = inv_block(0, cut);
    // u_rad entries: N = (r - blockdiag) * blockdiag^{-1}, supported on rows >= cut, cols < cut
    // two-block radical is abelian, so the elementary factors commute
    std::vector<SubstStep> rad;
    for (int a = cut; a < n; ++a) {
      for (int b = 0; b < cut; ++b) {
        i64 entry = 0;
        for (int k = 0; k < cut; ++k) entry = mod_canon(entry + r[a][k] * inv0[k][b], p);
        if (entry != 0) rad.push_back(ElemStep{a, b, entry});
      }
    }
    // g = u_rad * blockdiag: apply blockdiag first
    auto f1 = gauss_factor(blockdiag, p, 0, cut);
    auto f2 = gauss_factor(blockdiag, p, cut, n);
    steps.insert(steps.end(), f2.begin(), f2.end());
    steps.insert(steps.end(), f1.begin(), f1.end());
    steps.insert(steps.end(), rad.begin(), rad.end());
  } else {
    steps = gauss_factor(r, p, 0, n);
  }

  ActionResult acc{v, false};
  for (const SubstStep& s : steps) {
    if (acc.value.empty()) break;
    ActionResult r2 = apply_step(M, s, acc.value);
    acc.value = std::move(r2.value);
    acc.overflow = acc.overflow || r2.overflow;
  }
  return acc;
}

ActionResult parabolic_act(const ModuleSpace& M, const Mat& g, const Element& v) {
  return parabolic_act(M, g.to_int_rows(), v);
}

i64 pole_degree(const ModuleSpace& M, const Exponents& n) {
  if (M.flavor() == Flavor::ReducedLocalCohomology || M.flavor() == Flavor::LocalCohomology) {
    i64 pole = 0;
    for (int i = M.j() + 1; i <= M.d(); ++i) pole += n[i] < 0 ? -n[i] : 0;
    return pole;
  }
  return 0;
}

std::map<i64, i64> dims_by_pole(const ModuleSpace& M) {
  std::map<i64, i64> out;
  for (const Exponents& n : M.basis()) out[pole_degree(M, n)] += 1;
  return out;
}

}  // namespace dhs
