#include "dhs/monomod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dhs {

i64 total_degree(const Exponents& n) {
  return std::accumulate(n.begin(), n.end(), i64{0});
}

Element monomial(const Exponents& n) { return Element{{n, 1}}; }

std::string exponents_to_string(const Exponents& n) {
  std::ostringstream os;
  for (size_t i = 0; i < n.size(); ++i) {
    if (i) os << ' ';
    os << n[i];
  }
  return os.str();
}

std::string element_to_string(const Element& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : e) {
    if (!first) os << " + ";
    os << c << "*(" << exponents_to_string(n) << ")";
    first = false;
  }
  return os.str();
}

ModuleSpace ModuleSpace::torus_characters(int d, i64 p, i64 window) {
  ModuleSpace M;
  M.d_ = d;
  M.p_ = p;
  M.window_ = window;
  M.flavor_ = Flavor::TorusCharacters;
  return M;
}

ModuleSpace ModuleSpace::laurent_ambient(int d, i64 p, i64 window, i64 total) {
  ModuleSpace M = torus_characters(d, p, window);
  M.twist_ = total;
  return M;
}

namespace {
void check_dj(int d, int j) {
  if (d < 1 || j < 0 || j > d - 1)
    throw std::invalid_argument("local cohomology requires 0 <= j <= d-1");
}
}  // namespace

ModuleSpace ModuleSpace::local_cohomology(int d, int j, i64 p, i64 window, i64 twist) {
  check_dj(d, j);
  ModuleSpace M;
  M.d_ = d;
  M.j_ = j;
  M.p_ = p;
  M.window_ = window;
  M.twist_ = twist;
  M.flavor_ = Flavor::LocalCohomology;
  return M;
}

ModuleSpace ModuleSpace::reduced_local_cohomology(int d, int j, i64 p, i64 window, i64 twist) {
  ModuleSpace M = local_cohomology(d, j, p, window, twist);
  M.flavor_ = Flavor::ReducedLocalCohomology;
  return M;
}

ModuleSpace ModuleSpace::polynomial_forms(int d, i64 p, i64 window, i64 degree) {
  ModuleSpace M;
  M.d_ = d;
  M.p_ = p;
  M.window_ = window;
  M.twist_ = degree;
  M.flavor_ = Flavor::PolynomialRing;
  return M;
}

bool ModuleSpace::in_window(const Exponents& n) const {
  for (i64 v : n)
    if (v > window_ || v < -window_) return false;
  return true;
}

bool ModuleSpace::is_serre_monomial(const Exponents& n) const {
  if (total_degree(n) != twist_) return false;
  for (i64 v : n)
    if (v >= 0) return false;
  return true;
}

MonomialClass ModuleSpace::classify(const Exponents& n) const {
  if (static_cast<int>(n.size()) != d_ + 1)
    throw std::invalid_argument("monomial has wrong number of variables");
  bool alive = false;
  switch (flavor_) {
    case Flavor::TorusCharacters:
      alive = total_degree(n) == twist_;
      break;
    case Flavor::PolynomialRing: {
      alive = total_degree(n) == twist_;
      for (i64 v : n) alive = alive && v >= 0;
      break;
    }
    case Flavor::ReducedLocalCohomology:
    case Flavor::LocalCohomology: {
      bool sector = total_degree(n) == twist_;
      for (int i = 0; i <= d_ && sector; ++i)
        sector = i <= j_ ? n[i] >= 0 : n[i] <= -1;
      alive = sector || (flavor_ == Flavor::LocalCohomology && is_serre_monomial(n));
      break;
    }
  }
  if (!alive) return MonomialClass::Killed;
  return in_window(n) ? MonomialClass::Alive : MonomialClass::OutOfWindow;
}

namespace {

void enumerate_rec(const ModuleSpace& M, Exponents& cur, int slot, std::vector<Exponents>& out) {
  int d = M.d();
  if (slot == d + 1) {
    if (M.classify(cur) == MonomialClass::Alive) out.push_back(cur);
    return;
  }
  i64 lo = -M.window(), hi = M.window();
  switch (M.flavor()) {
    case Flavor::PolynomialRing:
      lo = 0;
      break;
    case Flavor::ReducedLocalCohomology:
      if (slot <= M.j()) lo = 0;
      else hi = -1;
      break;
    case Flavor::LocalCohomology:
      if (slot > M.j()) hi = -1;  // both the sector and the Serre part have n_i < 0 there
      break;
    case Flavor::TorusCharacters:
      break;
  }
  i64 partial = std::accumulate(cur.begin(), cur.begin() + slot, i64{0});
  for (i64 v = lo; v <= hi; ++v) {
    // remaining slots can still move the total by at most (d - slot) * window
    i64 rest = static_cast<i64>(d - slot) * M.window();
    i64 need = M.twist() - partial - v;
    if (need > rest || need < -rest) continue;
    cur[slot] = v;
    enumerate_rec(M, cur, slot + 1, out);
  }
  cur[slot] = 0;
}

}  // namespace

std::vector<Exponents> ModuleSpace::basis() const {
  std::vector<Exponents> out;
  Exponents cur(d_ + 1, 0);
  enumerate_rec(*this, cur, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Weight, i64> ModuleSpace::weight_dims() const {
  std::map<Weight, i64> dims;
  for (const Exponents& n : basis()) dims[weight_of(n)] += 1;
  return dims;
}

std::string ModuleSpace::dump_basis() const {
  std::ostringstream os;
  os << "# d=" << d_ << " j=" << j_ << " W=" << window_ << " p=" << p_ << "\n";
  for (const Exponents& n : basis()) os << exponents_to_string(n) << "\n";
  return os.str();
}

namespace {

void require_actable(const ModuleSpace& M, const char* what) {
  if (M.flavor() == Flavor::LocalCohomology)
    throw std::invalid_argument(std::string(what) +
                                ": act on the reduced presentation, not the full module");
}

void accumulate(const ModuleSpace& M, ActionResult& acc, Exponents n, i64 coeff) {
  coeff = mod_canon(coeff, M.p());
  if (coeff == 0) return;
  switch (M.classify(n)) {
    case MonomialClass::Alive: {
      i64& slot = acc.value[n];
      slot = mod_canon(slot + coeff, M.p());
      if (slot == 0) acc.value.erase(n);
      break;
    }
    case MonomialClass::Killed:
      break;
    case MonomialClass::OutOfWindow:
      acc.overflow = true;
      break;
  }
}

}  // namespace

ActionResult act_divided(const ModuleSpace& M, const DividedPower& g, const Element& v) {
  require_actable(M, "act_divided");
  if (g.order < 0) throw std::invalid_argument("act_divided: order must be >= 0");
  ActionResult out;
  int a = g.unit.i, b = g.unit.j;
  for (const auto& [n, c] : v) {
    i64 scalar = lucas_binom(n[b], g.order, M.p());
    if (scalar == 0) continue;
    Exponents shifted = n;
    shifted[a] += g.order;
    shifted[b] -= g.order;
    accumulate(M, out, std::move(shifted), c * scalar);
  }
  return out;
}

ActionResult act_root(const ModuleSpace& M, const Root& unit, const Element& v) {
  return act_divided(M, DividedPower{unit, 1}, v);
}

Element act_torus_binom(const ModuleSpace& M, const TorusBinom& g, const Element& v) {
  if (g.order < 0) throw std::invalid_argument("act_torus_binom: order must be >= 0");
  Element out;
  for (const auto& [n, c] : v) {
    i64 scalar = lucas_binom(coroot_pairing(weight_of(n), g.gamma), g.order, M.p());
    i64 coeff = mod_canon(c * scalar, M.p());
    if (coeff != 0) out[n] = coeff;
  }
  return out;
}

Element act_torus_unit(const ModuleSpace& M, int i, const Element& v) {
  Element out;
  for (const auto& [n, c] : v) {
    i64 coeff = mod_canon(c * n[i], M.p());
    if (coeff != 0) out[n] = coeff;
  }
  return out;
}

ActionResult act_ratio_shift(const ModuleSpace& M, int a, int b, i64 times, const Element& v) {
  require_actable(M, "act_ratio_shift");
  if (a == b) throw std::invalid_argument("act_ratio_shift: a == b");
  // only the slot whose exponent drops must be an inverted variable
  if (M.flavor() == Flavor::ReducedLocalCohomology &&
      ((times > 0 && b <= M.j()) || (times < 0 && a <= M.j())))
    throw std::invalid_argument(
        "act_ratio_shift: the divided-out variable must be inverted (slot > j)");
  ActionResult out;
  for (const auto& [n, c] : v) {
    Exponents shifted = n;
    shifted[a] += times;
    shifted[b] -= times;
    accumulate(M, out, std::move(shifted), c);
  }
  return out;
}

ActionResult act_elementary(const ModuleSpace& M, int a, int b, i64 c, const Element& v) {
  require_actable(M, "act_elementary");
  if (a == b) throw std::invalid_argument("act_elementary: a == b");
  c = mod_canon(c, M.p());
  if (c == 0) return ActionResult{v, false};
  ActionResult out;
  for (const auto& [n, c0] : v) {
    i64 e = n[b];
    i64 ck = 1;  // c^k
    for (i64 k = 0;; ++k) {
      if (k > 0) ck = ck * c % M.p();
      Exponents term = n;
      term[a] += k;
      term[b] = e - k;
      if (e >= 0 && k > e) break;
      bool killed_for_good =
          M.flavor() == Flavor::ReducedLocalCohomology && a > M.j() && term[a] >= 0;
      if (killed_for_good) break;  // every later term is killed too
      if (!M.in_window(term)) {
        // the remaining tail cannot re-enter the window; censored
        out.overflow = true;
        break;
      }
      accumulate(M, out, std::move(term), c0 * lucas_binom(e, k, M.p()) * ck);
      if (e >= 0 && k == e) break;
    }
  }
  return out;
}

ActionResult act_permutation(const ModuleSpace& M, const WeylElement& sigma, const Element& v) {
  require_actable(M, "act_permutation");
  i64 sign = 1;
  if (M.flavor() == Flavor::ReducedLocalCohomology) {
    for (int i = 0; i <= M.d(); ++i)
      if ((i <= M.j()) != (sigma(i) <= M.j()))
        throw std::invalid_argument(
            "act_permutation: permutation must preserve the numerator/denominator blocks");
    // the top Cech cochain is alternating in the inverted variables, so the
    // class picks up the sign of the permutation of the denominator slots
    for (int i = M.j() + 1; i <= M.d(); ++i)
      for (int k = i + 1; k <= M.d(); ++k)
        if (sigma(i) > sigma(k)) sign = -sign;
  }
  ActionResult out;
  for (const auto& [n, c] : v) {
    Exponents moved(n.size());
    for (size_t i = 0; i < n.size(); ++i) moved[sigma(static_cast<int>(i))] = n[i];
    accumulate(M, out, std::move(moved), sign * c);
  }
  return out;
}

Element act_diagonal(const ModuleSpace& M, const std::vector<i64>& t, const Element& v) {
  Element out;
  for (const auto& [n, c] : v) {
    i64 scalar = 1;
    for (size_t i = 0; i < n.size(); ++i) {
      i64 ti = mod_canon(t[i], M.p());
      if (ti == 0) throw std::invalid_argument("act_diagonal: torus entries must be nonzero");
      scalar = scalar * (n[i] >= 0 ? pow_mod(ti, n[i], M.p()) : pow_mod(inv_mod(ti, M.p()), -n[i], M.p())) % M.p();
    }
    i64 coeff = mod_canon(c * scalar, M.p());
    if (coeff != 0) out[n] = coeff;
  }
  return out;
}

Exponents extremal_monomial(const ModuleSpace& M) {
  if (M.flavor() != Flavor::ReducedLocalCohomology)
    throw std::invalid_argument("extremal_monomial: reduced local cohomology only");
  i64 top = (M.d() - M.j()) + M.twist();
  if (top < 0) throw std::invalid_argument("extremal_monomial: twist too negative");
  Exponents n(M.d() + 1, 0);
  n[M.j()] = top;
  for (int i = M.j() + 1; i <= M.d(); ++i) n[i] = -1;
  if (M.classify(n) != MonomialClass::Alive)
    throw std::invalid_argument("extremal_monomial: window too small");
  return n;
}

bool annihilated_by_all_raising(const ModuleSpace& M, const Element& v, i64 max_order) {
  for (const Root& gamma : positive_roots(M.d())) {
    for (i64 n = 1; n <= max_order; ++n) {
      ActionResult r = act_divided(M, DividedPower{gamma, n}, v);
      if (!r.value.empty() || r.overflow) return false;
    }
  }
  return true;
}

ReducedPart reduced_part(const ModuleSpace& M) {
  if (M.flavor() != Flavor::LocalCohomology && M.flavor() != Flavor::ReducedLocalCohomology)
    throw std::invalid_argument("reduced_part: unsupported flavor");
  ReducedPart out{ModuleSpace::reduced_local_cohomology(M.d(), M.j(), M.p(), M.window(), M.twist()), {}};
  if (M.flavor() == Flavor::LocalCohomology) {
    for (const Exponents& n : M.basis())
      if (M.is_serre_monomial(n)) out.excluded.push_back(n);
  }
  return out;
}

i64 pairing(const std::map<Root, i64>& divided_orders,
            const std::map<Root, i64>& function_exponents, const ParabolicData& P) {
  auto radical = P.radical_roots();
  auto in_radical = [&](const Root& r) {
    return std::find(radical.begin(), radical.end(), r) != radical.end();
  };
  std::map<Root, i64> lhs, rhs;
  for (const auto& [r, n] : divided_orders) {
    if (n < 0) throw std::invalid_argument("pairing: negative divided-power order");
    if (n == 0) continue;
    if (!in_radical(r)) throw std::invalid_argument("pairing: mismatched parabolic context");
    lhs[r] = n;
  }
  for (const auto& [r, m] : function_exponents) {
    if (m < 0) throw std::invalid_argument("pairing: negative function exponent");
    if (m == 0) continue;
    if (!in_radical(r)) throw std::invalid_argument("pairing: mismatched parabolic context");
    rhs[r] = m;
  }
  return lhs == rhs ? 1 : 0;
}

std::map<Weight, i64> graded_dual_dims(const std::map<Weight, i64>& dims) { return dims; }

}  // namespace dhs
