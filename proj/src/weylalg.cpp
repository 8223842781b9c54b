#include "dhs/weylalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <sstream>

namespace dhs {

namespace {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

void normalize_varexp(VarExp& e) {
  for (auto it = e.begin(); it != e.end();)
    it = it->second == 0 ? e.erase(it) : std::next(it);
}

bigint big_binom(const bigint& m, i64 n) {
  bigint num = 1, den = 1;
  for (i64 i = 0; i < n; ++i) {
    num *= m - i;
    den *= i + 1;
  }
  return num / den;  // exact: product of n consecutive integers over n!
}

}  // namespace

ChartPoly chart_monomial(const VarExp& e) {
  VarExp n = e;
  normalize_varexp(n);
  return ChartPoly{{n, 1}};
}

std::string chart_poly_to_string(const ChartPoly& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f) {
    if (!first) os << " + ";
    os << c;
    for (const auto& [r, k] : e)
      os << "*T(" << r.i << "," << r.j << ")^" << k;
    first = false;
  }
  return os.str();
}

WeylOperator WeylOperator::one(i64 p) { return term(p, 1, {}, {}); }

WeylOperator WeylOperator::term(i64 p, i64 coeff, VarExp t_deg, VarExp dp_ord) {
  WeylOperator out(p);
  out.add_term(coeff, std::move(t_deg), std::move(dp_ord));
  return out;
}

void WeylOperator::add_term(i64 coeff, VarExp t_deg, VarExp dp_ord) {
  for (const auto& [r, n] : dp_ord)
    if (n < 0) throw std::invalid_argument("WeylOperator: negative divided-power order");
  normalize_varexp(t_deg);
  normalize_varexp(dp_ord);
  coeff = mod_canon(coeff, p_);
  if (coeff == 0) return;
  auto key = std::make_pair(std::move(t_deg), std::move(dp_ord));
  i64& slot = terms_[key];
  slot = mod_canon(slot + coeff, p_);
  if (slot == 0) terms_.erase(key);
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  if (o.p_ != p_) throw std::invalid_argument("WeylOperator: characteristic mismatch");
  for (const auto& [key, c] : o.terms_) add_term(c, key.first, key.second);
  return *this;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("WeylOperator: characteristic mismatch");
  i64 p = a.p_;
  WeylOperator out(p);
  for (const auto& [ka, ca] : a.terms_) {
    const auto& [A1, B1] = ka;
    for (const auto& [kb, cb] : b.terms_) {
      const auto& [A2, B2] = kb;
      // commute y^{[B1]} past T^{A2}: per-variable divided Leibniz
      std::vector<Root> vars;
      for (const auto& [r, n] : B1)
        if (A2.count(r)) vars.push_back(r);
      std::vector<i64> k(vars.size(), 0);
      while (true) {
        i64 coeff = mod_canon(ca * cb, p);
        VarExp tdeg = A1, ord = B2;
        for (const auto& [r, n] : A2) tdeg[r] += n;
        for (const auto& [r, n] : B1) ord[r] += n;
        for (size_t t = 0; t < vars.size(); ++t) {
          const Root& r = vars[t];
          coeff = coeff * lucas_binom(A2.at(r), k[t], p) % p;
          tdeg[r] -= k[t];
          ord[r] -= k[t];
        }
        // divided-power composition y^{[b1-k]} y^{[b2]} = C(b1-k+b2, b2) y^{[b1-k+b2]}
        for (const auto& [r, n2] : B2) {
          auto it = ord.find(r);
          coeff = coeff * lucas_binom(it->second, n2, p) % p;
        }
        if (coeff != 0) out.add_term(coeff, std::move(tdeg), std::move(ord));

        size_t t = 0;
        for (; t < vars.size(); ++t) {
          if (k[t] < B1.at(vars[t])) {
            ++k[t];
            std::fill(k.begin(), k.begin() + t, 0);
            break;
          }
        }
        if (t == vars.size()) break;
      }
    }
  }
  return out;
}

ChartPoly WeylOperator::apply(const ChartPoly& f) const {
  ChartPoly out;
  for (const auto& [key, c] : terms_) {
    const auto& [A, B] = key;
    for (const auto& [E, ce] : f) {
      i64 coeff = mod_canon(c * ce, p_);
      VarExp res = E;
      for (const auto& [r, n] : B) {
        i64 e = res.count(r) ? res.at(r) : 0;
        coeff = coeff * lucas_binom(e, n, p_) % p_;
        if (coeff == 0) break;
        res[r] = e - n;
      }
      if (coeff == 0) continue;
      for (const auto& [r, n] : A) res[r] += n;
      normalize_varexp(res);
      i64& slot = out[res];
      slot = mod_canon(slot + coeff, p_);
      if (slot == 0) out.erase(res);
    }
  }
  return out;
}

std::vector<Root> WeylOperator::support() const {
  std::vector<Root> vars;
  auto note = [&](const Root& r) {
    if (std::find(vars.begin(), vars.end(), r) == vars.end()) vars.push_back(r);
  };
  for (const auto& [key, c] : terms_) {
    (void)c;
    for (const auto& [r, n] : key.first) note(r);
    for (const auto& [r, n] : key.second) note(r);
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

i64 WeylOperator::max_divided_order() const {
  i64 best = 0;
  for (const auto& [key, c] : terms_) {
    (void)c;
    for (const auto& [r, n] : key.second) best = std::max(best, n);
  }
  return best;
}

i64 WeylOperator::max_coeff_degree() const {
  i64 best = 0;
  for (const auto& [key, c] : terms_) {
    (void)c;
    for (const auto& [r, n] : key.first) best = std::max(best, n);
  }
  return best;
}

bool WeylOperator::polynomial_coefficients() const {
  for (const auto& [key, c] : terms_) {
    (void)c;
    for (const auto& [r, n] : key.first)
      if (n < 0) return false;
  }
  return true;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument("operator parse error: expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos));
  }
  i64 integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw std::invalid_argument("operator parse error: expected integer at position " +
                                  std::to_string(start));
    return std::stoll(s.substr(start, pos - start));
  }
  Root root() {
    expect('(');
    i64 i = integer();
    expect(',');
    i64 j = integer();
    expect(')');
    return Root(static_cast<int>(i), static_cast<int>(j));
  }
  bool done() {
    skip_ws();
    return pos == s.size();
  }
};

}  // namespace

WeylOperator WeylOperator::parse(const std::string& text, i64 p) {
  WeylOperator out(p);
  Parser in(text);
  in.skip_ws();
  if (in.done()) throw std::invalid_argument("operator parse error: empty input");
  do {
    i64 coeff = 1;
    VarExp tdeg, ord;
    do {
      in.skip_ws();
      if (in.pos < in.s.size() && in.s[in.pos] == 'T') {
        ++in.pos;
        Root r = in.root();
        i64 e = in.eat('^') ? in.integer() : 1;
        tdeg[r] += e;
      } else if (in.pos < in.s.size() && in.s[in.pos] == 'y') {
        ++in.pos;
        Root r = in.root();
        i64 e = 1;
        if (in.eat('^')) {
          in.expect('[');
          e = in.integer();
          in.expect(']');
        }
        ord[r] += e;
      } else {
        coeff = mod_canon(coeff * in.integer(), p);
      }
    } while (in.eat('*'));
    out.add_term(coeff, std::move(tdeg), std::move(ord));
  } while (in.eat('+'));
  if (!in.done())
    throw std::invalid_argument("operator parse error: trailing input at position " +
                                std::to_string(in.pos));
  return out;
}

std::string WeylOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [key, c] : terms_) {
    if (!first_term) os << " + ";
    os << c;
    for (const auto& [r, n] : key.first)
      os << " * T(" << r.i << "," << r.j << ")^" << n;
    for (const auto& [r, n] : key.second)
      os << " * y(" << r.i << "," << r.j << ")^[" << n << "]";
    first_term = false;
  }
  return os.str();
}

std::optional<i64> q_linearity_level(const WeylOperator& op, int max_power) {
  auto vars = op.support();
  i64 q = 1;
  for (int s = 0; s <= max_power; ++s) {
    bool linear = true;
    for (const Root& r : vars) {
      WeylOperator tq = WeylOperator::term(op.p(), 1, VarExp{{r, q}}, {});
      if (!(op * tq == tq * op)) {
        linear = false;
        break;
      }
    }
    if (linear) return q;
    q *= op.p();
  }
  return std::nullopt;
}

MembershipVerdict membership_D(const WeylOperator& op, int max_power) {
  if (!op.polynomial_coefficients())
    throw std::invalid_argument("membership_D: operator must have polynomial coefficients");
  MembershipVerdict out;
  auto q = q_linearity_level(op, max_power);
  if (!q) {
    out.status = MembershipStatus::QLevelExceeded;
    return out;
  }
  out.q_level = *q;

  // (i) op(1) must be a constant
  ChartPoly at_one = op.apply(chart_monomial({}));
  for (const auto& [e, c] : at_one) {
    (void)c;
    if (!e.empty()) {
      out.status = MembershipStatus::Rejected;
      out.witness = VarExp{};
      return out;
    }
  }

  // (ii) box test over all inputs 0 <= i_gamma <= q-1
  auto vars = op.support();
  std::vector<i64> idx(vars.size(), 0);
  while (true) {
    VarExp input;
    for (size_t t = 0; t < vars.size(); ++t)
      if (idx[t] != 0) input[vars[t]] = idx[t];
    ChartPoly image = op.apply(chart_monomial(input));
    for (const auto& [e, c] : image) {
      (void)c;
      for (const auto& [r, n] : e) {
        (void)r;
        if (n < 0 || n > *q) {
          out.status = MembershipStatus::Rejected;
          out.witness = input;
          return out;
        }
      }
    }
    size_t t = 0;
    for (; t < vars.size(); ++t) {
      if (idx[t] < *q - 1) {
        ++idx[t];
        std::fill(idx.begin(), idx.begin() + t, 0);
        break;
      }
    }
    if (t == vars.size()) break;
  }
  out.status = MembershipStatus::Accepted;
  return out;
}

namespace {

// Characteristic-0 lift of the one-variable algebra: normal forms
// sum c_{a,b} T^a y^{[b]} with exact rational coefficients.
using LiftOp = std::map<std::pair<i64, i64>, bigrat>;

void lift_add(LiftOp& dst, std::pair<i64, i64> key, const bigrat& c) {
  if (c == 0) return;
  auto [it, fresh] = dst.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) dst.erase(it);
  }
}

LiftOp lift_mul(const LiftOp& a, const LiftOp& b) {
  LiftOp out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      auto [a1, b1] = ka;
      auto [a2, b2] = kb;
      for (i64 k = 0; k <= b1; ++k) {
        bigint comm = big_binom(bigint(a2), k);           // y^{[b1]} past T^{a2}
        bigint comp = big_binom(bigint(b1 - k + b2), b2); // divided-power composition
        if (comm == 0 || comp == 0) continue;
        lift_add(out, {a1 + a2 - k, b1 + b2 - k}, ca * cb * bigrat(comm * comp));
      }
    }
  return out;
}

}  // namespace

bool check_binom_identity(i64 n, i64 p, i64 window) {
  if (n < 0) throw std::invalid_argument("check_binom_identity: n must be >= 0");
  const Root var(1, 0);
  // product (Ty)(Ty - 1)...(Ty - n + 1) over the lift
  LiftOp acc{{{0, 0}, bigrat(1)}};
  LiftOp ty{{{1, 1}, bigrat(1)}};
  bigint nfact = 1;
  for (i64 i = 0; i < n; ++i) {
    // acc * (Ty - i) = acc*Ty - i*acc
    LiftOp next = lift_mul(acc, ty);
    for (const auto& [k, c] : acc) lift_add(next, k, bigrat(-i) * c);
    acc = std::move(next);
    nfact *= i + 1;
  }
  // divide by n! and require integrality
  WeylOperator lhs(p);
  for (const auto& [k, c] : acc) {
    bigrat scaled = c / bigrat(nfact);
    if (boost::multiprecision::denominator(scaled) != 1) return false;
    bigint num = boost::multiprecision::numerator(scaled);
    i64 residue = static_cast<i64>(num % p);
    VarExp tdeg, ord;
    if (k.first != 0) tdeg[var] = k.first;
    if (k.second != 0) ord[var] = k.second;
    lhs.add_term(mod_canon(residue, p), std::move(tdeg), std::move(ord));
  }
  WeylOperator rhs = WeylOperator::term(p, 1, n == 0 ? VarExp{} : VarExp{{var, n}},
                                        n == 0 ? VarExp{} : VarExp{{var, n}});
  if (!(lhs == rhs)) return false;
  for (i64 m = -window; m <= window; ++m) {
    VarExp e;
    if (m != 0) e[var] = m;
    if (lhs.apply(chart_monomial(e)) != rhs.apply(chart_monomial(e))) return false;
  }
  return true;
}

std::vector<WeylOperator> subalgebra_generators(Family family, const ParabolicData& P,
                                                const GeneratorBounds& bounds, i64 p) {
  int d = P.rank();
  std::vector<WeylOperator> out;
  // chart variables are indexed by the negative roots alpha_{i,j}, i < j
  for (int i = 0; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      Root var(i, j);
      bool levi = P.is_levi_root(var);
      bool simple = var.height() == 1;
      for (i64 m = 0; m <= bounds.max_m; ++m) {
        for (i64 n = 0; n <= bounds.max_n; ++n) {
          if (m == 0 && n == 0) continue;
          bool match = false;
          switch (family) {
            case Family::T:
              match = simple && m == n;
              break;
            case Family::U_P:
              match = !levi && m > n;  // L_{-alpha} in u_P
              break;
            case Family::U_P_minus:
              match = !levi && m < n;  // y_alpha in u_P^-
              break;
            case Family::L_P:
              // the defining conditions m <= n and m > n cover all pairs on
              // Levi variables; the membership filter below does the cutting
              match = levi;
              break;
            case Family::P:
              match = (levi && m <= n) || m >= n;
              break;
          }
          if (!match) continue;
          WeylOperator op = WeylOperator::term(p, 1, VarExp{{var, m}}, VarExp{{var, n}});
          if (membership_D(op).accepted()) out.push_back(std::move(op));
        }
      }
    }
  }
  return out;
}

i64 RealizedOp::max_shift() const {
  // worst per-slot deviation over the prefixes of the composite (the ambient
  // evaluation can stray this far from the input exponents)
  std::map<int, i64> running;
  i64 worst = 0;
  auto bump = [&](int slot, i64 delta) {
    i64& r = running[slot];
    r += delta;
    worst = std::max(worst, std::abs(r));
  };
  for (const Step& s : steps) {
    if (std::holds_alternative<Divided>(s)) {
      const auto& g = std::get<Divided>(s);
      bump(g.unit.i, g.order);
      bump(g.unit.j, -g.order);
    } else if (std::holds_alternative<RatioShift>(s)) {
      const auto& g = std::get<RatioShift>(s);
      bump(g.a, g.times);
      bump(g.b, -g.times);
    }
  }
  return worst;
}

ActionResult apply_realized(const ModuleSpace& M, const RealizedOp& op, const Element& v) {
  // net-effect semantics: a composite is one operator of the algebra, so the
  // steps are evaluated on the ambient Laurent space and the sector quotient
  // is applied to the final value only
  ModuleSpace ambient = ModuleSpace::laurent_ambient(M.d(), M.p(), M.window(), M.twist());
  ActionResult acc{v, false};
  for (const RealizedOp::Step& s : op.steps) {
    if (acc.value.empty()) break;
    if (std::holds_alternative<RealizedOp::Divided>(s)) {
      const auto& g = std::get<RealizedOp::Divided>(s);
      ActionResult r = act_divided(ambient, DividedPower{g.unit, g.order}, acc.value);
      acc.value = std::move(r.value);
      acc.overflow = acc.overflow || r.overflow;
    } else if (std::holds_alternative<RealizedOp::RatioShift>(s)) {
      const auto& g = std::get<RealizedOp::RatioShift>(s);
      ActionResult r = act_ratio_shift(ambient, g.a, g.b, g.times, acc.value);
      acc.value = std::move(r.value);
      acc.overflow = acc.overflow || r.overflow;
    } else {
      const auto& g = std::get<RealizedOp::Torus>(s);
      acc.value = act_torus_binom(ambient, TorusBinom{g.gamma, g.order}, acc.value);
    }
  }
  if (M.flavor() == Flavor::TorusCharacters) return acc;
  ActionResult out;
  out.overflow = acc.overflow;
  for (const auto& [n, c] : acc.value) {
    switch (M.classify(n)) {
      case MonomialClass::Alive:
        out.value[n] = c;
        break;
      case MonomialClass::Killed:
        break;
      case MonomialClass::OutOfWindow:
        out.overflow = true;
        break;
    }
  }
  return out;
}

std::vector<RealizedOp> generation_operators(const ModuleSpace& M) {
  if (M.flavor() != Flavor::ReducedLocalCohomology)
    throw std::invalid_argument("generation_operators: reduced local cohomology only");
  int d = M.d(), j = M.j();
  i64 p = M.p();
  std::vector<RealizedOp> out;
  for (int b = 0; b <= j; ++b) {
    for (int a = j + 1; a <= d; ++a) {
      RealizedOp l1{"L(" + std::to_string(b) + "," + std::to_string(a) + ")",
                    {RealizedOp::Divided{Root(b, a), 1}}};
      RealizedOp lp{"L(" + std::to_string(b) + "," + std::to_string(a) + ")^[p]",
                    {RealizedOp::Divided{Root(b, a), p}}};
      out.push_back(std::move(l1));
      out.push_back(std::move(lp));
    }
  }
  for (int a = j + 1; a <= d; ++a) {
    for (int b = a + 1; b <= d; ++b) {
      RealizedOp t{"T(" + std::to_string(a) + "," + std::to_string(b) + ")^(p-1) L(" +
                       std::to_string(a) + "," + std::to_string(b) + ")^[p]",
                   {RealizedOp::Divided{Root(a, b), p}, RealizedOp::RatioShift{a, b, p - 1}}};
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<Exponents> generation_seeds(const ModuleSpace& M) {
  if (M.flavor() != Flavor::ReducedLocalCohomology)
    throw std::invalid_argument("generation_seeds: reduced local cohomology only");
  int d = M.d(), j = M.j();
  i64 target = (d - j) + M.twist();
  if (target < 0) throw std::invalid_argument("generation_seeds: twist too negative");
  std::vector<Exponents> out;
  Exponents cur(d + 1, 0);
  for (int i = j + 1; i <= d; ++i) cur[i] = -1;
  // enumerate numerator tuples n_0 + ... + n_j = target
  std::vector<i64> num(j + 1, 0);
  std::function<void(int, i64)> rec = [&](int slot, i64 left) {
    if (slot == j) {
      num[slot] = left;
      for (int t = 0; t <= j; ++t) cur[t] = num[t];
      out.push_back(cur);
      return;
    }
    for (i64 v = 0; v <= left; ++v) {
      num[slot] = v;
      rec(slot + 1, left - v);
    }
  };
  rec(0, target);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RealizedOp> probe_operators(const ModuleSpace& M, i64 order_bound) {
  i64 p = M.p();
  std::vector<RealizedOp> out;
  for (int a = 0; a <= M.d(); ++a) {
    for (int b = 0; b <= M.d(); ++b) {
      if (a == b) continue;
      for (i64 n = 1; n <= order_bound; n *= p) {
        out.push_back({"E(" + std::to_string(a) + "," + std::to_string(b) + ")^[" +
                           std::to_string(n) + "]",
                       {RealizedOp::Divided{Root(a, b), n}}});
      }
    }
  }
  for (int s = 0; s < M.d(); ++s) {
    for (i64 n = 1; n <= order_bound; n *= p) {
      out.push_back({"C(h(" + std::to_string(s + 1) + "," + std::to_string(s) + ")," +
                         std::to_string(n) + ")",
                     {RealizedOp::Torus{simple_root(s), n}}});
    }
  }
  if (M.flavor() == Flavor::ReducedLocalCohomology) {
    // chart operators T^{p^t -+ 1} y^{[p^t]}: single exponent steps whose
    // coefficients read a base-p digit, available in the Weyl algebra but not
    // in the enveloping algebra; these cross the Frobenius barriers
    for (int u = 0; u <= M.d(); ++u) {
      for (int v = 0; v <= M.d(); ++v) {
        if (u == v || v <= M.j()) continue;
        for (i64 n = p; n <= order_bound; n *= p) {
          out.push_back({"T(" + std::to_string(u) + "," + std::to_string(v) + ")^" +
                             std::to_string(n - 1) + " y^[" + std::to_string(n) + "]",
                         {RealizedOp::Divided{Root(v, u), n}, RealizedOp::RatioShift{u, v, n - 1}}});
          out.push_back({"T(" + std::to_string(u) + "," + std::to_string(v) + ")^" +
                             std::to_string(n + 1) + " y^[" + std::to_string(n) + "]",
                         {RealizedOp::Divided{Root(v, u), n}, RealizedOp::RatioShift{u, v, n + 1}}});
        }
      }
    }
    for (RealizedOp& op : generation_operators(M)) out.push_back(std::move(op));
  }
  return out;
}

ClosureResult generate_submodule(const ModuleSpace& M, const std::vector<RealizedOp>& gens,
                                 const std::vector<Exponents>& seeds) {
  i64 max_shift = 0;
  for (const RealizedOp& g : gens) max_shift = std::max(max_shift, g.max_shift());
  ClosureResult out{EchelonBasis<Exponents>(M.p()), std::max<i64>(0, M.window() - max_shift),
                    false, };
  std::deque<Element> queue;
  for (const Exponents& s : seeds) {
    if (M.classify(s) != MonomialClass::Alive)
      throw std::invalid_argument("generate_submodule: window too small to contain seeds");
    Element e = monomial(s);
    if (out.span.insert(e)) queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    Element v = std::move(queue.front());
    queue.pop_front();
    for (const RealizedOp& g : gens) {
      ActionResult r = apply_realized(M, g, v);
      out.overflowed = out.overflowed || r.overflow;
      if (r.value.empty()) continue;
      Element red = out.span.reduce(std::move(r.value));
      if (red.empty()) continue;
      out.span.insert(red);
      queue.push_back(std::move(red));
    }
  }
  return out;
}

std::vector<Exponents> ClosureResult::basis_monomials() const {
  std::vector<Exponents> out;
  for (const auto& [pivot, row] : span.rows()) {
    (void)row;
    out.push_back(pivot);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProbeResult simplicity_probe(const ModuleSpace& M, const std::vector<RealizedOp>& gens,
                             i64 trials, u64 seed) {
  i64 max_shift = 0;
  for (const RealizedOp& g : gens) max_shift = std::max(max_shift, g.max_shift());
  ProbeResult out;
  out.trials = trials;
  out.verified_window = std::max<i64>(0, M.window() - max_shift);
  Element target = monomial(extremal_monomial(M));
  std::vector<Exponents> basis = M.basis();
  if (basis.empty()) throw std::invalid_argument("simplicity_probe: empty module window");

  for (i64 t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_seed(seed, static_cast<u64>(t)));
    Element v;
    i64 supp = 1 + static_cast<i64>(rng.below(3));
    for (i64 s = 0; s < supp; ++s) {
      const Exponents& n = basis[rng.below(basis.size())];
      i64 c = 1 + static_cast<i64>(rng.below(static_cast<u64>(M.p() - 1)));
      i64& slot = v[n];
      slot = mod_canon(slot + c, M.p());
      if (slot == 0) v.erase(n);
    }
    if (v.empty()) v = monomial(basis[0]);

    EchelonBasis<Exponents> span(M.p());
    std::deque<Element> queue;
    span.insert(v);
    queue.push_back(v);
    bool found = span.contains(target);
    while (!queue.empty() && !found) {
      Element w = std::move(queue.front());
      queue.pop_front();
      for (const RealizedOp& g : gens) {
        ActionResult r = apply_realized(M, g, w);
        if (r.value.empty()) continue;
        Element red = span.reduce(std::move(r.value));
        if (red.empty()) continue;
        span.insert(red);
        queue.push_back(std::move(red));
        if (span.contains(target)) {
          found = true;
          break;
        }
      }
    }
    if (!found) out.failures.push_back(ProbeFailure{t, v});
  }
  out.pass = out.failures.empty();
  return out;
}

}  // namespace dhs
