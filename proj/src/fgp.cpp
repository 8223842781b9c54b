#include "dhs/fgp.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <sstream>

namespace dhs {

namespace {

u64 fnv1a(const std::string& s) {
  u64 h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ParabolicData module_parabolic(const ModuleSpace& M) {
  if (M.flavor() == Flavor::ReducedLocalCohomology || M.flavor() == Flavor::LocalCohomology)
    return ParabolicData::from_composition(M.d(), {M.j() + 1, M.d() - M.j()});
  return ParabolicData::full(M.d());
}

}  // namespace

PRep PRep::trivial() {
  PRep out;
  out.dim = 1;
  out.name = "triv";
  out.matrix = [](const Mat&, i64) { return std::vector<std::vector<i64>>{{1}}; };
  return out;
}

PRep PRep::det_character() {
  PRep out;
  out.dim = 1;
  out.name = "det";
  out.matrix = [](const Mat& g, i64 p) {
    return std::vector<std::vector<i64>>{{mod_canon(g.det(), p)}};
  };
  return out;
}

PRep PRep::direct_sum(const PRep& a, const PRep& b) {
  PRep out;
  out.dim = a.dim + b.dim;
  out.name = a.name + "(+)" + b.name;
  out.matrix = [a, b](const Mat& g, i64 p) {
    auto ma = a.matrix(g, p), mb = b.matrix(g, p);
    std::vector<std::vector<i64>> m(a.dim + b.dim, std::vector<i64>(a.dim + b.dim, 0));
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) m[i][j] = ma[i][j];
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) m[a.dim + i][a.dim + j] = mb[i][j];
    return m;
  };
  return out;
}

PRep PRep::induced_trivial(std::shared_ptr<const CosetTable> P_table, ParabolicData Q) {
  std::vector<int> locals;
  std::map<int, int> global_to_local;
  for (int idx = 0; idx < P_table->size(); ++idx) {
    if (in_parabolic(P_table->representative(idx), Q)) {
      global_to_local[idx] = static_cast<int>(locals.size());
      locals.push_back(idx);
    }
  }
  PRep out;
  out.dim = static_cast<int>(locals.size());
  out.name = "Ind^" + Q.to_string() + "_" + P_table->parabolic().to_string() + "(triv)";
  out.matrix = [P_table, locals, global_to_local](const Mat& g, i64) {
    int n = static_cast<int>(locals.size());
    std::vector<std::vector<i64>> m(n, std::vector<i64>(n, 0));
    for (int t = 0; t < n; ++t) {
      Mat h = g * P_table->representative(locals[t]);
      int target = P_table->index_of(h);
      auto it = global_to_local.find(target);
      if (it == global_to_local.end())
        throw std::domain_error("induced_trivial: group element leaves the subgroup");
      m[it->second][t] = 1;
    }
    return m;
  };
  return out;
}

std::vector<std::vector<i64>> PRep::dual_matrix(const Mat& g, i64 p) const {
  auto m = matrix(g.inverse(), p);
  std::vector<std::vector<i64>> out(dim, std::vector<i64>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) out[i][j] = mod_canon(m[j][i], p);
  return out;
}

FgpModule::FgpModule(ModuleSpace M, PRep V, int d, i64 q, ParabolicData I)
    : M_(std::move(M)), V_(std::move(V)), d_(d), I_(std::move(I)) {
  if (d != M_.d()) throw std::invalid_argument("FgpModule: rank mismatch between M and G");
  if (!module_parabolic(M_).contains(I_))
    throw std::invalid_argument(
        "FgpModule: the functor parabolic must lie inside the module's parabolic");
  cosets_ = std::make_shared<const CosetTable>(d, q, I_);
  const GaloisField& F = cosets_->field();
  for (int s = 0; s < cosets_->size(); ++s) {
    const WeylElement& w = cosets_->stratum_of(s);
    Mat winv_mat = Mat::permutation(F, w.inverse());
    Mat u = cosets_->representative(s) * winv_mat;  // rep = u * w
    w_.push_back(w);
    uinv_.push_back(u.inverse());
    u_.push_back(std::move(u));
  }
}

FgpModule build_fgp_dual(const ModuleSpace& M, const PRep& V, int d, i64 q,
                         const ParabolicData& I) {
  return FgpModule(M, V, d, q, I);
}

const WeylElement& FgpModule::twist_w(int s) const { return w_[s]; }

FgpModule::Vec FgpModule::embed(int summand, int vcoord, const Element& e) const {
  Vec out;
  for (const auto& [n, c] : e) out[Key{summand, vcoord, n}] = c;
  return out;
}

namespace {

// regroup an FgpModule vector into per-(summand, coordinate) elements
std::map<std::pair<int, int>, Element> split_parts(const FgpModule::Vec& v) {
  std::map<std::pair<int, int>, Element> parts;
  for (const auto& [key, c] : v) parts[{std::get<0>(key), std::get<1>(key)}][std::get<2>(key)] = c;
  return parts;
}

}  // namespace

FgpModule::Result FgpModule::act_divided(const DividedPower& z, const Vec& v) const {
  Result out;
  for (auto& [st, part] : split_parts(v)) {
    auto [s, t] = st;
    Root moved(w_[s](z.unit.i), w_[s](z.unit.j));
    ActionResult step = parabolic_act(M_, uinv_[s], part);
    ActionResult mid = dhs::act_divided(M_, DividedPower{moved, z.order}, step.value);
    ActionResult back = parabolic_act(M_, u_[s], mid.value);
    out.overflow = out.overflow || step.overflow || mid.overflow || back.overflow;
    for (const auto& [n, c] : back.value) {
      i64& slot = out.value[Key{s, t, n}];
      slot = mod_canon(slot + c, p());
      if (slot == 0) out.value.erase(Key{s, t, n});
    }
  }
  return out;
}

FgpModule::Result FgpModule::act_realized(const RealizedOp& op, const Vec& v) const {
  Result out;
  for (auto& [st, part] : split_parts(v)) {
    auto [s, t] = st;
    RealizedOp moved;
    moved.name = op.name;
    for (const RealizedOp::Step& step : op.steps) {
      if (std::holds_alternative<RealizedOp::Divided>(step)) {
        const auto& g = std::get<RealizedOp::Divided>(step);
        moved.steps.push_back(
            RealizedOp::Divided{Root(w_[s](g.unit.i), w_[s](g.unit.j)), g.order});
      } else if (std::holds_alternative<RealizedOp::RatioShift>(step)) {
        const auto& g = std::get<RealizedOp::RatioShift>(step);
        moved.steps.push_back(RealizedOp::RatioShift{w_[s](g.a), w_[s](g.b), g.times});
      } else {
        const auto& g = std::get<RealizedOp::Torus>(step);
        moved.steps.push_back(RealizedOp::Torus{Root(w_[s](g.gamma.i), w_[s](g.gamma.j)), g.order});
      }
    }
    ActionResult pre = parabolic_act(M_, uinv_[s], part);
    ActionResult mid = apply_realized(M_, moved, pre.value);
    ActionResult back = parabolic_act(M_, u_[s], mid.value);
    out.overflow = out.overflow || pre.overflow || mid.overflow || back.overflow;
    for (const auto& [n, c] : back.value) {
      i64& slot = out.value[Key{s, t, n}];
      slot = mod_canon(slot + c, p());
      if (slot == 0) out.value.erase(Key{s, t, n});
    }
  }
  return out;
}

FgpModule::Result FgpModule::act_torus(const TorusBinom& z, const Vec& v) const {
  Result out;
  for (auto& [st, part] : split_parts(v)) {
    auto [s, t] = st;
    Root moved(w_[s](z.gamma.i), w_[s](z.gamma.j));
    ActionResult step = parabolic_act(M_, uinv_[s], part);
    Element mid = act_torus_binom(M_, TorusBinom{moved, z.order}, step.value);
    ActionResult back = parabolic_act(M_, u_[s], mid);
    out.overflow = out.overflow || step.overflow || back.overflow;
    for (const auto& [n, c] : back.value) {
      i64& slot = out.value[Key{s, t, n}];
      slot = mod_canon(slot + c, p());
      if (slot == 0) out.value.erase(Key{s, t, n});
    }
  }
  return out;
}

FgpModule::GroupAction FgpModule::precompute_group(const Mat& g) const {
  GroupAction ga;
  for (int s = 0; s < summands(); ++s) {
    Mat h = g * cosets_->representative(s);
    int target = cosets_->index_of(h);
    Mat pp = cosets_->p_part(h, target);
    ga.target.push_back(target);
    ga.vdual.push_back(V_.dual_matrix(pp, p()));
    ga.p_part.push_back(std::move(pp));
  }
  return ga;
}

FgpModule::Result FgpModule::act_group(const GroupAction& ga, const Vec& v) const {
  Result out;
  for (auto& [st, part] : split_parts(v)) {
    auto [s, t] = st;
    int s2 = ga.target[s];
    ActionResult moved = parabolic_act(M_, ga.p_part[s], part);
    out.overflow = out.overflow || moved.overflow;
    for (int t2 = 0; t2 < vdim(); ++t2) {
      i64 coeff = ga.vdual[s][t2][t];
      if (coeff == 0) continue;
      for (const auto& [n, c] : moved.value) {
        i64& slot = out.value[Key{s2, t2, n}];
        slot = mod_canon(slot + coeff * c, p());
        if (slot == 0) out.value.erase(Key{s2, t2, n});
      }
    }
  }
  return out;
}

FgpModule::Result FgpModule::act_group(const Mat& g, const Vec& v) const {
  return act_group(precompute_group(g), v);
}

std::map<i64, i64> FgpModule::graded_dims() const {
  std::map<i64, i64> dims = dims_by_pole(M_);
  std::map<i64, i64> out;
  for (const auto& [deg, dim] : dims) out[deg] = dim * summands() * vdim();
  return out;
}

std::string FgpModule::fingerprint(int s) const {
  std::ostringstream os;
  os << "W:";
  std::vector<Weight> ws;
  for (const Exponents& n : M_.basis()) ws.push_back(w_[s].act(weight_of(n)));
  std::sort(ws.begin(), ws.end());
  for (const Weight& w : ws) {
    for (i64 v : w.m) os << v << ',';
    os << ';';
  }
  std::ostringstream table;
  auto run = [&](const std::function<ActionResult(const Element&)>& op, const char* tag) {
    table << tag << '|';
    for (const Exponents& n : M_.basis()) {
      ActionResult r = op(monomial(n));
      table << element_to_string(r.value) << (r.overflow ? "!" : "") << '|';
    }
  };
  for (int a = 0; a <= d_; ++a) {
    for (int b = 0; b <= d_; ++b) {
      if (a == b) continue;
      for (i64 order = 1; order <= 2; ++order) {
        Root moved(w_[s](a), w_[s](b));
        run(
            [&](const Element& e) {
              ActionResult s1 = parabolic_act(M_, uinv_[s], e);
              ActionResult s2 = dhs::act_divided(M_, DividedPower{moved, order}, s1.value);
              ActionResult s3 = parabolic_act(M_, u_[s], s2.value);
              s3.overflow = s3.overflow || s1.overflow || s2.overflow;
              return s3;
            },
            "E");
      }
    }
  }
  for (int t = 0; t < d_; ++t) {
    Root g = simple_root(t);
    Root moved(w_[s](g.i), w_[s](g.j));
    run(
        [&](const Element& e) {
          ActionResult s1 = parabolic_act(M_, uinv_[s], e);
          Element s2 = act_torus_binom(M_, TorusBinom{moved, 1}, s1.value);
          ActionResult s3 = parabolic_act(M_, u_[s], s2);
          s3.overflow = s3.overflow || s1.overflow;
          return s3;
        },
        "H");
  }
  std::ostringstream out;
  out << os.str() << "#" << std::hex << fnv1a(table.str());
  return out.str();
}

NonIsoResult pairwise_noniso_check(const FgpModule& F) {
  NonIsoResult out;
  std::map<std::string, int> seen;
  for (int s = 0; s < F.summands(); ++s) {
    std::string fp = F.fingerprint(s);
    auto [it, fresh] = seen.emplace(fp, s);
    if (!fresh) {
      out.pass = false;
      out.witness = std::make_pair(it->second, s);
      return out;
    }
  }
  out.pass = true;
  return out;
}

LocallyFiniteReport locally_finite_test(const ModuleSpace& M, const Root& gamma,
                                        const Element& v, i64 bound) {
  if (!gamma.positive())
    throw std::invalid_argument("locally_finite_test: gamma must be a positive root");
  LocallyFiniteReport out;
  if (v.empty()) {
    out.certified_bound = bound;
    return out;
  }
  Weight lambda = weight_of(v.begin()->first);
  for (const auto& [n, c] : v) {
    (void)c;
    if (!(weight_of(n) == lambda))
      throw std::invalid_argument("locally_finite_test: v must be weight-homogeneous");
  }
  i64 pairing_val = coroot_pairing(lambda, gamma);
  Root y_unit = gamma.negated();
  Root x_unit = gamma;
  out.certified_bound = bound;
  for (i64 n = 1; n <= bound; ++n) {
    ActionResult down = act_divided(M, DividedPower{y_unit, n}, v);
    if (down.overflow) {
      out.certified_bound = n - 1;
      break;
    }
    if (!down.value.empty()) out.nonvanishing.push_back(n);
    ActionResult back = act_divided(M, DividedPower{x_unit, n}, down.value);
    if (back.overflow) {
      out.certified_bound = n - 1;
      break;
    }
    if (!back.value.empty()) out.composite_nonvanishing.push_back(n);
    Element expect = v;
    vec_scale(expect, lucas_binom(pairing_val, n, M.p()), M.p());
    if (back.value != expect) out.heightone_ok = false;
  }
  return out;
}

LieMatrix lie_unit(const Root& r) { return LieMatrix{{{r.i, r.j}, 1}}; }

LieMatrix lie_bracket(const LieMatrix& a, const LieMatrix& b, i64 p) {
  LieMatrix out;
  auto addto = [&](int i, int j, i64 c) {
    c = mod_canon(c, p);
    if (c == 0) return;
    i64& slot = out[{i, j}];
    slot = mod_canon(slot + c, p);
    if (slot == 0) out.erase({i, j});
  };
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      if (ka.second == kb.first) addto(ka.first, kb.second, va * vb);
      if (kb.second == ka.first) addto(kb.first, ka.second, -va * vb);
    }
  return out;
}

LieMatrix lie_ad_power(const Root& x, const LieMatrix& z, int times, i64 p) {
  LieMatrix acc = z;
  LieMatrix xm = lie_unit(x);
  for (int t = 0; t < times; ++t) acc = lie_bracket(xm, acc, p);
  return acc;
}

ActionResult act_lie(const ModuleSpace& M, const LieMatrix& z, const Element& v) {
  ActionResult out;
  for (const auto& [key, c] : z) {
    auto [i, j] = key;
    if (i == j) {
      Element diag = act_torus_unit(M, i, v);
      vec_scale(diag, c, M.p());
      vec_axpy(out.value, 1, diag, M.p());
    } else {
      ActionResult r = act_root(M, Root(i, j), v);
      vec_scale(r.value, c, M.p());
      out.overflow = out.overflow || r.overflow;
      vec_axpy(out.value, 1, r.value, M.p());
    }
  }
  return out;
}

std::vector<ExpansionTerm> divided_commutator_expand(const Root& x_unit,
                                                     const std::vector<LieMatrix>& zs, i64 k,
                                                     i64 p) {
  require_odd_characteristic_gt3(p, "divided_commutator_expand");
  if (k < 0) throw std::invalid_argument("divided_commutator_expand: k must be >= 0");
  size_t n = zs.size();
  // ad powers with the nilpotency cutoff: [x^{(i)}, z] = 0 for i >= 4
  std::vector<std::array<LieMatrix, 4>> adp(n);
  for (size_t t = 0; t < n; ++t)
    for (int i = 0; i < 4; ++i) adp[t][i] = lie_ad_power(x_unit, zs[t], i, p);

  std::vector<ExpansionTerm> out;
  std::vector<i64> comp(n, 0);
  std::function<void(size_t, i64)> rec = [&](size_t slot, i64 used) {
    if (slot == n) {
      ExpansionTerm term;
      term.tail_order = k - used;
      i64 denom = 1;
      static const i64 fact[4] = {1, 1, 2, 6};
      bool zero = false;
      for (size_t t = 0; t < n; ++t) {
        if (adp[t][comp[t]].empty()) {
          zero = true;
          break;
        }
        term.brackets.push_back(adp[t][comp[t]]);
        denom = denom * fact[comp[t]] % p;
      }
      if (!zero) {
        term.coeff = inv_mod(denom, p);
        out.push_back(std::move(term));
      }
      return;
    }
    for (i64 i = 0; i <= std::min<i64>(3, k - used); ++i) {
      comp[slot] = i;
      rec(slot + 1, used + i);
    }
    comp[slot] = 0;
  };
  rec(0, 0);
  return out;
}

ActionResult apply_expansion(const ModuleSpace& M, const std::vector<ExpansionTerm>& terms,
                             const Root& x_unit, const Element& v) {
  ActionResult out;
  for (const ExpansionTerm& term : terms) {
    ActionResult cur = act_divided(M, DividedPower{x_unit, term.tail_order}, v);
    for (auto it = term.brackets.rbegin(); it != term.brackets.rend() && !cur.value.empty(); ++it) {
      ActionResult next = act_lie(M, *it, cur.value);
      next.overflow = next.overflow || cur.overflow;
      cur = std::move(next);
    }
    vec_scale(cur.value, term.coeff, M.p());
    out.overflow = out.overflow || cur.overflow;
    vec_axpy(out.value, 1, cur.value, M.p());
  }
  return out;
}

namespace {

// The probe works over a flattened integer indexing of the window basis with
// pre-tabulated operator columns; closures then run in plain int-keyed sparse
// arithmetic.
struct ProbeEngine {
  const FgpModule& F;
  i64 p;
  std::vector<FgpModule::Key> keys;
  std::map<FgpModule::Key, int> index;
  std::vector<std::vector<SparseVec<int>>> op_columns;  // [op][basis index]
  std::vector<int> target_idx;
  i64 max_shift = 0;

  explicit ProbeEngine(const FgpModule& mod) : F(mod), p(mod.p()) {
    std::vector<Exponents> basis = F.base().basis();
    for (int s = 0; s < F.summands(); ++s)
      for (int t = 0; t < F.vdim(); ++t)
        for (const Exponents& n : basis) {
          index.emplace(FgpModule::Key{s, t, n}, static_cast<int>(keys.size()));
          keys.push_back(FgpModule::Key{s, t, n});
        }

    const GaloisField& Fq = F.cosets().field();
    int n = F.base().d() + 1;
    std::vector<std::function<FgpModule::Vec(const FgpModule::Vec&)>> ops;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) {
          auto ga = std::make_shared<FgpModule::GroupAction>(
              F.precompute_group(Mat::elementary(Fq, n, a, b, 1)));
          ops.push_back([this, ga](const FgpModule::Vec& v) { return F.act_group(*ga, v).value; });
        }
    if (Fq.q() > 2) {
      int prim = 0;
      for (int c = 2; c < Fq.q(); ++c) {
        int pow = 1, ord = 0;
        do {
          pow = Fq.mul(pow, c);
          ++ord;
        } while (pow != 1);
        if (ord == Fq.q() - 1) {
          prim = c;
          break;
        }
      }
      std::vector<int> diag(n, 1);
      diag[0] = prim;
      auto ga = std::make_shared<FgpModule::GroupAction>(
          F.precompute_group(Mat::diagonal(Fq, diag)));
      ops.push_back([this, ga](const FgpModule::Vec& v) { return F.act_group(*ga, v).value; });
    }
    for (const RealizedOp& op : probe_operators(F.base(), p)) {
      ops.push_back([this, op](const FgpModule::Vec& v) { return F.act_realized(op, v).value; });
      max_shift = std::max(max_shift, op.max_shift());
    }

    op_columns.resize(ops.size());
    for (size_t o = 0; o < ops.size(); ++o) {
      op_columns[o].resize(keys.size());
      for (size_t k = 0; k < keys.size(); ++k) {
        FgpModule::Vec unit{{keys[k], 1}};
        for (const auto& [key, c] : ops[o](unit)) {
          auto it = index.find(key);
          if (it != index.end()) op_columns[o][k][it->second] = c;
        }
      }
    }

    Exponents ext = extremal_monomial(F.base());
    for (int s = 0; s < F.summands(); ++s)
      for (int t = 0; t < F.vdim(); ++t) target_idx.push_back(index.at(FgpModule::Key{s, t, ext}));
  }

  struct Outcome {
    bool all_targets = false;
    i64 rank = 0;
    std::set<int> coordinates;  // coefficient coordinates met by the closure
  };

  Outcome closure_from(const SparseVec<int>& start) const {
    EchelonBasis<int> span(p);
    std::deque<SparseVec<int>> queue;
    span.insert(start);
    queue.push_back(start);
    auto all_found = [&]() {
      for (int t : target_idx)
        if (!span.contains(SparseVec<int>{{t, 1}})) return false;
      return true;
    };
    bool found = all_found();
    while (!queue.empty() && !found) {
      SparseVec<int> w = std::move(queue.front());
      queue.pop_front();
      for (const auto& columns : op_columns) {
        SparseVec<int> image;
        for (const auto& [k, c] : w) vec_axpy(image, c, columns[k], p);
        if (image.empty()) continue;
        SparseVec<int> red = span.reduce(std::move(image));
        if (red.empty()) continue;
        span.insert(red);
        queue.push_back(std::move(red));
        if (all_found()) {
          found = true;
          break;
        }
      }
    }
    Outcome out;
    out.all_targets = found;
    out.rank = static_cast<i64>(span.rank());
    for (const auto& [pivot, row] : span.rows()) {
      (void)row;
      out.coordinates.insert(std::get<1>(keys[pivot]));
    }
    return out;
  }
};

}  // namespace

FgpProbeResult simplicity_probe_fgp(const FgpModule& F, i64 trials, u64 seed,
                                    std::optional<int> restrict_coordinate) {
  ProbeEngine engine(F);
  FgpProbeResult out;
  out.trials = trials;
  out.verified_window = std::max<i64>(0, F.base().window() - engine.max_shift);

  std::vector<Exponents> basis = F.base().basis();
  for (i64 trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(derive_seed(seed, static_cast<u64>(trial)));
    SparseVec<int> v;
    i64 supp = 1 + static_cast<i64>(rng.below(3));
    for (i64 t = 0; t < supp; ++t) {
      int s = static_cast<int>(rng.below(static_cast<u64>(F.summands())));
      int vc = restrict_coordinate ? *restrict_coordinate
                                   : static_cast<int>(rng.below(static_cast<u64>(F.vdim())));
      const Exponents& mono = basis[rng.below(basis.size())];
      i64 c = 1 + static_cast<i64>(rng.below(static_cast<u64>(F.p() - 1)));
      int key = engine.index.at(FgpModule::Key{s, vc, mono});
      i64& slot = v[key];
      slot = mod_canon(slot + c, F.p());
      if (slot == 0) v.erase(key);
    }
    if (v.empty()) v[engine.index.at(FgpModule::Key{0, restrict_coordinate.value_or(0),
                                                    basis.front()})] = 1;

    ProbeEngine::Outcome oc = engine.closure_from(v);
    if (!oc.all_targets) {
      out.failed_trials.push_back(trial);
      if (out.submodule_note.empty()) {
        std::ostringstream note;
        note << "closure is a proper invariant subspace: rank " << oc.rank << " of "
             << engine.keys.size() << ", coefficient coordinates {";
        bool first = true;
        for (int c : oc.coordinates) {
          note << (first ? "" : ",") << c;
          first = false;
        }
        note << "} of " << F.vdim();
        out.submodule_note = note.str();
      }
    }
  }
  out.pass = out.failed_trials.empty();
  return out;
}

bool exactness_dims_check(const std::map<i64, i64>& sub, const std::map<i64, i64>& mid,
                          const std::map<i64, i64>& quot) {
  std::map<i64, i64> sum = sub;
  for (const auto& [k, v] : quot) sum[k] += v;
  for (auto it = sum.begin(); it != sum.end();)
    it = it->second == 0 ? sum.erase(it) : std::next(it);
  std::map<i64, i64> m = mid;
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
  return sum == m;
}

TransitivityResult transitivity_check(const ModuleSpace& M, int d, i64 q,
                                      const ParabolicData& P, const ParabolicData& Q) {
  if (!Q.contains(P)) throw std::invalid_argument("transitivity_check: P must lie inside Q");
  TransitivityResult out;
  CosetTable ptable(d, q, P);
  i64 qp_index = 0;
  for (int idx = 0; idx < ptable.size(); ++idx)
    if (in_parabolic(ptable.representative(idx), Q)) ++qp_index;

  std::map<i64, i64> mdims = dims_by_pole(M);
  std::map<i64, i64> lhs = induce_graded(mdims, P, q);
  std::map<i64, i64> rhs = induce_graded(mdims, Q, q);
  for (auto& [k, v] : rhs) v *= qp_index;
  out.dims_equal = lhs == rhs;

  auto support_key = [&](const WeylElement& w) {
    std::vector<Weight> ws;
    for (const auto& [weight, dim] : M.weight_dims()) {
      (void)dim;
      ws.push_back(w.act(weight));
    }
    std::sort(ws.begin(), ws.end());
    std::ostringstream os;
    for (const Weight& x : ws) {
      for (i64 v : x.m) os << v << ',';
      os << ';';
    }
    return os.str();
  };
  std::map<std::string, i64> left, right;
  for (const CosetStratum& st : weyl_coset_data(P)) {
    i64 cell = 1;
    for (size_t t = 0; t < st.ubw_roots.size(); ++t) cell *= q;
    left[support_key(st.w)] += cell;
  }
  for (const CosetStratum& st : weyl_coset_data(Q)) {
    i64 cell = 1;
    for (size_t t = 0; t < st.ubw_roots.size(); ++t) cell *= q;
    right[support_key(st.w)] += cell * qp_index;
  }
  out.fingerprints_match = left == right;
  return out;
}

}  // namespace dhs
