#include "dhs/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dhs {

std::vector<Root> all_roots(int d) {
  std::vector<Root> out;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      if (i != j) out.emplace_back(i, j);
  return out;
}

std::vector<Root> positive_roots(int d) {
  std::vector<Root> out;
  for (int i = 1; i <= d; ++i)
    for (int j = 0; j < i; ++j) out.emplace_back(i, j);
  return out;
}

WeylElement WeylElement::identity(int d) {
  std::vector<int> v(d + 1);
  std::iota(v.begin(), v.end(), 0);
  return WeylElement(std::move(v));
}

WeylElement WeylElement::transposition(int d, int a, int b) {
  auto w = identity(d);
  std::swap(w.sigma_[a], w.sigma_[b]);
  return w;
}

WeylElement::WeylElement(std::vector<int> images) : sigma_(std::move(images)) {
  std::vector<bool> seen(sigma_.size(), false);
  for (int v : sigma_) {
    if (v < 0 || v >= static_cast<int>(sigma_.size()) || seen[v])
      throw std::invalid_argument("WeylElement: not a permutation");
    seen[v] = true;
  }
}

WeylElement WeylElement::inverse() const {
  std::vector<int> inv(sigma_.size());
  for (size_t i = 0; i < sigma_.size(); ++i) inv[sigma_[i]] = static_cast<int>(i);
  return WeylElement(std::move(inv));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  std::vector<int> c(a.sigma_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.sigma_[b.sigma_[i]];
  return WeylElement(std::move(c));
}

Weight WeylElement::act(const Weight& w) const {
  Weight out = Weight::zero(rank());
  for (size_t i = 0; i < sigma_.size(); ++i) out.m[sigma_[i]] = w.m[i];
  return out;
}

int WeylElement::length() const {
  int len = 0;
  for (const Root& r : positive_roots(rank()))
    if (!act(r).positive()) ++len;
  return len;
}

Weight dot_action(const WeylElement& w, const Weight& lambda) {
  Weight r = rho(lambda.rank());
  return w.act(lambda + r) - r;
}

Weight dot_chain(int d, int count) {
  if (count < 0 || count > d) throw std::invalid_argument("dot_chain: count out of range");
  WeylElement w = WeylElement::identity(d);
  // word s_count ... s_1, rightmost factor applied first
  for (int k = count; k >= 1; --k) w = w * WeylElement::transposition(d, d - k, d - k + 1);
  return dot_action(w, Weight::zero(d));
}

ParabolicData ParabolicData::from_composition(int d, std::vector<int> composition) {
  ParabolicData P;
  P.d_ = d;
  P.composition_ = std::move(composition);
  i64 total = 0;
  for (int c : P.composition_) {
    if (c <= 0) throw std::invalid_argument("ParabolicData: composition parts must be positive");
    total += c;
  }
  if (total != d + 1) throw std::invalid_argument("ParabolicData: composition must sum to d+1");
  P.I_.assign(d, true);
  P.block_of_.assign(d + 1, 0);
  int pos = 0, blk = 0;
  for (int c : P.composition_) {
    for (int k = 0; k < c; ++k) P.block_of_[pos + k] = blk;
    pos += c;
    if (pos <= d) P.I_[pos - 1] = false;  // cut between pos-1 and pos
    ++blk;
  }
  return P;
}

ParabolicData ParabolicData::from_subset(int d, const std::vector<bool>& I) {
  if (static_cast<int>(I.size()) != d)
    throw std::invalid_argument("ParabolicData: subset must have d entries");
  std::vector<int> comp;
  int run = 1;
  for (int s = 0; s < d; ++s) {
    if (I[s]) {
      ++run;
    } else {
      comp.push_back(run);
      run = 1;
    }
  }
  comp.push_back(run);
  return from_composition(d, std::move(comp));
}

ParabolicData ParabolicData::borel(int d) {
  return from_composition(d, std::vector<int>(d + 1, 1));
}

ParabolicData ParabolicData::full(int d) { return from_composition(d, {d + 1}); }

std::vector<Root> ParabolicData::radical_roots() const {
  std::vector<Root> out;
  for (const Root& r : positive_roots(d_))
    if (!is_levi_root(r)) out.push_back(r);
  return out;
}

std::vector<Root> ParabolicData::levi_roots() const {
  std::vector<Root> out;
  for (const Root& r : positive_roots(d_))
    if (is_levi_root(r)) out.push_back(r);
  return out;
}

bool ParabolicData::contains(const ParabolicData& other) const {
  if (other.d_ != d_) return false;
  for (int s = 0; s < d_; ++s)
    if (other.I_[s] && !I_[s]) return false;
  return true;
}

std::string ParabolicData::to_string() const {
  std::ostringstream os;
  os << "P(";
  for (size_t k = 0; k < composition_.size(); ++k) {
    if (k) os << ",";
    os << composition_[k];
  }
  os << ")";
  return os.str();
}

ParabolicData maximal_parabolic_for(const Weight& lambda) {
  int d = lambda.rank();
  std::vector<bool> I(d);
  for (int s = 0; s < d; ++s) I[s] = coroot_pairing(lambda, simple_root(s)) >= 0;
  return ParabolicData::from_subset(d, I);
}

std::vector<WeylElement> weyl_group(int d) {
  std::vector<int> v(d + 1);
  std::iota(v.begin(), v.end(), 0);
  std::vector<WeylElement> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<CosetStratum> weyl_coset_data(const ParabolicData& P) {
  int d = P.rank();
  std::vector<CosetStratum> out;
  for (const WeylElement& w : weyl_group(d)) {
    bool minimal = true;
    for (int s = 0; s < d && minimal; ++s)
      if (P.subset()[s] && !w.act(simple_root(s)).positive()) minimal = false;
    if (!minimal) continue;
    CosetStratum st;
    st.w = w;
    WeylElement winv = w.inverse();
    for (const Root& g : positive_roots(d))
      if (!winv.act(g).positive()) st.ubw_roots.push_back(g);
    out.push_back(std::move(st));
  }
  std::sort(out.begin(), out.end(), [](const CosetStratum& a, const CosetStratum& b) {
    auto ka = std::make_pair(a.ubw_roots.size(), a.w.images());
    auto kb = std::make_pair(b.ubw_roots.size(), b.w.images());
    return ka < kb;
  });
  return out;
}

i64 bruhat_point_count(const ParabolicData& P, i64 q) {
  i64 total = 0;
  for (const CosetStratum& st : weyl_coset_data(P)) {
    i64 cell = 1;
    for (size_t k = 0; k < st.ubw_roots.size(); ++k) cell *= q;
    total += cell;
  }
  return total;
}

AdImage ad_weyl(const WeylElement& w, const GeneratorLabel& g) {
  Root unit = g.unit();
  Root moved(w(unit.i), w(unit.j));
  AdImage out;
  out.sign = 1;
  if (moved.positive())
    out.label = GeneratorLabel{moved, GeneratorKind::Raising};
  else
    out.label = GeneratorLabel{moved.negated(), GeneratorKind::Lowering};
  return out;
}

}  // namespace dhs
