#pragma once

// Sparse vectors over F_p keyed by an ordered type, with incremental row
// echelon bases. Weight spaces here are tiny but numerous, so everything is
// map-based and exact; dense matrices are materialized only inside rank
// computations (see fingrp).

#include <map>

#include "dhs/fq.hpp"

namespace dhs {

template <class K>
using SparseVec = std::map<K, i64>;

template <class K>
void vec_axpy(SparseVec<K>& dst, i64 c, const SparseVec<K>& src, i64 p) {
  c = mod_canon(c, p);
  if (c == 0) return;
  for (const auto& [k, v] : src) {
    i64& slot = dst[k];
    slot = mod_canon(slot + c * v, p);
    if (slot == 0) dst.erase(k);
  }
}

template <class K>
void vec_scale(SparseVec<K>& v, i64 c, i64 p) {
  c = mod_canon(c, p);
  if (c == 0) {
    v.clear();
    return;
  }
  for (auto& [k, val] : v) val = val * c % p;
}

/// Row echelon basis with unit leading coefficients, fully back-reduced, so
/// the stored rows are canonical for the spanned subspace.
template <class K>
class EchelonBasis {
public:
  explicit EchelonBasis(i64 p) : p_(p) {}

  /// Reduce v against the basis; returns the residue. Rows are keyed by their
  /// maximal term, so once the current maximum of v has no pivot it is final.
  SparseVec<K> reduce(SparseVec<K> v) const {
    SparseVec<K> out;
    while (!v.empty()) {
      auto lead = std::prev(v.end());
      auto it = rows_.find(lead->first);
      if (it == rows_.end()) {
        out.insert(*lead);
        v.erase(lead->first);
      } else {
        vec_axpy(v, p_ - lead->second, it->second, p_);
      }
    }
    return out;
  }

  bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }

  /// Insert v if independent; returns true when the rank grew.
  bool insert(SparseVec<K> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    auto lead = std::prev(v.end());
    K pivot = lead->first;
    vec_scale(v, inv_mod(lead->second, p_), p_);
    for (auto& [k, row] : rows_) {
      auto hit = row.find(pivot);
      if (hit != row.end()) vec_axpy(row, p_ - hit->second, v, p_);
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  size_t rank() const { return rows_.size(); }
  const std::map<K, SparseVec<K>, std::greater<K>>& rows() const { return rows_; }
  i64 characteristic() const { return p_; }

  friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_;
  }

private:
  i64 p_;
  std::map<K, SparseVec<K>, std::greater<K>> rows_;
};

/// Rank of a dense 0..p-1 matrix over F_p (rows of equal length).
i64 dense_rank_mod_p(std::vector<std::vector<i64>> rows, i64 p);

}  // namespace dhs
