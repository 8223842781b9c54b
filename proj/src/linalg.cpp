#include "dhs/linalg.hpp"

#include <vector>

namespace dhs {

i64 dense_rank_mod_p(std::vector<std::vector<i64>> rows, i64 p) {
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t pivot = r;
    while (pivot < rows.size() && mod_canon(rows[pivot][c], p) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    i64 inv = inv_mod(rows[r][c], p);
    for (size_t k = c; k < ncols; ++k) rows[r][k] = mod_canon(rows[r][k], p) * inv % p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      i64 f = mod_canon(rows[i][c], p);
      if (f == 0) continue;
      for (size_t k = c; k < ncols; ++k)
        rows[i][k] = mod_canon(rows[i][k] - f * rows[r][k], p);
    }
    ++r;
  }
  return static_cast<i64>(r);
}

}  // namespace dhs
