#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mcsp/strings_core.hpp"

namespace mcsp {

namespace detail {

struct Fragment {
  int lo = 0;
  int hi = 0;  // inclusive
};

// Longest common substring of x[fx] and y[fy] via the classic rolling-row
// match-length table. Returns 0 when the fragments share nothing.
inline int longest_common_in(const std::string& x, const std::string& y, Fragment fx, Fragment fy,
                             std::vector<int>& row) {
  const int lb = fy.hi - fy.lo + 1;
  row.assign(static_cast<std::size_t>(lb) + 1, 0);
  int best = 0;
  for (int a = fx.lo; a <= fx.hi; ++a) {
    int diag = 0;  // table value one up-left
    for (int b = 0; b < lb; ++b) {
      const int keep = row[static_cast<std::size_t>(b) + 1];
      row[static_cast<std::size_t>(b) + 1] =
          x[static_cast<std::size_t>(a)] == y[static_cast<std::size_t>(fy.lo + b)] ? diag + 1 : 0;
      diag = keep;
      best = std::max(best, row[static_cast<std::size_t>(b) + 1]);
    }
  }
  return best;
}

// Smallest (x start, y start) among all occurrences of a length-`len` common
// substring of the two fragments; writes into best_x/best_y.
inline void min_start_of_len(const std::string& x, const std::string& y, Fragment fx, Fragment fy,
                             int len, int& best_x, int& best_y, std::vector<int>& row) {
  const int lb = fy.hi - fy.lo + 1;
  row.assign(static_cast<std::size_t>(lb) + 1, 0);
  for (int a = fx.lo; a <= fx.hi; ++a) {
    int diag = 0;
    for (int b = 0; b < lb; ++b) {
      const int keep = row[static_cast<std::size_t>(b) + 1];
      const int d =
          x[static_cast<std::size_t>(a)] == y[static_cast<std::size_t>(fy.lo + b)] ? diag + 1 : 0;
      row[static_cast<std::size_t>(b) + 1] = d;
      diag = keep;
      if (d >= len) {
        const int sx = a - d + 1;
        const int sy = fy.lo + b - d + 1;
        if (sx < best_x || (sx == best_x && sy < best_y)) {
          best_x = sx;
          best_y = sy;
        }
      }
    }
  }
}

inline void cut_fragment(std::vector<Fragment>& frags, int lo, int hi) {
  for (std::size_t k = 0; k < frags.size(); ++k) {
    if (frags[k].lo <= lo && hi <= frags[k].hi) {
      const Fragment old = frags[k];
      frags.erase(frags.begin() + static_cast<std::ptrdiff_t>(k));
      if (hi < old.hi) frags.insert(frags.begin() + static_cast<std::ptrdiff_t>(k), {hi + 1, old.hi});
      if (old.lo < lo) frags.insert(frags.begin() + static_cast<std::ptrdiff_t>(k), {old.lo, lo - 1});
      return;
    }
  }
}

}  // namespace detail

// Greedy baseline: repeatedly extract a longest substring common to the
// still-unpartitioned segments of x and y, marking both occurrences as
// matched blocks, until everything is covered. Singletons are always common
// (related strings keep equal letter counts on the uncovered parts), so the
// loop terminates. Ties are broken toward the smallest x start, then the
// smallest y start, which pins the output for golden tests.
inline CommonPartition greedy_partition(const RelatedPair& pair) {
  std::vector<detail::Fragment> xfrags{{0, pair.n - 1}};
  std::vector<detail::Fragment> yfrags{{0, pair.n - 1}};
  CommonPartition out;
  std::vector<int> row;

  while (!xfrags.empty()) {
    int best_len = 0;
    for (const auto& fx : xfrags)
      for (const auto& fy : yfrags)
        best_len = std::max(best_len, detail::longest_common_in(pair.x, pair.y, fx, fy, row));

    int best_x = pair.n;
    int best_y = pair.n;
    for (const auto& fx : xfrags)
      for (const auto& fy : yfrags)
        detail::min_start_of_len(pair.x, pair.y, fx, fy, best_len, best_x, best_y, row);

    out.p_blocks.push_back(Block{kIdX, best_x, best_x + best_len - 1});
    out.q_blocks.push_back(Block{kIdY, best_y, best_y + best_len - 1});
    detail::cut_fragment(xfrags, best_x, best_x + best_len - 1);
    detail::cut_fragment(yfrags, best_y, best_y + best_len - 1);
  }

  std::sort(out.p_blocks.begin(), out.p_blocks.end());
  std::sort(out.q_blocks.begin(), out.q_blocks.end());
  return out;
}

}  // namespace mcsp
