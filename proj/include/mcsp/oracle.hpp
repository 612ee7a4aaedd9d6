#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "mcsp/strings_core.hpp"

namespace mcsp {

struct OracleResult {
  int size = 0;
  CommonPartition partition;
};

// Exhaustive ground truth for tiny instances. Enumerates the factorizations
// of x grouped by block count, smallest count first, and for each one asks
// whether y tiles into exactly that multiset of pieces; the first hit is
// therefore optimal. No cleverness on purpose: this code defines what
// correct means for everything else.
inline OracleResult brute_force_mcsp(const RelatedPair& pair, int max_n = 14) {
  if (pair.n > max_n)
    fail(errc::instance_too_large,
         "n=" + std::to_string(pair.n) + " exceeds the oracle cap " + std::to_string(max_n));

  const int n = pair.n;
  std::map<std::string, int> counts;  // multiset of x pieces
  std::vector<Block> x_blocks;
  std::vector<Block> y_blocks;

  const auto tile_y = [&](auto&& self, int pos) -> bool {
    if (pos == n) return true;
    for (auto& [text, cnt] : counts) {
      if (cnt == 0) continue;
      const int len = static_cast<int>(text.size());
      if (pos + len > n || pair.y.compare(static_cast<std::size_t>(pos),
                                          static_cast<std::size_t>(len), text) != 0)
        continue;
      --cnt;
      y_blocks.push_back(Block{kIdY, pos, pos + len - 1});
      if (self(self, pos + len)) return true;
      y_blocks.pop_back();
      ++cnt;
    }
    return false;
  };

  const auto compose_x = [&](auto&& self, int pos, int blocks_left) -> bool {
    if (pos == n) return tile_y(tile_y, 0);
    const int max_len = n - pos - (blocks_left - 1);
    const int min_len = blocks_left == 1 ? max_len : 1;
    for (int len = min_len; len <= max_len; ++len) {
      const std::string piece = pair.x.substr(static_cast<std::size_t>(pos),
                                              static_cast<std::size_t>(len));
      x_blocks.push_back(Block{kIdX, pos, pos + len - 1});
      ++counts[piece];
      if (self(self, pos + len, blocks_left - 1)) return true;
      if (--counts[piece] == 0) counts.erase(piece);
      x_blocks.pop_back();
    }
    return false;
  };

  for (int k = 1; k <= n; ++k) {
    if (compose_x(compose_x, 0, k)) {
      OracleResult result;
      result.size = k;
      result.partition.p_blocks = x_blocks;
      result.partition.q_blocks = y_blocks;
      return result;
    }
  }
  // unreachable: the all-singletons factorization always tiles a related pair
  fail(errc::instance_too_large, "exhausted factorizations of a related pair");
}

}  // namespace mcsp
