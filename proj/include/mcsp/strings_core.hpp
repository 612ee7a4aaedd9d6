#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcsp/errors.hpp"

namespace mcsp {

// Block ids: 0 selects the first string of a pair, 1 the second.
inline constexpr int kIdX = 0;
inline constexpr int kIdY = 1;

// One substring occurrence: string tag plus inclusive start/end positions.
struct Block {
  int id = kIdX;
  int i = 0;
  int j = 0;

  int length() const { return j - i + 1; }

  friend auto operator<=>(const Block&, const Block&) = default;
};

// A validated instance. Two strings are related when every byte occurs the
// same number of times in both; only related strings admit a common
// partition. Construct through check_related() so the invariants hold.
struct RelatedPair {
  std::string x;
  std::string y;
  int n = 0;
  std::string alphabet;  // distinct bytes of x, ascending

  const std::string& str(int id) const { return id == kIdX ? x : y; }
};

inline RelatedPair check_related(std::string_view x, std::string_view y) {
  if (x.empty() || y.empty()) fail(errc::empty_input, "both strings must be non-empty");
  if (x.size() != y.size())
    fail(errc::length_mismatch, "lengths differ: " + std::to_string(x.size()) + " vs " +
                                    std::to_string(y.size()));
  std::array<long, 256> count_x{};
  std::array<long, 256> count_y{};
  for (unsigned char c : x) ++count_x[c];
  for (unsigned char c : y) ++count_y[c];
  for (int c = 0; c < 256; ++c) {
    if (count_x[c] != count_y[c])
      fail(errc::multiset_mismatch,
           std::string("letter '") + static_cast<char>(c) + "' occurs " +
               std::to_string(count_x[c]) + " times in x but " + std::to_string(count_y[c]) +
               " in y");
  }
  RelatedPair pair;
  pair.x.assign(x);
  pair.y.assign(y);
  pair.n = static_cast<int>(x.size());
  for (int c = 0; c < 256; ++c)
    if (count_x[c] > 0) pair.alphabet.push_back(static_cast<char>(c));
  return pair;
}

// Same instance with the roles of the two strings exchanged. The alphabet is
// unchanged (relatedness makes the byte sets equal).
inline RelatedPair swapped(const RelatedPair& pair) {
  RelatedPair out = pair;
  std::swap(out.x, out.y);
  return out;
}

inline std::string_view substring_of(const RelatedPair& pair, const Block& b) {
  if (b.id != kIdX && b.id != kIdY) fail(errc::out_of_bounds, "block id must be 0 or 1");
  if (b.i < 0 || b.j < b.i || b.j >= pair.n)
    fail(errc::out_of_bounds, "block [" + std::to_string(b.id) + "," + std::to_string(b.i) + "," +
                                  std::to_string(b.j) + "] out of bounds for n=" +
                                  std::to_string(pair.n));
  return std::string_view(pair.str(b.id)).substr(static_cast<std::size_t>(b.i),
                                                 static_cast<std::size_t>(b.length()));
}

// The members of `blocks` whose induced substring equals that of `b`,
// in input order.
inline std::vector<Block> match_list(std::span<const Block> blocks, const Block& b,
                                     const RelatedPair& pair) {
  const std::string_view text = substring_of(pair, b);
  std::vector<Block> out;
  for (const Block& cand : blocks)
    if (substring_of(pair, cand) == text) out.push_back(cand);
  return out;
}

// Factorizations of x and y into blocks whose substring multisets agree.
struct CommonPartition {
  std::vector<Block> p_blocks;  // tiles x, ascending start
  std::vector<Block> q_blocks;  // tiles y, ascending start

  int size() const { return static_cast<int>(p_blocks.size()); }
};

namespace detail {

// Ordered blocks must carry `id`, stay in bounds and cover [0, n-1] with no
// gaps or overlaps.
inline bool tiles_exactly(const std::vector<Block>& blocks, int id, int n) {
  int next = 0;
  for (const Block& b : blocks) {
    if (b.id != id || b.i != next || b.j < b.i || b.j >= n) return false;
    next = b.j + 1;
  }
  return next == n;
}

}  // namespace detail

// True iff p_blocks tile x, q_blocks tile y, and the two induced substring
// multisets are equal. Structural violations yield false, never an error.
inline bool validate_common_partition(const RelatedPair& pair, const CommonPartition& cand) {
  if (cand.p_blocks.size() != cand.q_blocks.size()) return false;
  if (!detail::tiles_exactly(cand.p_blocks, kIdX, pair.n)) return false;
  if (!detail::tiles_exactly(cand.q_blocks, kIdY, pair.n)) return false;
  std::vector<std::string_view> p_texts, q_texts;
  p_texts.reserve(cand.p_blocks.size());
  q_texts.reserve(cand.q_blocks.size());
  for (const Block& b : cand.p_blocks) p_texts.push_back(substring_of(pair, b));
  for (const Block& b : cand.q_blocks) q_texts.push_back(substring_of(pair, b));
  std::sort(p_texts.begin(), p_texts.end());
  std::sort(q_texts.begin(), q_texts.end());
  return p_texts == q_texts;
}

}  // namespace mcsp
