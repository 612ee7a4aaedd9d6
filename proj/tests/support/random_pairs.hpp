#pragma once

// Self-contained random instance generator for property tests. Kept separate
// from the library's generator so tests of that generator stay independent.

#include <random>
#include <string>
#include <string_view>

#include "mcsp/strings_core.hpp"

namespace mcsp_test {

inline mcsp::RelatedPair random_pair(std::uint64_t seed, int length,
                                     std::string_view alphabet = "abcd") {
  std::mt19937_64 rng(seed);
  std::string x;
  x.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k)
    x.push_back(alphabet[static_cast<std::size_t>(rng() % alphabet.size())]);
  std::string y = x;
  for (std::size_t i = y.size(); i > 1; --i)
    std::swap(y[i - 1], y[static_cast<std::size_t>(rng() % i)]);
  return mcsp::check_related(x, y);
}

}  // namespace mcsp_test
