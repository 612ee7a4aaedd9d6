#pragma once

// Test-only reference construction of the common substring graph: try every
// (i, j) and search the other string directly. Deliberately independent of
// the suffix-automaton path used by the library.

#include <string>
#include <vector>

#include "mcsp/csg.hpp"
#include "mcsp/strings_core.hpp"

namespace mcsp_test {

inline mcsp::CommonSubstringGraph naive_build_graph(const mcsp::RelatedPair& pair, int which) {
  const std::string& self = pair.str(which);
  const std::string& other = pair.str(1 - which);

  mcsp::CommonSubstringGraph g;
  g.id = which;
  g.n = pair.n;
  g.starts_at.resize(static_cast<std::size_t>(pair.n));
  g.ends_at.resize(static_cast<std::size_t>(pair.n));
  for (int i = 0; i < pair.n; ++i) {
    for (int j = i; j < pair.n; ++j) {
      const std::string text = self.substr(static_cast<std::size_t>(i),
                                           static_cast<std::size_t>(j - i + 1));
      if (other.find(text) == std::string::npos) continue;
      const int idx = static_cast<int>(g.edges.size());
      g.edges.push_back(mcsp::Block{which, i, j});
      g.starts_at[static_cast<std::size_t>(i)].push_back(idx);
      g.ends_at[static_cast<std::size_t>(j)].push_back(idx);
    }
  }
  return g;
}

}  // namespace mcsp_test
