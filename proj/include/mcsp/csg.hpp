#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mcsp/strings_core.hpp"
#include "mcsp/suffix_automaton.hpp"

namespace mcsp {

enum class Direction { in, out };

// Common substring graph of one side of a pair. Vertices are the positions
// of the chosen string; the edge blocks are exactly the blocks whose induced
// substring also occurs in the other string. Edge existence is prefix-closed
// in j for fixed i, all singletons are edges (relatedness), and edges are
// kept sorted by (i, j) so iteration order is deterministic everywhere
// downstream.
struct CommonSubstringGraph {
  int id = kIdX;
  int n = 0;
  std::vector<Block> edges;
  std::vector<std::vector<int>> starts_at;  // delta+ : vertex -> indices into edges
  std::vector<std::vector<int>> ends_at;    // delta- : vertex -> indices into edges
};

// Enumerates the edge blocks of one side via matching statistics: for each
// start i, walk the other string's suffix automaton to the longest match
// length L(i); the edges starting at i are then [i, i+l-1] for 1 <= l <= L(i).
// Cost is proportional to the number of edges produced.
inline CommonSubstringGraph build_graph(const RelatedPair& pair, int which) {
  const std::string& self = pair.str(which);
  const SuffixAutomaton other_index(pair.str(1 - which));

  CommonSubstringGraph g;
  g.id = which;
  g.n = pair.n;
  g.starts_at.resize(static_cast<std::size_t>(pair.n));
  g.ends_at.resize(static_cast<std::size_t>(pair.n));

  for (int i = 0; i < pair.n; ++i) {
    const int reach = other_index.longest_prefix_match(self, static_cast<std::size_t>(i));
    // reach >= 1 for a valid pair: every byte of one string occurs in the other
    for (int l = 1; l <= reach; ++l) {
      const int idx = static_cast<int>(g.edges.size());
      g.edges.push_back(Block{which, i, i + l - 1});
      g.starts_at[static_cast<std::size_t>(i)].push_back(idx);
      g.ends_at[static_cast<std::size_t>(i + l - 1)].push_back(idx);
    }
  }
  return g;
}

inline std::vector<Block> incident_blocks(const CommonSubstringGraph& g, int v, Direction dir) {
  if (v < 0 || v >= g.n)
    fail(errc::vertex_out_of_range,
         "vertex " + std::to_string(v) + " not in [0, " + std::to_string(g.n) + ")");
  const auto& idx = dir == Direction::out ? g.starts_at[static_cast<std::size_t>(v)]
                                          : g.ends_at[static_cast<std::size_t>(v)];
  std::vector<Block> out;
  out.reserve(idx.size());
  for (int e : idx) out.push_back(g.edges[static_cast<std::size_t>(e)]);
  return out;
}

// Debug dump, one edge block per line: "id i j substring".
inline void dump_edges(const CommonSubstringGraph& g, const RelatedPair& pair, std::ostream& os) {
  for (const Block& e : g.edges)
    os << e.id << ' ' << e.i << ' ' << e.j << ' ' << substring_of(pair, e) << '\n';
}

}  // namespace mcsp
