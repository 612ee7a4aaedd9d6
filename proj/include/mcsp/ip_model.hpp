#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mcsp/csg.hpp"
#include "mcsp/strings_core.hpp"

namespace mcsp {

// Binary decision variable: one per edge block. Side 0 carries the x
// variables (blocks of E1), side 1 the y variables (blocks of E2).
struct VarDesc {
  int side = 0;
  Block block;
  std::string name;  // x_<i>_<j> or y_<i>_<j>
};

enum class Relation { le, eq };

struct LinearConstraint {
  std::string name;
  std::vector<std::pair<int, int>> terms;  // (variable index, coefficient)
  Relation rel = Relation::eq;
  int rhs = 0;
};

// Edge indices (into g1.edges / g2.edges) of the blocks inducing one
// substring text. the blocks matching a given block are exactly the entries
// for its text.
struct SubstringClass {
  std::vector<int> x_edges;
  std::vector<int> y_edges;
};

struct BuildOptions {
  // The matching-equality rows are identical for blocks with equal text.
  // The default emits one row per E1 block; this switches to one row per
  // distinct text, which leaves the feasible set unchanged.
  bool dedup_matching_rows = false;
};

// The integer program over a pair's two common substring graphs:
//
//   minimize   (sum x + sum y) / 2
//   subject to sum x = sum y                                    (eqsize)
//              unit flow source->sink through each graph        (src/flow/snk)
//              x_t <= sum of matching y,  y_t <= sum matching x (mx/my)
//              per-text selected counts agree between sides     (cls)
//              all variables binary
//
// Any feasible point selects two tilings with equal substring multisets, so
// the objective value is the common partition size.
struct IpModel {
  RelatedPair pair;
  CommonSubstringGraph g1;
  CommonSubstringGraph g2;
  std::vector<VarDesc> vars;       // all E1 variables by (i, j), then all E2
  std::vector<double> objective;   // 0.5 for every variable
  std::vector<LinearConstraint> constraints;
  std::map<std::string, SubstringClass> class_index;  // text -> blocks per side
  int num_x = 0;                   // |E1|; y variable k lives at num_x + k

  int var_of_e1(int edge_idx) const { return edge_idx; }
  int var_of_e2(int edge_idx) const { return num_x + edge_idx; }

  // Variable index for a block of the given side, or -1 when the block is
  // not an edge of that side's graph.
  int var_index(int side, const Block& b) const {
    const auto& edges = side == 0 ? g1.edges : g2.edges;
    const Block probe{side == 0 ? kIdX : kIdY, b.i, b.j};
    const auto it = std::lower_bound(edges.begin(), edges.end(), probe);
    if (it == edges.end() || *it != probe) return -1;
    const int edge_idx = static_cast<int>(it - edges.begin());
    return side == 0 ? var_of_e1(edge_idx) : var_of_e2(edge_idx);
  }
};

// A 0/1 valuation of every model variable, indexed like IpModel::vars.
struct Assignment {
  std::vector<std::int8_t> values;
};

namespace detail {

inline std::string var_name(int side, const Block& b) {
  return (side == 0 ? "x_" : "y_") + std::to_string(b.i) + "_" + std::to_string(b.j);
}

inline void append_terms(LinearConstraint& c, const std::vector<int>& edge_indices, int coeff,
                         bool y_side, int num_x) {
  for (int e : edge_indices) c.terms.emplace_back(y_side ? num_x + e : e, coeff);
}

}  // namespace detail

inline IpModel build_model(const RelatedPair& pair, const CommonSubstringGraph& g1,
                           const CommonSubstringGraph& g2, BuildOptions opts = {}) {
  if (g1.id != kIdX || g2.id != kIdY || g1.n != pair.n || g2.n != pair.n)
    fail(errc::graph_pair_mismatch, "graphs must be the x/y sides of the given pair");

  IpModel m;
  m.pair = pair;
  m.g1 = g1;
  m.g2 = g2;
  m.num_x = static_cast<int>(g1.edges.size());

  for (const Block& b : g1.edges) m.vars.push_back(VarDesc{0, b, detail::var_name(0, b)});
  for (const Block& b : g2.edges) m.vars.push_back(VarDesc{1, b, detail::var_name(1, b)});
  m.objective.assign(m.vars.size(), 0.5);

  for (int e = 0; e < static_cast<int>(g1.edges.size()); ++e)
    m.class_index[std::string(substring_of(pair, g1.edges[static_cast<std::size_t>(e)]))]
        .x_edges.push_back(e);
  for (int e = 0; e < static_cast<int>(g2.edges.size()); ++e)
    m.class_index[std::string(substring_of(pair, g2.edges[static_cast<std::size_t>(e)]))]
        .y_edges.push_back(e);

  const int n = pair.n;

  // partition sizes agree
  {
    LinearConstraint c;
    c.name = "eqsize";
    for (int e = 0; e < m.num_x; ++e) c.terms.emplace_back(e, 1);
    for (int e = 0; e < static_cast<int>(g2.edges.size()); ++e)
      c.terms.emplace_back(m.num_x + e, -1);
    c.rel = Relation::eq;
    c.rhs = 0;
    m.constraints.push_back(std::move(c));
  }

  // unit flow through each graph: one block leaves the source, one enters the
  // sink, and flow is conserved across every interior boundary
  const auto add_flow_rows = [&](const CommonSubstringGraph& g, bool y_side, const char* tag) {
    LinearConstraint src;
    src.name = std::string("src_") + tag;
    detail::append_terms(src, g.starts_at[0], 1, y_side, m.num_x);
    src.rel = Relation::eq;
    src.rhs = 1;
    m.constraints.push_back(std::move(src));

    LinearConstraint snk;
    snk.name = std::string("snk_") + tag;
    detail::append_terms(snk, g.ends_at[static_cast<std::size_t>(n - 1)], 1, y_side, m.num_x);
    snk.rel = Relation::eq;
    snk.rhs = 1;
    m.constraints.push_back(std::move(snk));

    for (int v = 0; v + 1 < n; ++v) {
      LinearConstraint c;
      c.name = std::string("flow_") + tag + "_" + std::to_string(v);
      detail::append_terms(c, g.ends_at[static_cast<std::size_t>(v)], 1, y_side, m.num_x);
      detail::append_terms(c, g.starts_at[static_cast<std::size_t>(v + 1)], -1, y_side, m.num_x);
      c.rel = Relation::eq;
      c.rhs = 0;
      m.constraints.push_back(std::move(c));
    }
  };
  add_flow_rows(g1, false, "x");
  add_flow_rows(g2, true, "y");

  // a selected block needs a matching partner on the other side
  for (int e = 0; e < m.num_x; ++e) {
    const Block& b = g1.edges[static_cast<std::size_t>(e)];
    const SubstringClass& cls = m.class_index.at(std::string(substring_of(pair, b)));
    LinearConstraint c;
    c.name = "mx_" + std::to_string(b.i) + "_" + std::to_string(b.j);
    c.terms.emplace_back(e, 1);
    detail::append_terms(c, cls.y_edges, -1, true, m.num_x);
    c.rel = Relation::le;
    c.rhs = 0;
    m.constraints.push_back(std::move(c));
  }
  for (int e = 0; e < static_cast<int>(g2.edges.size()); ++e) {
    const Block& b = g2.edges[static_cast<std::size_t>(e)];
    const SubstringClass& cls = m.class_index.at(std::string(substring_of(pair, b)));
    LinearConstraint c;
    c.name = "my_" + std::to_string(b.i) + "_" + std::to_string(b.j);
    c.terms.emplace_back(m.num_x + e, 1);
    detail::append_terms(c, cls.x_edges, -1, false, m.num_x);
    c.rel = Relation::le;
    c.rhs = 0;
    m.constraints.push_back(std::move(c));
  }

  // selected counts agree per substring text, making the matching one-to-one
  {
    int k = 0;
    std::map<std::string, bool> emitted;
    for (int e = 0; e < m.num_x; ++e) {
      const std::string text(substring_of(pair, g1.edges[static_cast<std::size_t>(e)]));
      if (opts.dedup_matching_rows) {
        if (emitted[text]) continue;
        emitted[text] = true;
      }
      const SubstringClass& cls = m.class_index.at(text);
      LinearConstraint c;
      c.name = "cls_" + std::to_string(k++);
      detail::append_terms(c, cls.x_edges, 1, false, m.num_x);
      detail::append_terms(c, cls.y_edges, -1, true, m.num_x);
      c.rel = Relation::eq;
      c.rhs = 0;
      m.constraints.push_back(std::move(c));
    }
  }

  return m;
}

inline IpModel build_model(const RelatedPair& pair, BuildOptions opts = {}) {
  return build_model(pair, build_graph(pair, kIdX), build_graph(pair, kIdY), opts);
}

inline bool verify_assignment(const IpModel& m, const Assignment& a) {
  if (a.values.size() != m.vars.size())
    fail(errc::missing_variable, "assignment covers " + std::to_string(a.values.size()) +
                                     " of " + std::to_string(m.vars.size()) + " variables");
  for (std::int8_t v : a.values)
    if (v != 0 && v != 1) return false;
  for (const LinearConstraint& c : m.constraints) {
    long long lhs = 0;
    for (const auto& [var, coeff] : c.terms)
      lhs += static_cast<long long>(coeff) * a.values[static_cast<std::size_t>(var)];
    if (c.rel == Relation::eq ? lhs != c.rhs : lhs > c.rhs) return false;
  }
  return true;
}

// Reads the selected blocks out of a feasible assignment. Variables are in
// (i, j) order per side, so the tilings come out sorted by start position;
// blocks of equal text pair up by ascending start.
inline CommonPartition decode_solution(const IpModel& m, const Assignment& a) {
  if (!verify_assignment(m, a))
    fail(errc::infeasible_assignment, "assignment violates the model constraints");
  CommonPartition p;
  for (std::size_t k = 0; k < m.vars.size(); ++k) {
    if (!a.values[k]) continue;
    (m.vars[k].side == 0 ? p.p_blocks : p.q_blocks).push_back(m.vars[k].block);
  }
  return p;
}

inline Assignment assignment_from_partition(const IpModel& m, const CommonPartition& p) {
  Assignment a;
  a.values.assign(m.vars.size(), 0);
  const auto select = [&](const Block& b, int side) {
    const int var = m.var_index(side, b);
    if (var < 0)
      fail(errc::infeasible_assignment,
           "block [" + std::to_string(b.id) + "," + std::to_string(b.i) + "," +
               std::to_string(b.j) + "] is not an edge block of the model");
    a.values[static_cast<std::size_t>(var)] = 1;
  };
  for (const Block& b : p.p_blocks) select(b, 0);
  for (const Block& b : p.q_blocks) select(b, 1);
  return a;
}

namespace detail {

inline void write_terms(std::ostream& os, const IpModel& m,
                        const std::vector<std::pair<int, int>>& terms) {
  bool first = true;
  for (const auto& [var, coeff] : terms) {
    const int mag = coeff < 0 ? -coeff : coeff;
    if (first) {
      if (coeff < 0) os << "- ";
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag << ' ';
    os << m.vars[static_cast<std::size_t>(var)].name;
    first = false;
  }
}

}  // namespace detail

// CPLEX-LP text dialect: Minimize / Subject To / Binary / End, ASCII, LF
// line endings, one constraint per line. Output is byte-deterministic for a
// given model.
inline void export_lp(const IpModel& m, std::ostream& os) {
  os << "Minimize\n obj: ";
  for (std::size_t k = 0; k < m.vars.size(); ++k) {
    if (k) os << " + ";
    os << "0.5 " << m.vars[k].name;
  }
  os << "\nSubject To\n";
  for (const LinearConstraint& c : m.constraints) {
    os << ' ' << c.name << ": ";
    detail::write_terms(os, m, c.terms);
    os << (c.rel == Relation::le ? " <= " : " = ") << c.rhs << '\n';
  }
  os << "Binary\n";
  for (const VarDesc& v : m.vars) os << ' ' << v.name << '\n';
  os << "End\n";
  if (!os) fail(errc::sink_write_failure, "could not write LP model");
}

// Free-format MPS with the same row/column names. Binaries are declared with
// BV bounds.
inline void export_mps(const IpModel& m, std::ostream& os) {
  os << "NAME mcsp\nROWS\n N obj\n";
  for (const LinearConstraint& c : m.constraints)
    os << (c.rel == Relation::le ? " L " : " E ") << c.name << '\n';

  std::vector<std::vector<std::pair<int, int>>> by_var(m.vars.size());  // (row, coeff)
  for (int r = 0; r < static_cast<int>(m.constraints.size()); ++r)
    for (const auto& [var, coeff] : m.constraints[static_cast<std::size_t>(r)].terms)
      by_var[static_cast<std::size_t>(var)].emplace_back(r, coeff);

  os << "COLUMNS\n";
  for (std::size_t k = 0; k < m.vars.size(); ++k) {
    os << ' ' << m.vars[k].name << " obj 0.5\n";
    for (const auto& [row, coeff] : by_var[k])
      os << ' ' << m.vars[k].name << ' ' << m.constraints[static_cast<std::size_t>(row)].name
         << ' ' << coeff << '\n';
  }
  os << "RHS\n";
  for (const LinearConstraint& c : m.constraints)
    if (c.rhs != 0) os << " rhs " << c.name << ' ' << c.rhs << '\n';
  os << "BOUNDS\n";
  for (const VarDesc& v : m.vars) os << " BV bnd " << v.name << '\n';
  os << "ENDATA\n";
  if (!os) fail(errc::sink_write_failure, "could not write MPS model");
}

}  // namespace mcsp
