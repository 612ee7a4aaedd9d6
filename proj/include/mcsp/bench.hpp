#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "mcsp/heuristics.hpp"
#include "mcsp/io_datagen.hpp"
#include "mcsp/oracle.hpp"
#include "mcsp/solver.hpp"
#include "mcsp/strings_core.hpp"

namespace mcsp {

// Positive when the candidate found a smaller partition than the baseline.
inline double improvement_pct(int baseline, int candidate) {
  if (baseline <= 0) fail(errc::zero_baseline, "baseline size must be positive");
  return 100.0 * (baseline - candidate) / baseline;
}

struct BenchAlgos {
  bool greedy = true;
  bool ip = true;
  bool oracle = false;
};

struct BenchInstance {
  std::string id;
  std::string path;                 // read from this file when non-empty
  std::optional<RelatedPair> pair;  // otherwise use this pre-built pair
  long long seed = -1;              // recorded for reproducibility, -1 = n/a
};

struct BenchOptions {
  BenchAlgos algos;
  double time_limit_s = 900.0;
  long long node_limit = -1;
  int oracle_cap = 14;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct BenchRow {
  std::string id;
  int n = 0;
  long long seed = -1;
  int greedy_size = -1;
  double greedy_s = 0.0;
  int ip_size = -1;
  std::string ip_status;
  int dual = -1;
  double gap_pct = 0.0;
  double ip_s = 0.0;
  int oracle_size = -1;
  double oracle_s = 0.0;
  std::string error;
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

namespace detail {

inline double seconds_between(std::chrono::steady_clock::time_point a,
                              std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

inline void append_error(BenchRow& row, std::string_view stage, const std::exception& e) {
  if (!row.error.empty()) row.error += "; ";
  row.error += std::string(stage) + ": " + e.what();
}

inline BenchRow run_one(const BenchInstance& inst, const BenchOptions& opts) {
  using clock_type = std::chrono::steady_clock;
  BenchRow row;
  row.id = inst.id;
  row.seed = inst.seed;

  std::optional<RelatedPair> pair;
  try {
    pair = inst.path.empty() ? inst.pair : std::optional<RelatedPair>(read_pair_file(inst.path));
    if (!pair) fail(errc::format_error, "instance has neither a file nor a generated pair");
    row.n = pair->n;
  } catch (const std::exception& e) {
    append_error(row, "load", e);
    return row;
  }

  if (opts.algos.greedy) {
    try {
      const auto t0 = clock_type::now();
      row.greedy_size = greedy_partition(*pair).size();
      row.greedy_s = seconds_between(t0, clock_type::now());
    } catch (const std::exception& e) {
      append_error(row, "greedy", e);
    }
  }
  if (opts.algos.ip) {
    try {
      const auto t0 = clock_type::now();
      const SolveReport rep = solve_exact(
          *pair, SolveLimits{.time_limit_s = opts.time_limit_s, .node_limit = opts.node_limit});
      row.ip_s = seconds_between(t0, clock_type::now());
      row.ip_size = rep.incumbent_size;
      row.ip_status = to_string(rep.status);
      row.dual = rep.best_bound;
      row.gap_pct = rep.gap_pct;
    } catch (const std::exception& e) {
      append_error(row, "ip", e);
    }
  }
  if (opts.algos.oracle) {
    try {
      const auto t0 = clock_type::now();
      row.oracle_size = brute_force_mcsp(*pair, opts.oracle_cap).size;
      row.oracle_s = seconds_between(t0, clock_type::now());
    } catch (const std::exception& e) {
      append_error(row, "oracle", e);
    }
  }
  return row;
}

inline std::string fmt(double value, int decimals) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

}  // namespace detail

// One solver per instance, instances in parallel; rows come back in input
// order and per-instance failures land in the row instead of aborting.
inline BenchReport run_benchmark(const std::vector<BenchInstance>& instances,
                                 const BenchOptions& opts) {
  BenchReport report;
  report.rows.resize(instances.size());
  unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  if (threads < 1) threads = 1;
  if (threads > instances.size()) threads = static_cast<unsigned>(instances.size());

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= instances.size()) return;
      report.rows[k] = detail::run_one(instances[k], opts);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return report;
}

inline const std::vector<std::string>& bench_columns() {
  static const std::vector<std::string> cols = {
      "instance", "n",      "seed", "greedy",  "t_greedy_s", "ip",    "ip_status",
      "dual",     "gap_pct", "t_ip_s", "oracle", "t_oracle_s", "impr_pct", "error"};
  return cols;
}

// The same cell strings feed both the text and the CSV renderer.
inline std::vector<std::string> bench_cells(const BenchRow& row) {
  const auto opt_int = [](int v) { return v < 0 ? std::string("-") : std::to_string(v); };
  std::vector<std::string> cells;
  cells.push_back(row.id);
  cells.push_back(std::to_string(row.n));
  cells.push_back(row.seed < 0 ? "-" : std::to_string(row.seed));
  cells.push_back(opt_int(row.greedy_size));
  cells.push_back(row.greedy_size < 0 ? "-" : detail::fmt(row.greedy_s, 3));
  cells.push_back(opt_int(row.ip_size));
  cells.push_back(row.ip_status.empty() ? "-" : row.ip_status);
  cells.push_back(opt_int(row.dual));
  cells.push_back(row.ip_size < 0 ? "-" : detail::fmt(row.gap_pct, 4));
  cells.push_back(row.ip_size < 0 ? "-" : detail::fmt(row.ip_s, 3));
  cells.push_back(opt_int(row.oracle_size));
  cells.push_back(row.oracle_size < 0 ? "-" : detail::fmt(row.oracle_s, 3));
  cells.push_back(row.greedy_size > 0 && row.ip_size >= 0
                      ? detail::fmt(improvement_pct(row.greedy_size, row.ip_size), 4)
                      : "-");
  cells.push_back(row.error.empty() ? "-" : row.error);
  return cells;
}

inline void render_text(const BenchReport& report, std::ostream& os) {
  std::vector<std::vector<std::string>> table;
  table.push_back(bench_columns());
  for (const BenchRow& row : report.rows) table.push_back(bench_cells(row));

  std::vector<std::size_t> width(table[0].size(), 0);
  for (const auto& line : table)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  for (const auto& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) os << "  ";
      os << line[c] << std::string(width[c] - line[c].size(), ' ');
    }
    os << '\n';
  }
}

inline void render_csv(const BenchReport& report, std::ostream& os) {
  const auto emit = [&os](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) os << ',';
      const std::string& cell = cells[c];
      if (cell.find_first_of(",\"\r\n") == std::string::npos) {
        os << cell;
      } else {
        os << '"';
        for (char ch : cell) {
          if (ch == '"') os << '"';
          os << ch;
        }
        os << '"';
      }
    }
    os << "\r\n";
  };
  emit(bench_columns());
  for (const BenchRow& row : report.rows) emit(bench_cells(row));
}

// Named instance sets: "tiny" is the desk-scale sanity preset; the numbered
// groups regenerate DNA pairs at 200/400/600 bases with the matching
// 15/30/60 minute limits.
struct BenchPreset {
  std::vector<BenchInstance> instances;
  BenchOptions options;
};

inline BenchPreset make_preset(std::string_view name, std::uint64_t seed_base = 0) {
  const auto build = [](std::string_view tag, int count, int len, std::string_view alphabet,
                        std::uint64_t base, double time_limit, BenchAlgos algos) {
    BenchPreset preset;
    preset.options.algos = algos;
    preset.options.time_limit_s = time_limit;
    for (int k = 0; k < count; ++k) {
      BenchInstance inst;
      char id[32];
      std::snprintf(id, sizeof id, "%s-%02d", std::string(tag).c_str(), k + 1);
      inst.id = id;
      inst.seed = static_cast<long long>(base) + k;
      inst.pair = gen_random_pair(len, alphabet, base + static_cast<std::uint64_t>(k));
      preset.instances.push_back(std::move(inst));
    }
    return preset;
  };

  if (name == "tiny") {
    BenchPreset preset = build("tiny", 20, 4, "abcd", seed_base ? seed_base : 7000, 60.0,
                               BenchAlgos{.greedy = true, .ip = true, .oracle = true});
    // lengths cycle through 4..12
    for (std::size_t k = 0; k < preset.instances.size(); ++k) {
      const std::uint64_t seed = static_cast<std::uint64_t>(preset.instances[k].seed);
      preset.instances[k].pair = gen_random_pair(4 + static_cast<int>(k % 9), "abcd", seed);
    }
    return preset;
  }
  if (name == "group1")
    return build("group1", 10, 200, "ACGT", seed_base ? seed_base : 42, 900.0, BenchAlgos{});
  if (name == "group2")
    return build("group2", 10, 400, "ACGT", seed_base ? seed_base : 142, 1800.0, BenchAlgos{});
  if (name == "group3")
    return build("group3", 10, 600, "ACGT", seed_base ? seed_base : 242, 3600.0, BenchAlgos{});
  fail(errc::format_error, "unknown preset: " + std::string(name) +
                               " (expected tiny, group1, group2 or group3)");
}

}  // namespace mcsp
