// Command-line front end: generate instances, run the exact solver and the
// baselines, export models for stand-alone MILP solvers, verify solution
// files they produce, and run benchmark tables.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mcsp/bench.hpp"
#include "mcsp/heuristics.hpp"
#include "mcsp/io_datagen.hpp"
#include "mcsp/ip_model.hpp"
#include "mcsp/oracle.hpp"
#include "mcsp/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

mcsp::RelatedPair load_instance(const std::string& path) {
  if (path == "-") return mcsp::read_pair(std::cin);
  return mcsp::read_pair_file(path);
}

// Writes either to a file or to stdout.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) mcsp::fail(mcsp::errc::sink_write_failure, "cannot open output file: " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void print_blocks(std::ostream& os, const char* tag, const std::vector<mcsp::Block>& blocks) {
  os << tag << ":";
  for (const mcsp::Block& b : blocks) os << ' ' << b.i << '-' << b.j;
  os << '\n';
}

void print_partition(std::ostream& os, const mcsp::CommonPartition& p) {
  os << "size: " << p.size() << '\n';
  print_blocks(os, "p", p.p_blocks);
  print_blocks(os, "q", p.q_blocks);
}

mcsp::BenchAlgos parse_algorithms(const std::string& list) {
  mcsp::BenchAlgos algos{.greedy = false, .ip = false, .oracle = false};
  std::istringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name == "greedy")
      algos.greedy = true;
    else if (name == "ip")
      algos.ip = true;
    else if (name == "oracle")
      algos.oracle = true;
    else
      mcsp::fail(mcsp::errc::format_error,
                 "unknown algorithm '" + name + "' (expected greedy, ip or oracle)");
  }
  return algos;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum common string partition: exact IP solver, greedy baseline and tools"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random related pair by seeded shuffling");
  int gen_len = 200;
  std::string gen_alphabet = "ACGT";
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--len", gen_len, "sequence length")->capture_default_str();
  gen->add_option("--alphabet", gen_alphabet, "alphabet bytes")->capture_default_str();
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "solve an instance exactly with branch and bound");
  std::string solve_instance;
  double solve_time_limit = 0.0;
  long long solve_node_limit = -1;
  bool solve_progress = false;
  std::string solve_out;
  solve->add_option("instance", solve_instance, "instance file, or - for stdin")->required();
  solve->add_option("--time-limit", solve_time_limit, "wall time limit in seconds (0 = none)");
  solve->add_option("--node-limit", solve_node_limit, "search node limit (-1 = none)");
  solve->add_flag("--progress", solve_progress, "stream primal/dual lines to stderr");
  solve->add_option("--out", solve_out, "output file (default stdout)");

  // greedy
  auto* greedy = app.add_subcommand("greedy", "run the longest-common-substring baseline");
  std::string greedy_instance;
  std::string greedy_out;
  greedy->add_option("instance", greedy_instance, "instance file, or - for stdin")->required();
  greedy->add_option("--out", greedy_out, "output file (default stdout)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive optimum for tiny instances");
  std::string oracle_instance;
  int oracle_cap = 14;
  std::string oracle_out;
  oracle->add_option("instance", oracle_instance, "instance file, or - for stdin")->required();
  oracle->add_option("--max-n", oracle_cap, "largest accepted length")->capture_default_str();
  oracle->add_option("--out", oracle_out, "output file (default stdout)");

  // export-lp
  auto* export_lp = app.add_subcommand("export-lp", "write the integer program for a solver");
  std::string export_instance;
  std::string export_out;
  bool export_mps_format = false;
  bool export_dedup = false;
  export_lp->add_option("instance", export_instance, "instance file, or - for stdin")->required();
  export_lp->add_option("--out", export_out, "output file (default stdout)");
  export_lp->add_flag("--mps", export_mps_format, "emit free-format MPS instead of LP text");
  export_lp->add_flag("--dedup-classes", export_dedup,
                      "one matching-equality row per distinct text instead of per block");

  // check-sol
  auto* check = app.add_subcommand(
      "check-sol", "verify a solver's solution file against the model and decode it");
  std::string check_instance;
  std::string check_solution;
  std::string check_out;
  check->add_option("instance", check_instance, "instance file, or - for stdin")->required();
  check->add_option("solution", check_solution, "solution file (name value lines)")->required();
  check->add_option("--out", check_out, "output file (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "run a benchmark table over instances");
  std::string bench_preset;
  std::vector<std::string> bench_files;
  std::string bench_algorithms = "greedy,ip";
  double bench_time_limit = 0.0;
  std::uint64_t bench_seed = 0;
  unsigned bench_threads = 0;
  std::string bench_format = "text";
  std::string bench_out;
  bench->add_option("--preset", bench_preset, "tiny, group1, group2 or group3");
  bench->add_option("instances", bench_files, "instance files");
  bench->add_option("--algorithms", bench_algorithms, "comma list of greedy,ip,oracle")
      ->capture_default_str();
  bench->add_option("--time-limit", bench_time_limit,
                    "per-instance limit in seconds (0 = preset default)");
  bench->add_option("--seed", bench_seed, "seed base for preset regeneration (0 = default)");
  bench->add_option("--threads", bench_threads, "parallel instances (0 = hardware)");
  bench->add_option("--format", bench_format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  bench->add_option("--out", bench_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      const mcsp::RelatedPair pair = mcsp::gen_random_pair(gen_len, gen_alphabet, gen_seed);
      OutputSink sink(gen_out);
      mcsp::write_pair(pair, sink.stream());
      return kExitOk;
    }

    if (*solve) {
      const mcsp::RelatedPair pair = load_instance(solve_instance);
      mcsp::SolveLimits limits;
      if (solve_time_limit > 0.0) limits.time_limit_s = solve_time_limit;
      limits.node_limit = solve_node_limit;
      const mcsp::SolveReport rep =
          mcsp::solve_exact(pair, limits, solve_progress ? &std::cerr : nullptr);
      OutputSink sink(solve_out);
      std::ostream& os = sink.stream();
      os << "n: " << pair.n << '\n'
         << "status: " << mcsp::to_string(rep.status) << '\n'
         << "bound: " << rep.best_bound << '\n';
      char gap[32];
      std::snprintf(gap, sizeof gap, "%.4f", rep.gap_pct);
      os << "gap_pct: " << gap << '\n'
         << "nodes: " << rep.nodes << '\n'
         << "time_s: " << rep.wall_time_s << '\n';
      print_partition(os, *rep.partition);
      return kExitOk;
    }

    if (*greedy) {
      const mcsp::RelatedPair pair = load_instance(greedy_instance);
      OutputSink sink(greedy_out);
      print_partition(sink.stream(), mcsp::greedy_partition(pair));
      return kExitOk;
    }

    if (*oracle) {
      const mcsp::RelatedPair pair = load_instance(oracle_instance);
      const mcsp::OracleResult result = mcsp::brute_force_mcsp(pair, oracle_cap);
      OutputSink sink(oracle_out);
      print_partition(sink.stream(), result.partition);
      return kExitOk;
    }

    if (*export_lp) {
      const mcsp::RelatedPair pair = load_instance(export_instance);
      const mcsp::IpModel model =
          mcsp::build_model(pair, mcsp::BuildOptions{.dedup_matching_rows = export_dedup});
      OutputSink sink(export_out);
      if (export_mps_format)
        mcsp::export_mps(model, sink.stream());
      else
        mcsp::export_lp(model, sink.stream());
      return kExitOk;
    }

    if (*check) {
      const mcsp::RelatedPair pair = load_instance(check_instance);
      const mcsp::IpModel model = mcsp::build_model(pair);
      const mcsp::Assignment a = mcsp::parse_solution_file(check_solution, model);
      OutputSink sink(check_out);
      std::ostream& os = sink.stream();
      if (!mcsp::verify_assignment(model, a)) {
        os << "status: infeasible\n";
        return kExitInvalid;
      }
      const mcsp::CommonPartition p = mcsp::decode_solution(model, a);
      os << "status: feasible\n"
         << "valid_partition: " << (mcsp::validate_common_partition(pair, p) ? "yes" : "no")
         << '\n';
      print_partition(os, p);
      return kExitOk;
    }

    if (*bench) {
      std::vector<mcsp::BenchInstance> instances;
      mcsp::BenchOptions options;
      if (!bench_preset.empty()) {
        mcsp::BenchPreset preset = mcsp::make_preset(bench_preset, bench_seed);
        instances = std::move(preset.instances);
        options = preset.options;
      }
      for (const std::string& path : bench_files) {
        mcsp::BenchInstance inst;
        inst.id = path;
        inst.path = path;
        instances.push_back(std::move(inst));
      }
      if (instances.empty()) {
        std::cerr << "bench: nothing to run; give --preset or instance files\n";
        return kExitUsage;
      }
      // an explicit --algorithms wins over the preset's set
      if (bench_preset.empty() || bench->count("--algorithms") > 0)
        options.algos = parse_algorithms(bench_algorithms);
      if (bench_time_limit > 0.0) options.time_limit_s = bench_time_limit;
      options.threads = bench_threads;

      const mcsp::BenchReport report = mcsp::run_benchmark(instances, options);
      OutputSink sink(bench_out);
      if (bench_format == "csv")
        mcsp::render_csv(report, sink.stream());
      else
        mcsp::render_text(report, sink.stream());
      return kExitOk;
    }
  } catch (const mcsp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}
