#pragma once

#include <stdexcept>
#include <string>

namespace mcsp {

enum class errc {
  length_mismatch,
  multiset_mismatch,
  empty_input,
  out_of_bounds,
  vertex_out_of_range,
  graph_pair_mismatch,
  sink_write_failure,
  missing_variable,
  infeasible_assignment,
  instance_too_large,
  empty_alphabet,
  zero_length,
  format_error,
  unknown_variable,
  non_binary_value,
  zero_baseline,
  both_zero,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::length_mismatch: return "length_mismatch";
    case errc::multiset_mismatch: return "multiset_mismatch";
    case errc::empty_input: return "empty_input";
    case errc::out_of_bounds: return "out_of_bounds";
    case errc::vertex_out_of_range: return "vertex_out_of_range";
    case errc::graph_pair_mismatch: return "graph_pair_mismatch";
    case errc::sink_write_failure: return "sink_write_failure";
    case errc::missing_variable: return "missing_variable";
    case errc::infeasible_assignment: return "infeasible_assignment";
    case errc::instance_too_large: return "instance_too_large";
    case errc::empty_alphabet: return "empty_alphabet";
    case errc::zero_length: return "zero_length";
    case errc::format_error: return "format_error";
    case errc::unknown_variable: return "unknown_variable";
    case errc::non_binary_value: return "non_binary_value";
    case errc::zero_baseline: return "zero_baseline";
    case errc::both_zero: return "both_zero";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace mcsp
