#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mcsp/ip_model.hpp"
#include "mcsp/strings_core.hpp"

namespace mcsp {

// Generator fixed across releases: mt19937_64 with hand-rolled rejection
// sampling, since the standard distributions are not bit-portable.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // accept only the largest multiple of bound to stay unbiased
  const std::uint64_t limit = (std::numeric_limits<std::uint64_t>::max() / bound) * bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

inline void fisher_yates_shuffle(std::string& s, Rng& rng) {
  for (std::size_t i = s.size(); i > 1; --i)
    std::swap(s[i - 1], s[static_cast<std::size_t>(uniform_below(rng, i))]);
}

// Random instance: x is drawn i.i.d. uniform over the alphabet, y is a
// uniform random permutation of x from the same seeded stream, so the pair
// is related by construction and a fixed seed reproduces it byte for byte.
inline RelatedPair gen_random_pair(int length, std::string_view alphabet, std::uint64_t seed) {
  if (length < 1) fail(errc::zero_length, "length must be at least 1");
  std::string canon(alphabet);
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  if (canon.empty()) fail(errc::empty_alphabet, "alphabet must be non-empty");

  Rng rng(seed);
  std::string x;
  x.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k)
    x.push_back(canon[static_cast<std::size_t>(uniform_below(rng, canon.size()))]);
  std::string y = x;
  fisher_yates_shuffle(y, rng);
  return check_related(x, y);
}

namespace detail {

inline std::vector<std::string> split_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace detail

// Instance file format: two ASCII lines, x then y, LF endings.
inline RelatedPair read_pair(std::istream& in) {
  std::vector<std::string> non_empty;
  for (std::string& line : detail::split_lines(in))
    if (!line.empty()) non_empty.push_back(std::move(line));
  if (non_empty.size() != 2)
    fail(errc::format_error, "expected exactly two non-empty lines, found " +
                                 std::to_string(non_empty.size()));
  return check_related(non_empty[0], non_empty[1]);
}

inline RelatedPair read_pair_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::format_error, "cannot open instance file: " + path);
  return read_pair(in);
}

inline void write_pair(const RelatedPair& pair, std::ostream& out) {
  out << pair.x << '\n' << pair.y << '\n';
  if (!out) fail(errc::sink_write_failure, "could not write instance");
}

// Solution files are "name value" lines as dumped by stand-alone MILP
// solvers: '#' comment lines and blanks are skipped, trailing text after the
// value is ignored, and unlisted variables default to 0. Values must be
// within 1e-6 of 0 or 1.
inline Assignment parse_solution_file(std::istream& in, const IpModel& model) {
  std::unordered_map<std::string, int> index;
  for (std::size_t k = 0; k < model.vars.size(); ++k)
    index.emplace(model.vars[k].name, static_cast<int>(k));

  Assignment a;
  a.values.assign(model.vars.size(), 0);
  int line_no = 0;
  for (const std::string& line : detail::split_lines(in)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string name;
    if (!(tokens >> name) || name.front() == '#') continue;
    const auto it = index.find(name);
    if (it == index.end())
      fail(errc::unknown_variable, "line " + std::to_string(line_no) + ": no variable named '" +
                                       name + "' in the model");
    double value = 0.0;
    if (!(tokens >> value))
      fail(errc::format_error,
           "line " + std::to_string(line_no) + ": expected a value after '" + name + "'");
    if (std::fabs(value) <= 1e-6)
      a.values[static_cast<std::size_t>(it->second)] = 0;
    else if (std::fabs(value - 1.0) <= 1e-6)
      a.values[static_cast<std::size_t>(it->second)] = 1;
    else
      fail(errc::non_binary_value, "line " + std::to_string(line_no) + ": value " +
                                       std::to_string(value) + " of '" + name +
                                       "' is not 0 or 1");
  }
  return a;
}

inline Assignment parse_solution_file(const std::string& path, const IpModel& model) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::format_error, "cannot open solution file: " + path);
  return parse_solution_file(in, model);
}

}  // namespace mcsp
