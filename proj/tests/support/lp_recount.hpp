#pragma once

// Minimal reader for the LP text dialect written by export_lp: recovers the
// variable and constraint counts so exports can be round-trip checked
// without the original model.

#include <istream>
#include <sstream>
#include <string>

namespace mcsp_test {

struct LpCounts {
  int variables = 0;
  int constraints = 0;
};

inline LpCounts recount_lp(std::istream& in) {
  LpCounts counts;
  std::string line;
  enum class Section { none, minimize, subject_to, binary, done } section = Section::none;
  while (std::getline(in, line)) {
    // strip leading blanks
    const std::size_t at = line.find_first_not_of(" \t");
    const std::string body = at == std::string::npos ? std::string() : line.substr(at);
    if (body == "Minimize") {
      section = Section::minimize;
    } else if (body == "Subject To") {
      section = Section::subject_to;
    } else if (body == "Binary") {
      section = Section::binary;
    } else if (body == "End") {
      section = Section::done;
    } else if (section == Section::subject_to && body.find(':') != std::string::npos) {
      ++counts.constraints;
    } else if (section == Section::binary) {
      std::istringstream tokens(body);
      std::string tok;
      while (tokens >> tok) ++counts.variables;
    }
  }
  return counts;
}

}  // namespace mcsp_test
