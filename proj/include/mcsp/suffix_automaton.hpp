#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace mcsp {

// Suffix automaton over a byte string: the minimal DFA whose language is the
// set of substrings of the indexed text. Built online in O(n) states;
// transitions are stored as small sorted vectors (alphabets here are tiny).
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(std::string_view text) {
    states_.reserve(2 * text.size() + 2);
    states_.push_back(State{});  // root
    for (unsigned char c : text) extend(c);
  }

  // Length of the longest prefix of s[from..] that occurs in the text.
  int longest_prefix_match(std::string_view s, std::size_t from) const {
    int state = 0;
    int len = 0;
    for (std::size_t k = from; k < s.size(); ++k) {
      const int next = step(state, static_cast<unsigned char>(s[k]));
      if (next < 0) break;
      state = next;
      ++len;
    }
    return len;
  }

  bool contains(std::string_view s) const {
    return longest_prefix_match(s, 0) == static_cast<int>(s.size());
  }

 private:
  struct State {
    int len = 0;
    int link = -1;
    std::vector<std::pair<unsigned char, int>> next;  // sorted by byte
  };

  int step(int state, unsigned char c) const {
    for (const auto& [b, to] : states_[state].next)
      if (b == c) return to;
    return -1;
  }

  void set_step(int state, unsigned char c, int to) {
    auto& next = states_[state].next;
    for (auto& [b, t] : next) {
      if (b == c) {
        t = to;
        return;
      }
    }
    next.emplace_back(c, to);
  }

  void extend(unsigned char c) {
    const int cur = static_cast<int>(states_.size());
    states_.push_back(State{});
    states_[cur].len = states_[last_].len + 1;
    int p = last_;
    while (p != -1 && step(p, c) < 0) {
      set_step(p, c, cur);
      p = states_[p].link;
    }
    if (p == -1) {
      states_[cur].link = 0;
    } else {
      const int q = step(p, c);
      if (states_[p].len + 1 == states_[q].len) {
        states_[cur].link = q;
      } else {
        const int clone = static_cast<int>(states_.size());
        states_.push_back(states_[q]);
        states_[clone].len = states_[p].len + 1;
        while (p != -1 && step(p, c) == q) {
          set_step(p, c, clone);
          p = states_[p].link;
        }
        states_[q].link = clone;
        states_[cur].link = clone;
      }
    }
    last_ = cur;
  }

  std::vector<State> states_;
  int last_ = 0;
};

}  // namespace mcsp
