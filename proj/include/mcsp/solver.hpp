#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mcsp/csg.hpp"
#include "mcsp/heuristics.hpp"
#include "mcsp/strings_core.hpp"

namespace mcsp {

enum class SolveStatus { optimal, time_limit, infeasible };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::time_limit: return "time_limit";
    case SolveStatus::infeasible: return "infeasible";
  }
  return "unknown";
}

struct SolveLimits {
  double time_limit_s = std::numeric_limits<double>::infinity();
  long long node_limit = -1;  // negative means unlimited
};

struct TracePoint {
  double t_s = 0.0;
  int size = 0;
};

struct SolveReport {
  int incumbent_size = 0;  // primal: best feasible partition size
  int best_bound = 0;      // dual: best proven lower bound
  double gap_pct = 0.0;
  SolveStatus status = SolveStatus::optimal;
  long long nodes = 0;
  double wall_time_s = 0.0;
  std::optional<CommonPartition> partition;
  std::vector<TracePoint> trace;  // incumbent improvements, non-increasing
};

// Relative primal/dual gap as a percentage: 100 * |p - d| / min(|d|, |p|).
inline double compute_gap(int primal, int dual) {
  if (primal == 0 && dual == 0) fail(errc::both_zero, "gap undefined when primal = dual = 0");
  if (primal == dual) return 0.0;
  const double lo = std::min(std::abs(primal), std::abs(dual));
  return 100.0 * std::abs(primal - dual) / lo;
}

namespace detail {

// sp[v] = fewest edge blocks that tile positions [v, n-1]; sp[n] = 0.
// Always finite: singletons are edges. sp[0] lower-bounds any common
// partition size since its own tiling is one candidate.
inline std::vector<int> min_blocks_suffix(const CommonSubstringGraph& g) {
  std::vector<int> sp(static_cast<std::size_t>(g.n) + 1, std::numeric_limits<int>::max() / 2);
  sp[static_cast<std::size_t>(g.n)] = 0;
  for (int v = g.n - 1; v >= 0; --v)
    for (int e : g.starts_at[static_cast<std::size_t>(v)])
      sp[static_cast<std::size_t>(v)] =
          std::min(sp[static_cast<std::size_t>(v)],
                   1 + sp[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].j) + 1]);
  return sp;
}

// Depth-first branch and bound over x-side factorizations. The x tiling is
// the search spine; the y side is a placement subproblem: a partial choice
// survives iff its piece multiset still packs disjointly into y (uncovered
// gaps are always fillable by singletons), and a complete x tiling is
// feasible iff y tiles into exactly that multiset (zero slack). Both
// questions are the same memoized routine.
class BnbSolver {
 public:
  BnbSolver(const RelatedPair& pair, SolveLimits limits, std::ostream* progress)
      : pair_(pair),
        limits_(limits),
        progress_(progress),
        n_(pair.n),
        g1_(build_graph(pair, kIdX)),
        g2_(build_graph(pair, kIdY)) {}

  SolveReport run() {
    start_ = clock_type::now();
    prepare();

    CommonPartition greedy = greedy_partition(pair_);
    incumbent_size_ = greedy.size();
    incumbent_ = std::move(greedy);
    trace_.push_back({elapsed(), incumbent_size_});
    emit_progress();

    levels_.assign(static_cast<std::size_t>(n_) + 1, Level{});
    depth_ = 0;
    if (incumbent_size_ > root_bound_) dfs(0, 0);

    SolveReport rep;
    rep.incumbent_size = incumbent_size_;
    rep.nodes = nodes_;
    rep.wall_time_s = elapsed();
    rep.partition = std::move(incumbent_);
    rep.trace = std::move(trace_);
    if (!stopped_ && unresolved_min_ >= incumbent_size_) {
      rep.status = SolveStatus::optimal;
      rep.best_bound = incumbent_size_;
    } else {
      // either a limit fired or some leaf was left undecided by the internal
      // tiling budget; report the best proven bound
      rep.status = SolveStatus::time_limit;
      int open = std::min(unresolved_min_, stopped_ ? frontier_at_stop_ : kInf);
      rep.best_bound = std::max(root_bound_, std::min(incumbent_size_, open));
    }
    rep.gap_pct = compute_gap(rep.incumbent_size, rep.best_bound);
    return rep;
  }

 private:
  using clock_type = std::chrono::steady_clock;

  struct Cand {
    int j = 0;    // edge end position
    int cls = 0;  // substring class
  };
  struct YCand {
    int cls = 0;
    int len = 0;
  };
  struct Level {
    int p = 0;
    int used = 0;
    std::vector<std::uint8_t> done;  // candidates fully explored or refuted
  };

  static constexpr int kInf = std::numeric_limits<int>::max() / 2;
  static constexpr long long kPackBudget = 2'000;
  static constexpr long long kExactPackBudget = 200'000;
  static constexpr std::size_t kMemoCap = 500'000;
  enum : std::int8_t { kFail = 0, kSuccess = 1, kUnknown = 2 };

  struct KeyHash {
    using is_transparent = void;
    std::size_t operator()(std::u32string_view key) const {
      std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the code units
      for (char32_t c : key) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
    std::size_t operator()(const std::u32string& key) const {
      return (*this)(std::u32string_view(key));
    }
  };

  void prepare() {
    std::unordered_map<std::string, int> class_of;
    const auto class_id = [&](std::string_view text) {
      const auto [it, inserted] =
          class_of.emplace(std::string(text), static_cast<int>(class_of.size()));
      return it->second;
    };

    x_cls_.reserve(g1_.edges.size());
    for (const Block& b : g1_.edges) x_cls_.push_back(class_id(substring_of(pair_, b)));
    std::vector<int> y_cls;
    y_cls.reserve(g2_.edges.size());
    for (const Block& b : g2_.edges) y_cls.push_back(class_id(substring_of(pair_, b)));

    const std::size_t num_classes = class_of.size();
    chosen_.assign(num_classes, 0);

    cls_len_.assign(num_classes, 0);
    for (std::size_t e = 0; e < g1_.edges.size(); ++e)
      cls_len_[static_cast<std::size_t>(x_cls_[e])] = g1_.edges[e].length();
    for (std::size_t e = 0; e < g2_.edges.size(); ++e)
      cls_len_[static_cast<std::size_t>(y_cls[e])] = g2_.edges[e].length();

    // occurrence starts per class in y, ascending
    y_occ_.resize(num_classes);
    for (std::size_t e = 0; e < g2_.edges.size(); ++e)
      y_occ_[static_cast<std::size_t>(y_cls[e])].push_back(g2_.edges[e].i);

    // per class, how many pairwise-disjoint occurrences y can host at most;
    // a running choice exceeding this can never pack (equal-length intervals,
    // so leftmost-first selection is optimal)
    e2_cap_.assign(num_classes, 0);
    std::vector<int> next_free(num_classes, 0);
    for (std::size_t e = 0; e < g2_.edges.size(); ++e) {
      const int cls = y_cls[e];
      const Block& b = g2_.edges[e];
      if (b.i >= next_free[static_cast<std::size_t>(cls)]) {
        ++e2_cap_[static_cast<std::size_t>(cls)];
        next_free[static_cast<std::size_t>(cls)] = b.j + 1;
      }
    }

    y_covered_.assign(static_cast<std::size_t>(n_), false);
    witness_missing_ = 0;

    // x candidates per start, longest first
    cand_at_.resize(static_cast<std::size_t>(n_));
    sp_x_ = min_blocks_suffix(g1_);
    for (int p = 0; p < n_; ++p) {
      auto& cands = cand_at_[static_cast<std::size_t>(p)];
      for (int e : g1_.starts_at[static_cast<std::size_t>(p)])
        cands.push_back(Cand{g1_.edges[static_cast<std::size_t>(e)].j,
                             x_cls_[static_cast<std::size_t>(e)]});
      std::sort(cands.begin(), cands.end(),
                [](const Cand& a, const Cand& b) { return a.j > b.j; });
    }

    // y placements per start, longest first
    y_at_.resize(static_cast<std::size_t>(n_));
    for (int q = 0; q < n_; ++q) {
      auto& cands = y_at_[static_cast<std::size_t>(q)];
      const auto& edges = g2_.starts_at[static_cast<std::size_t>(q)];
      for (auto it = edges.rbegin(); it != edges.rend(); ++it)
        cands.push_back(YCand{y_cls[static_cast<std::size_t>(*it)],
                              g2_.edges[static_cast<std::size_t>(*it)].length()});
    }

    root_bound_ = std::max(sp_x_[0], min_blocks_suffix(g2_)[0]);
  }

  double elapsed() const {
    return std::chrono::duration<double>(clock_type::now() - start_).count();
  }

  void stop() {
    if (stopped_) return;
    stopped_ = true;
    frontier_at_stop_ = depth_ == 0 ? sp_x_[0] : frontier_scan();
  }

  // Lower bound over everything not yet fully explored: every still-open
  // child subtree along the active path is bounded by blocks used at its
  // level, one for the child block, and the best tail from its end.
  int frontier_scan() const {
    int best = kInf;
    for (std::size_t d = 0; d < depth_; ++d) {
      const Level& l = levels_[d];
      const auto& cands = cand_at_[static_cast<std::size_t>(l.p)];
      for (std::size_t k = 0; k < cands.size(); ++k)
        if (!l.done[k])
          best = std::min(best, l.used + 1 + sp_x_[static_cast<std::size_t>(cands[k].j) + 1]);
    }
    return best;
  }

  int live_dual() const {
    return std::max(root_bound_, std::min(incumbent_size_, frontier_scan()));
  }

  void emit_progress() {
    if (!progress_) return;
    const double t = elapsed();
    const int dual = depth_ == 0 ? root_bound_ : live_dual();
    char line[96];
    std::snprintf(line, sizeof line, "t=%.1f primal=%d dual=%d gap=%.3f%%\n", t, incumbent_size_,
                  dual, compute_gap(incumbent_size_, dual));
    *progress_ << line << std::flush;
    next_progress_ = t + 1.0;
  }

  void check_limits() {
    if (stopped_) return;
    const double t = elapsed();
    if (t >= limits_.time_limit_s) {
      stop();
      return;
    }
    if (progress_ && t >= next_progress_) emit_progress();
  }

  void count_step() {
    if ((++steps_ & 0x1fff) == 0) check_limits();
  }

  void inc_class(int cls) {
    if (chosen_[static_cast<std::size_t>(cls)]++ == 0)
      nonzero_.insert(std::lower_bound(nonzero_.begin(), nonzero_.end(), cls), cls);
  }

  void dec_class(int cls) {
    if (--chosen_[static_cast<std::size_t>(cls)] == 0)
      nonzero_.erase(std::lower_bound(nonzero_.begin(), nonzero_.end(), cls));
  }

  // builds into a reused buffer; valid until the next call
  std::u32string_view memo_key(int q) {
    key_buf_.clear();
    key_buf_.push_back(static_cast<char32_t>(q));
    for (int cls : nonzero_) {
      key_buf_.push_back(static_cast<char32_t>(cls));
      key_buf_.push_back(static_cast<char32_t>(chosen_[static_cast<std::size_t>(cls)]));
    }
    return key_buf_;
  }

  // Can the chosen piece multiset be placed disjointly into y[q..]?
  // `remaining` is the total length of unplaced pieces; positions not used by
  // pieces are slack, coverable by singleton blocks. With zero slack this is
  // exact tiling. Results are memoized by (q, residual multiset); unknown is
  // returned when the step budget or a limit runs out, and only definite
  // answers are cached. When `witness` is given, success paths re-walk
  // through cached subresults so the placed blocks can be collected.
  std::int8_t pack(int q, int remaining, long long& budget, std::vector<Block>* witness) {
    if (remaining == 0) return kSuccess;
    if (q >= n_) return kFail;
    count_step();
    if (stopped_) return kUnknown;
    if (--budget < 0) return kUnknown;

    if (const auto it = memo_.find(memo_key(q)); it != memo_.end()) {
      if (it->second == kFail || !witness) return it->second;
    }

    const int slack = (n_ - q) - remaining;
    std::int8_t result = kFail;
    bool any_unknown = false;

    for (const YCand& cand : y_at_[static_cast<std::size_t>(q)]) {
      if (cand.len > remaining || chosen_[static_cast<std::size_t>(cand.cls)] == 0) continue;
      dec_class(cand.cls);
      const std::int8_t r = pack(q + cand.len, remaining - cand.len, budget, witness);
      inc_class(cand.cls);
      if (r == kSuccess) {
        if (witness) witness->push_back(Block{kIdY, q, q + cand.len - 1});
        result = kSuccess;
        break;
      }
      if (r == kUnknown) any_unknown = true;
    }
    if (result != kSuccess && slack > 0) {
      const std::int8_t r = pack(q + 1, remaining, budget, witness);
      if (r == kSuccess)
        result = kSuccess;
      else if (r == kUnknown)
        any_unknown = true;
    }

    if (result == kUnknown || (result == kFail && any_unknown)) return kUnknown;
    // residual is restored here, so the key can be rebuilt for the insert
    if (memo_.size() < kMemoCap) memo_.emplace(std::u32string(memo_key(q)), result);
    return result;
  }

  void improve_incumbent(int used, const std::vector<Block>& y_witness) {
    incumbent_size_ = used;
    CommonPartition p;
    p.p_blocks = x_blocks_;
    p.q_blocks = y_witness;
    std::sort(p.q_blocks.begin(), p.q_blocks.end());
    incumbent_ = std::move(p);
    trace_.push_back({elapsed(), incumbent_size_});
    emit_progress();
  }

  // First-fit extension of the running y packing: place the class text at
  // its earliest occurrence not touching already placed pieces.
  bool can_place_witness(int cls) const {
    const int len = cls_len_[static_cast<std::size_t>(cls)];
    for (int start : y_occ_[static_cast<std::size_t>(cls)]) {
      bool free = true;
      for (int v = start; v < start + len; ++v)
        if (y_covered_[static_cast<std::size_t>(v)]) {
          free = false;
          break;
        }
      if (free) return true;
    }
    return false;
  }

  bool place_witness(int cls) {
    const int len = cls_len_[static_cast<std::size_t>(cls)];
    for (int start : y_occ_[static_cast<std::size_t>(cls)]) {
      bool free = true;
      for (int v = start; v < start + len; ++v)
        if (y_covered_[static_cast<std::size_t>(v)]) {
          free = false;
          break;
        }
      if (!free) continue;
      for (int v = start; v < start + len; ++v) y_covered_[static_cast<std::size_t>(v)] = true;
      y_witness_.push_back(Block{kIdY, start, start + len - 1});
      return true;
    }
    return false;
  }

  void remove_witness() {
    const Block b = y_witness_.back();
    y_witness_.pop_back();
    for (int v = b.i; v <= b.j; ++v) y_covered_[static_cast<std::size_t>(v)] = false;
  }

  // A prefix whose pieces all sit in the running y packing extends to a
  // feasible partition by cutting the rest of x into singletons: the y
  // positions the packing leaves uncovered hold exactly the letters of
  // x[p..]. Installs that completion when it beats the incumbent.
  void complete_from_witness(int p, int used) {
    const int value = used + (n_ - p);
    if (value >= incumbent_size_) return;

    std::vector<Block> x_full = x_blocks_;
    for (int v = p; v < n_; ++v) x_full.push_back(Block{kIdX, v, v});
    std::vector<Block> y_full = y_witness_;
    for (int v = 0; v < n_; ++v)
      if (!y_covered_[static_cast<std::size_t>(v)]) y_full.push_back(Block{kIdY, v, v});

    std::swap(x_blocks_, x_full);
    improve_incumbent(value, y_full);
    std::swap(x_blocks_, x_full);
  }

  void dfs(int p, int used) {
    if (stopped_) return;
    ++nodes_;
    if (limits_.node_limit >= 0 && nodes_ > limits_.node_limit) {
      stop();
      return;
    }
    check_limits();
    if (stopped_) return;

    if (p == n_) {
      // complete x factorization: feasible right away when the running
      // packing is intact (zero slack leaves no uncovered position); else an
      // exact tiling of y decides
      if (used >= incumbent_size_) return;
      if (witness_missing_ == 0) {
        complete_from_witness(p, used);
        return;
      }
      std::vector<Block> witness;
      long long budget = kExactPackBudget;
      const std::int8_t r = pack(0, n_, budget, &witness);
      if (r == kSuccess)
        improve_incumbent(used, witness);
      else if (r == kUnknown)
        unresolved_min_ = std::min(unresolved_min_, used);  // leaf left undecided
      return;
    }

    // dominance: the subtree depends only on (p, chosen multiset), and the
    // incumbent only tightens, so an exhausted state never pays off twice
    if (exhausted_.find(memo_key(p)) != exhausted_.end()) return;

    const auto& cands = cand_at_[static_cast<std::size_t>(p)];
    Level& level = levels_[depth_];
    level.p = p;
    level.used = used;
    level.done.assign(cands.size(), 0);
    ++depth_;

    const auto explore = [&](std::size_t idx) {
      const Cand& cand = cands[idx];
      if (used + 1 + sp_x_[static_cast<std::size_t>(cand.j) + 1] >= incumbent_size_ ||
          chosen_[static_cast<std::size_t>(cand.cls)] + 1 >
              e2_cap_[static_cast<std::size_t>(cand.cls)]) {
        level.done[idx] = 1;  // refuted, nothing better below
        return;
      }

      inc_class(cand.cls);
      x_blocks_.push_back(Block{kIdX, p, cand.j});
      const bool witnessed = witness_missing_ == 0 && place_witness(cand.cls);
      if (!witnessed) ++witness_missing_;

      if (witnessed) {
        // packable for sure; a singleton completion is available immediately
        complete_from_witness(cand.j + 1, used + 1);
        dfs(cand.j + 1, used + 1);
      } else {
        long long budget = kPackBudget;
        // chosen pieces total p + block length == next position
        if (pack(0, cand.j + 1, budget, nullptr) != kFail) dfs(cand.j + 1, used + 1);
      }

      if (witnessed)
        remove_witness();
      else
        --witness_missing_;
      x_blocks_.pop_back();
      dec_class(cand.cls);
      if (!stopped_) level.done[idx] = 1;
    };

    // children whose class still fits the running y packing first: those
    // dives stay feasible all the way down
    if (witness_missing_ == 0) {
      for (std::size_t idx = 0; idx < cands.size() && !stopped_; ++idx)
        if (can_place_witness(cands[idx].cls)) explore(idx);
    }
    for (std::size_t idx = 0; idx < cands.size() && !stopped_; ++idx)
      if (!level.done[idx]) explore(idx);

    --depth_;
    if (!stopped_ && exhausted_.size() < kMemoCap)
      exhausted_.emplace(std::u32string(memo_key(p)));
  }

  RelatedPair pair_;
  SolveLimits limits_;
  std::ostream* progress_ = nullptr;
  int n_ = 0;
  CommonSubstringGraph g1_;
  CommonSubstringGraph g2_;

  std::vector<int> x_cls_;
  std::vector<std::vector<Cand>> cand_at_;
  std::vector<std::vector<YCand>> y_at_;
  std::vector<int> sp_x_;
  std::vector<int> e2_cap_;
  std::vector<int> cls_len_;
  std::vector<std::vector<int>> y_occ_;
  int root_bound_ = 1;

  std::vector<bool> y_covered_;
  std::vector<Block> y_witness_;
  int witness_missing_ = 0;

  std::vector<int> chosen_;
  std::vector<int> nonzero_;  // classes with chosen_ > 0, ascending
  std::vector<Block> x_blocks_;
  std::u32string key_buf_;
  std::unordered_map<std::u32string, std::int8_t, KeyHash, std::equal_to<>> memo_;
  std::unordered_set<std::u32string, KeyHash, std::equal_to<>> exhausted_;
  std::vector<Level> levels_;
  std::size_t depth_ = 0;

  int incumbent_size_ = 0;
  CommonPartition incumbent_;
  std::vector<TracePoint> trace_;
  long long nodes_ = 0;
  unsigned long long steps_ = 0;
  bool stopped_ = false;
  int frontier_at_stop_ = kInf;
  int unresolved_min_ = kInf;
  double next_progress_ = 0.0;
  clock_type::time_point start_;
};

}  // namespace detail

// Exact solver: depth-first branch and bound over the leftmost uncovered
// position of x, longest blocks first. The incumbent starts from the greedy
// partition, so the primal value never exceeds the greedy size; limits end
// the search with status time_limit and the best proven bound.
inline SolveReport solve_exact(const RelatedPair& pair, SolveLimits limits = {},
                               std::ostream* progress = nullptr) {
  detail::BnbSolver solver(pair, limits, progress);
  return solver.run();
}

// Combinatorial root bound: the fewest edge blocks tiling either side alone.
inline int lower_bound(const RelatedPair& pair) {
  return std::max(detail::min_blocks_suffix(build_graph(pair, kIdX))[0],
                  detail::min_blocks_suffix(build_graph(pair, kIdY))[0]);
}

}  // namespace mcsp
