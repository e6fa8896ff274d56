#pragma once

#include <turanp/bigcount.hpp>
#include <turanp/canonical.hpp>
#include <turanp/degree.hpp>
#include <turanp/error.hpp>
#include <turanp/formulas.hpp>
#include <turanp/graph.hpp>
#include <turanp/graph6.hpp>
#include <turanp/patterns.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace turanp {

/// Default order cap of the exhaustive search; kOracleHardCap needs override.
inline constexpr int kOracleCap = 8;
inline constexpr int kOracleHardCap = 9;

struct OracleOptions {
  int threads = 1;
  bool prune = true;
  bool override_cap = false;
};

struct OracleStats {
  std::uint64_t nodes = 0;         // search nodes entered
  std::uint64_t pruned = 0;        // subtrees cut by the e_p upper bound
  std::uint64_t maximal_leaves = 0;  // edge-maximal F-free graphs reached
  std::uint64_t rejected_leaves = 0;  // leaves that were not edge-maximal
};

struct Maximizer {
  std::string graph6;
  CanonicalCode code;
};

struct OracleReport {
  int n = 0;
  unsigned p = 1;
  std::string pattern;
  BigCount max_value;
  std::vector<Maximizer> maximizers;  // pairwise non-isomorphic, sorted by code
  bool unique = false;
  OracleStats stats;
};

namespace detail {

using Wide = unsigned __int128;

// Depth-first include/exclude over vertex pairs in a fixed order. Only
// edge-maximal F-free graphs are emitted: e_p strictly increases with every
// added edge, so every maximiser is edge-maximal.
class MaxEpSearch {
 public:
  MaxEpSearch(int n, const ForestPattern& pattern, unsigned p, bool prune)
      : n_(n), pattern_(pattern), prune_(prune) {
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) pairs_.emplace_back(u, v);
    pow_.resize(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) {
      Wide x = 1;
      for (unsigned i = 0; i < p; ++i) x *= static_cast<Wide>(d);
      pow_[static_cast<std::size_t>(d)] = x;
    }
    // remaining_[i][v]: pairs at index >= i incident to v
    remaining_.assign(pairs_.size() + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = pairs_.size(); i-- > 0;) {
      remaining_[i] = remaining_[i + 1];
      ++remaining_[i][static_cast<std::size_t>(pairs_[i].first)];
      ++remaining_[i][static_cast<std::size_t>(pairs_[i].second)];
    }
  }

  std::size_t pair_count() const { return pairs_.size(); }

  /// Whether G + uv is still F-free, given that G is.
  bool can_add(const Graph& g, int u, int v) const {
    Graph h = g;
    h.add_edge(u, v);
    StepBudget budget;
    VertexMask scope = h.vertices();
    if (pattern_.connected()) {
      // A new copy must use uv, hence lies in uv's component.
      scope = h.component_of(u);
      if (std::popcount(scope) < pattern_.order()) return true;
    }
    return detect(h, pattern_, budget, scope) == Verdict::absent;
  }

  Wide ep(const Graph& g) const {
    Wide total = 0;
    for (int v = 0; v < n_; ++v) total += pow_[static_cast<std::size_t>(g.degree(v))];
    return total;
  }

  /// A greedy edge-maximal F-free graph; its e_p is a valid lower bound.
  Wide greedy_bound() const {
    Graph g(n_);
    for (auto [u, v] : pairs_) {
      if (can_add(g, u, v)) g.add_edge(u, v);
    }
    return ep(g);
  }

  struct Task {
    Graph graph;
    std::size_t index = 0;
    std::vector<std::pair<int, int>> excluded;  // addable when excluded
  };

  /// Splits the first `depth` decisions into independent tasks, in a fixed order.
  std::vector<Task> split(std::size_t depth) const {
    std::vector<Task> tasks{Task{Graph(n_), 0, {}}};
    depth = std::min(depth, pairs_.size());
    for (std::size_t i = 0; i < depth; ++i) {
      std::vector<Task> next;
      for (auto& t : tasks) {
        auto [u, v] = pairs_[i];
        const bool addable = can_add(t.graph, u, v);
        if (addable) {
          Task with = t;
          with.graph.add_edge(u, v);
          with.index = i + 1;
          next.push_back(std::move(with));
        }
        Task without = t;
        without.index = i + 1;
        if (addable) without.excluded.emplace_back(u, v);
        next.push_back(std::move(without));
      }
      tasks = std::move(next);
    }
    return tasks;
  }

  struct Outcome {
    Wide best = 0;
    bool found = false;
    std::vector<Graph> graphs;
    OracleStats stats;
  };

  Outcome run(const Task& task, Wide seed) const {
    Outcome out;
    out.best = seed;
    Graph g = task.graph;
    std::vector<std::pair<int, int>> excluded = task.excluded;
    descend(g, task.index, excluded, out);
    return out;
  }

 private:
  void descend(Graph& g, std::size_t i, std::vector<std::pair<int, int>>& excluded, Outcome& out) const {
    ++out.stats.nodes;
    if (prune_) {
      Wide bound = 0;
      for (int v = 0; v < n_; ++v) {
        bound += pow_[static_cast<std::size_t>(g.degree(v) + remaining_[i][static_cast<std::size_t>(v)])];
      }
      if (bound < out.best) {
        ++out.stats.pruned;
        return;
      }
    }
    if (i == pairs_.size()) {
      for (auto [u, v] : excluded) {
        if (can_add(g, u, v)) {
          ++out.stats.rejected_leaves;
          return;
        }
      }
      ++out.stats.maximal_leaves;
      const Wide value = ep(g);
      if (value < out.best) return;
      if (!out.found || value > out.best) {
        out.graphs.clear();
        out.best = value;
        out.found = true;
      }
      out.graphs.push_back(g);
      return;
    }
    auto [u, v] = pairs_[i];
    const bool addable = can_add(g, u, v);
    if (addable) {
      g.add_edge(u, v);
      descend(g, i + 1, excluded, out);
      g.remove_edge(u, v);
      excluded.emplace_back(u, v);
      descend(g, i + 1, excluded, out);
      excluded.pop_back();
    } else {
      descend(g, i + 1, excluded, out);
    }
  }

  int n_;
  const ForestPattern& pattern_;
  bool prune_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<Wide> pow_;
  std::vector<std::vector<int>> remaining_;
};

inline BigCount to_big(Wide x) {
  BigCount out = 0;
  for (int shift = 96; shift >= 0; shift -= 32) {
    out <<= 32;
    out += static_cast<std::uint32_t>(x >> shift);
  }
  return out;
}

}  // namespace detail

/// Maximum of e_p over all F-free graphs on n vertices, with every
/// maximiser up to isomorphism. The result does not depend on
/// options.threads or options.prune; only the stats do (for prune).
inline OracleReport max_ep(int n, const ForestPattern& pattern, unsigned p, const OracleOptions& options = {}) {
  detail::require(n >= 2, "oracle needs n >= 2");
  detail::require(p >= 1, "exponent p must be at least 1");
  const int cap = options.override_cap ? kOracleHardCap : kOracleCap;
  if (n > cap) {
    throw Error("oracle order " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap) +
                (options.override_cap ? "" : " (use the override for n = " + std::to_string(kOracleHardCap) + ")"));
  }
  if (BigCount(n) * big_pow(n - 1, p) >= (BigCount(1) << 126)) {
    throw Error("exponent p = " + std::to_string(p) + " is too large for the oracle at n = " + std::to_string(n));
  }

  detail::MaxEpSearch search(n, pattern, p, options.prune);
  const detail::Wide seed = options.prune ? search.greedy_bound() : 0;
  const auto tasks = search.split(3);
  std::vector<detail::MaxEpSearch::Outcome> outcomes(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) outcomes[t] = search.run(tasks[t], seed);
  };
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  OracleReport report;
  report.n = n;
  report.p = p;
  report.pattern = pattern.text();
  detail::Wide best = 0;
  bool found = false;
  for (const auto& o : outcomes) {
    report.stats.nodes += o.stats.nodes;
    report.stats.pruned += o.stats.pruned;
    report.stats.maximal_leaves += o.stats.maximal_leaves;
    report.stats.rejected_leaves += o.stats.rejected_leaves;
    if (o.found && (!found || o.best > best)) {
      best = o.best;
      found = true;
    }
  }
  if (!found) throw Error("oracle found no F-free graph (internal error)");
  std::map<CanonicalCode, std::string> classes;
  for (const auto& o : outcomes) {
    if (!o.found || o.best != best) continue;
    for (const auto& g : o.graphs) {
      auto code = canonical_code(g);
      if (!classes.count(code)) classes.emplace(std::move(code), g6_encode(g));
    }
  }
  report.max_value = detail::to_big(best);
  for (auto& [code, text] : classes) report.maximizers.push_back(Maximizer{text, code});
  report.unique = report.maximizers.size() == 1;
  return report;
}

/// Classical ex(n,F) through the same search at p = 1; max_value is 2 ex(n,F).
inline OracleReport ex_classical(int n, const ForestPattern& pattern, const OracleOptions& options = {}) {
  return max_ep(n, pattern, 1, options);
}

inline BigCount classical_edges(const OracleReport& report) { return report.max_value / 2; }

// ---------------------------------------------------------------------------
// Formula lookup and range verification

/// The closed form matching a pattern at (n,p), in e_p units (classical
/// formulas are doubled at p = 1). Empty when no formula applies.
inline std::optional<FormulaResult> matching_formula(const ForestPattern& pattern, std::int64_t n, unsigned p) {
  auto doubled = [](FormulaResult r) {
    r.value *= 2;
    return r;
  };
  try {
    return std::visit(
        [&](const auto& f) -> std::optional<FormulaResult> {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, PathPattern>) {
            if (p == 1) return doubled(ex_path(n, f.ell));
            return exp_path(n, f.ell, p);
          } else if constexpr (std::is_same_v<T, LinearForestPattern>) {
            const bool all_three = std::all_of(f.lengths.begin(), f.lengths.end(), [](int x) { return x == 3; });
            const auto k = static_cast<std::int64_t>(f.lengths.size());
            if (f.lengths.size() == 1) {
              if (p == 1) return doubled(ex_path(n, f.lengths[0]));
              return exp_path(n, f.lengths[0], p);
            }
            if (all_three) {
              if (p == 1) return doubled(ex_kP3(n, k));
              return exp_kP3(n, k, p);
            }
            if (p == 1) return doubled(ex_linear_forest(n, f.lengths));
            return exp_linear_forest(n, f.lengths, p);
          } else if constexpr (std::is_same_v<T, StarPattern>) {
            return exp_star(n, f.r, p);
          } else if constexpr (std::is_same_v<T, StarForestPattern>) {
            if (f.degrees.size() == 1) return exp_star(n, f.degrees[0], p);
            if (p == 1) return doubled(ex_star_forest(n, f.degrees));
            return exp_star_forest(n, f.degrees, p);
          } else {
            if (p == 1) {
              if (f.s == 0) return doubled(ex_path(n, f.ell));
              if (f.ell == 4) return doubled(ex_broom4(n, f.s));
              if (f.ell == 5) return doubled(ex_broom5_partial(n, f.s));
              return std::nullopt;
            }
            if (f.ell <= 7) return exp_broom(n, f.ell, f.s, p);
            return std::nullopt;
          }
        },
        pattern.variant());
  } catch (const Error&) {
    return std::nullopt;
  }
}

struct VerifyRow {
  int n = 0;
  unsigned p = 1;
  BigCount oracle;
  std::optional<BigCount> formula;
  bool agree = false;
  bool in_window = false;
  std::string note;
};

/// Oracle truth against the matching closed form for every (n,p) cell.
/// Disagreement outside the window is informational, never an error.
inline std::vector<VerifyRow> verify_range(const ForestPattern& pattern, std::pair<int, int> n_range,
                                           std::pair<unsigned, unsigned> p_range, const OracleOptions& options = {}) {
  std::vector<VerifyRow> rows;
  for (int n = n_range.first; n <= n_range.second; ++n) {
    for (unsigned p = p_range.first; p <= p_range.second; ++p) {
      VerifyRow row;
      row.n = n;
      row.p = p;
      row.oracle = max_ep(n, pattern, p, options).max_value;
      if (auto f = matching_formula(pattern, n, p)) {
        BigCount value = f->value;
        row.in_window = f->in_window;
        row.note = f->source;
        if (f->unspecified) {
          const auto& term = *f->unspecified;
          const int cap = options.override_cap ? kOracleHardCap : kOracleCap;
          if (term.base_n <= cap) {
            // Resolve the open base term with the oracle itself (p = 1, doubled).
            value += max_ep(static_cast<int>(term.base_n), pattern, 1, options).max_value;
            row.note += "; base term " + term.description + " from oracle";
          } else {
            row.note += "; base term " + term.description + " unspecified";
            rows.push_back(std::move(row));
            continue;
          }
        }
        row.formula = value;
        row.agree = value == row.oracle;
      } else {
        row.note = "no closed form for this cell";
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace turanp
