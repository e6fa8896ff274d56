#pragma once

#include <turanp/canonical.hpp>
#include <turanp/constructions.hpp>
#include <turanp/degree.hpp>
#include <turanp/error.hpp>
#include <turanp/family_spec.hpp>
#include <turanp/formulas.hpp>
#include <turanp/graph.hpp>
#include <turanp/graph6.hpp>
#include <turanp/oracle.hpp>
#include <turanp/patterns.hpp>
#include <turanp/transforms.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

// Verification suites: the seven acceptance checks, driven by a line-oriented
// key=value config.

namespace turanp {

enum class Suite { identities = 1, freeness, oracle, lemmas, rewrites, counterexample, properties };

inline const std::vector<std::pair<Suite, std::string>>& suite_names() {
  static const std::vector<std::pair<Suite, std::string>> names = {
      {Suite::identities, "identities"}, {Suite::freeness, "freeness"},
      {Suite::oracle, "oracle"},         {Suite::lemmas, "lemmas"},
      {Suite::rewrites, "rewrites"},     {Suite::counterexample, "counterexample"},
      {Suite::properties, "properties"},
  };
  return names;
}

inline std::string to_string(Suite suite) {
  for (const auto& [s, name] : suite_names()) {
    if (s == suite) return name;
  }
  return "?";
}

inline Suite parse_suite(std::string_view text) {
  for (const auto& [s, name] : suite_names()) {
    if (name == text) return s;
  }
  throw Error("unknown suite '" + std::string(text) + "'");
}

struct VerifyConfig {
  std::vector<Suite> only;  // empty runs everything
  int n_max = 60;
  std::vector<int> large_n{200, 500};
  unsigned p_max = 6;
  std::pair<int, int> oracle_n{2, 8};
  bool override_cap = false;
  int threads = 1;
  std::uint64_t seed = 1;
  int rewrite_instances = 100;
  int absorb_tuples = 50;
  int random_graphs = 200;
  int exhaustive_n = 7;

  bool wants(Suite s) const { return only.empty() || std::find(only.begin(), only.end(), s) != only.end(); }
};

namespace detail {

inline std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

inline std::pair<int, int> parse_range(std::string_view text, std::string_view what) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw Error(std::string(what) + " needs the form a:b, got '" + std::string(text) + "'");
  const int a = parse_int(parts[0], what);
  const int b = parse_int(parts[1], what);
  if (a > b) throw Error(std::string(what) + " is empty: " + std::string(text));
  return {a, b};
}

inline bool parse_bool(std::string_view text, std::string_view what) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw Error("expected true/false for " + std::string(what) + ", got '" + std::string(text) + "'");
}

}  // namespace detail

/// Checks cross-field constraints. Throws Error naming the violated cap.
inline void validate(const VerifyConfig& c) {
  const int cap = c.override_cap ? kOracleHardCap : kOracleCap;
  if (c.oracle_n.first < 2) throw Error("oracle_n must start at 2 or above");
  if (c.oracle_n.second > cap) {
    throw Error("oracle_n " + std::to_string(c.oracle_n.first) + ":" + std::to_string(c.oracle_n.second) +
                " exceeds the oracle cap of " + std::to_string(cap) + " vertices" +
                (c.override_cap ? "" : " (hard cap " + std::to_string(kOracleHardCap) + " with override_cap=true)"));
  }
  if (c.n_max < 1 || c.n_max > kMaxVertices) {
    throw Error("n_max must lie in 1.." + std::to_string(kMaxVertices) + " (the graph vertex cap)");
  }
  if (c.p_max < 1) throw Error("p_max must be at least 1");
  if (c.threads < 1) throw Error("threads must be at least 1");
  if (c.exhaustive_n < 1 || c.exhaustive_n > 8) throw Error("exhaustive_n must lie in 1..8");
  if (c.rewrite_instances < 0 || c.absorb_tuples < 0 || c.random_graphs < 0) {
    throw Error("instance counts must be nonnegative");
  }
  for (int n : c.large_n) {
    if (n < 1) throw Error("large_n entries must be positive");
  }
}

/// Parses `key = value` lines; `#` starts a comment.
inline VerifyConfig parse_config(std::istream& in) {
  VerifyConfig c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string text = detail::trim(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw Error("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = detail::trim(std::string_view(text).substr(0, eq));
    const std::string value = detail::trim(std::string_view(text).substr(eq + 1));
    try {
      if (key == "only") {
        c.only.clear();
        for (auto part : detail::split(value, ',')) c.only.push_back(parse_suite(detail::trim(part)));
      } else if (key == "n_max") {
        c.n_max = detail::parse_int(value, key);
      } else if (key == "large_n") {
        c.large_n.clear();
        if (!value.empty()) {
          for (auto part : detail::split(value, ',')) c.large_n.push_back(detail::parse_int(detail::trim(part), key));
        }
      } else if (key == "p_max") {
        c.p_max = static_cast<unsigned>(detail::parse_int(value, key));
      } else if (key == "oracle_n") {
        c.oracle_n = detail::parse_range(value, key);
      } else if (key == "override_cap") {
        c.override_cap = detail::parse_bool(value, key);
      } else if (key == "threads") {
        c.threads = detail::parse_int(value, key);
      } else if (key == "seed") {
        c.seed = static_cast<std::uint64_t>(detail::parse_int(value, key));
      } else if (key == "rewrite_instances") {
        c.rewrite_instances = detail::parse_int(value, key);
      } else if (key == "absorb_tuples") {
        c.absorb_tuples = detail::parse_int(value, key);
      } else if (key == "random_graphs") {
        c.random_graphs = detail::parse_int(value, key);
      } else if (key == "exhaustive_n") {
        c.exhaustive_n = detail::parse_int(value, key);
      } else {
        throw Error("unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      throw Error("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  validate(c);
  return c;
}

struct CheckResult {
  Suite suite = Suite::identities;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::vector<std::string> messages;  // first few failures
  double seconds = 0;

  bool pass() const { return failures == 0 && cases > 0; }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    ++failures;
    if (messages.size() < 8) messages.push_back(describe());
  }

  // Runs `body`, counting an Error as a failed case.
  void guard(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, [&] { return label + ": " + e.what(); });
    }
  }
};

namespace detail {

// Second, independently written evaluation of each construction: degrees
// are assigned per vertex straight from the definitions and summed with
// repeated multiplication. Used for n beyond the vertex cap.
namespace reference {

inline BigCount power(std::int64_t base, unsigned p) {
  BigCount out = 1;
  for (unsigned i = 0; i < p; ++i) out *= base;
  return out;
}

template <class DegreeOf>
BigCount sum(std::int64_t n, unsigned p, DegreeOf degree_of) {
  BigCount total = 0;
  for (std::int64_t v = 0; v < n; ++v) total += power(degree_of(v), p);
  return total;
}

// K_b + E_{n-b}, optionally with an edge between vertices b and b+1.
inline BigCount split(std::int64_t n, std::int64_t b, bool extra, unsigned p) {
  return sum(n, p, [&](std::int64_t v) -> std::int64_t {
    if (v < b) return n - 1;
    if (extra && (v == b || v == b + 1)) return b + 1;
    return b;
  });
}

// K_{k-1} + M_{n-k+1}: partner of the j-th matching vertex is j^1.
inline BigCount clique_join_matching(std::int64_t n, std::int64_t k, unsigned p) {
  const std::int64_t m = n - k + 1;
  return sum(n, p, [&](std::int64_t v) -> std::int64_t {
    if (v < k - 1) return n - 1;
    const std::int64_t j = v - (k - 1);
    return (j ^ 1) < m ? k : k - 1;
  });
}

// d-regular on m vertices except the last, which has d-1 when dm is odd.
inline std::int64_t near_regular_degree(std::int64_t m, std::int64_t d, std::int64_t j) {
  return (j == m - 1 && (d * m) % 2 == 1) ? d - 1 : d;
}

// K_{i-1} + (near (r-1)-regular on n-i+1 vertices).
inline BigCount star_join(std::int64_t n, std::int64_t i, std::int64_t r, unsigned p) {
  const std::int64_t m = n - i + 1;
  return sum(n, p, [&](std::int64_t v) -> std::int64_t {
    if (v < i - 1) return n - 1;
    return near_regular_degree(m, r - 1, v - (i - 1)) + (i - 1);
  });
}

// Extremal graph for S_r: K_n when n <= r-1, else near (r-1)-regular.
inline BigCount star_extremal(std::int64_t n, std::int64_t r, unsigned p) {
  return sum(n, p, [&](std::int64_t v) -> std::int64_t {
    if (n <= r - 1) return n - 1;
    return near_regular_degree(n, r - 1, v);
  });
}

// T_r(n) with vertex v in part v mod r.
inline BigCount turan(std::int64_t n, std::int64_t r, unsigned p) {
  return sum(n, p, [&](std::int64_t v) -> std::int64_t {
    const std::int64_t part = v % r;
    const std::int64_t size = (n - part + r - 1) / r;
    return n - size;
  });
}

// Disjoint cliques of size `block`, the remainder forming one smaller clique.
inline BigCount clique_blocks(std::int64_t n, std::int64_t block, unsigned p) {
  const std::int64_t full = (n / block) * block;
  return sum(n, p, [&](std::int64_t v) -> std::int64_t { return v < full ? block - 1 : n - full - 1; });
}

// Perfect-as-possible matching.
inline BigCount matching(std::int64_t n, unsigned p) {
  return sum(n, p, [&](std::int64_t v) -> std::int64_t { return (v ^ 1) < n ? 1 : 0; });
}

// (a-1) copies of K_{s+3} plus a near (s+1)-regular graph on s+3+b vertices.
inline BigCount broom4_second(std::int64_t n, std::int64_t s, unsigned p) {
  const std::int64_t block = s + 3;
  const std::int64_t lead = (n / block - 1) * block;
  return sum(n, p, [&](std::int64_t v) -> std::int64_t {
    if (v < lead) return block - 1;
    return near_regular_degree(n - lead, s + 1, v - lead);
  });
}

// K_{a, b} style bipartite graph with parts `small` and n - small.
inline BigCount complete_bipartite(std::int64_t n, std::int64_t small, unsigned p) {
  return sum(n, p, [&](std::int64_t v) -> std::int64_t { return v < small ? n - small : small; });
}

}  // namespace reference

inline Graph clique_blocks_graph(int n, int block) {
  Graph g(0);
  int left = n;
  while (left >= block) {
    g = disjoint_union(g, complete_graph(block));
    left -= block;
  }
  return disjoint_union(g, complete_graph(left));
}

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

inline std::vector<int> n_values(const VerifyConfig& c, int start) {
  std::vector<int> out;
  for (int n = std::max(start, 1); n <= c.n_max; ++n) out.push_back(n);
  for (int n : c.large_n) {
    if (n >= start && n > c.n_max) out.push_back(n);
  }
  return out;
}

inline std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

// Compares one formula cell with the independent summation and, when the
// construction fits under the cap, with ep_value on the built graph.
struct IdentityCell {
  CheckResult& result;
  const VerifyConfig& config;

  void check(const std::string& label, int n, unsigned p, const std::function<BigCount()>& formula,
             const std::function<BigCount()>& reference, const std::function<Graph()>& construction) {
    result.guard(label, [&] {
      const BigCount f = formula();
      const BigCount r = reference();
      result.expect(f == r, [&] {
        return label + " n=" + std::to_string(n) + " p=" + std::to_string(p) + ": formula " + to_decimal(f) +
               " != reference " + to_decimal(r);
      });
      if (n <= config.n_max && construction) {
        const BigCount g = ep_value(construction(), p);
        result.expect(f == g, [&] {
          return label + " n=" + std::to_string(n) + " p=" + std::to_string(p) + ": formula " + to_decimal(f) +
                 " != ep_value " + to_decimal(g);
        });
      }
    });
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. Construction-formula identities

inline CheckResult check_identities(const VerifyConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.suite = Suite::identities;
  detail::IdentityCell cell{r, c};
  namespace ref = detail::reference;

  for (int ell = 2; ell <= 9; ++ell) {
    for (int n : detail::n_values(c, ell)) {
      for (unsigned p = ell <= 3 ? 1 : 2; p <= c.p_max; ++p) {
        cell.check(
            "exp_path ell=" + std::to_string(ell), n, p, [&] { return exp_path(n, ell, p).value; },
            [&] {
              if (ell == 2) return BigCount(0);
              if (ell == 3) return ref::matching(n, p);
              return ref::split(n, ell / 2 - 1, ell % 2 == 1, p);
            },
            [&] {
              if (ell == 2) return empty_graph(n);
              if (ell == 3) return matching_graph(n);
              return h_path(n, ell);
            });
      }
      // ex(n, P_ell) against disjoint cliques K_{ell-1}
      cell.check(
          "ex_path ell=" + std::to_string(ell), n, 1, [&] { return 2 * ex_path(n, ell).value; },
          [&] { return ref::clique_blocks(n, ell - 1, 1); },
          [&] { return detail::clique_blocks_graph(n, ell - 1); });
    }
  }

  const std::vector<std::vector<int>> forests = {{3, 2}, {4, 3}, {5, 3}, {4, 4}, {2, 2}, {2, 2, 2}, {6, 4, 2}, {5, 5, 3}, {7, 2}, {5, 5}};
  for (const auto& lengths : forests) {
    const auto f = detail::summarise(lengths);
    const std::string label = "linear forest " + detail::join_ints(lengths);
    for (int n : detail::n_values(c, static_cast<int>(f.order))) {
      for (unsigned p = 2; p <= c.p_max; ++p) {
        cell.check(
            "exp_" + label, n, p, [&] { return exp_linear_forest(n, lengths, p).value; },
            [&] { return ref::split(n, f.b, f.all_odd, p); }, [&] { return h_linear_forest(n, lengths); });
      }
      cell.check(
          "ex_" + label, n, 1, [&] { return 2 * ex_linear_forest(n, lengths).value; },
          [&] { return ref::split(n, f.b, f.all_odd, 1); }, [&] { return h_linear_forest(n, lengths); });
    }
  }

  for (int k = 1; k <= 4; ++k) {
    for (int n : detail::n_values(c, 3 * k)) {
      for (unsigned p = 2; k >= 2 && p <= c.p_max; ++p) {
        cell.check(
            "exp_kP3 k=" + std::to_string(k), n, p, [&] { return exp_kP3(n, k, p).value; },
            [&] { return ref::clique_join_matching(n, k, p); }, [&] { return k_join_matching(n, k); });
      }
      cell.check(
          "ex_kP3 k=" + std::to_string(k), n, 1, [&] { return 2 * ex_kP3(n, k).value; },
          [&] { return ref::clique_join_matching(n, k, 1); }, [&] { return k_join_matching(n, k); });
    }
  }

  const std::vector<std::vector<int>> star_forests = {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 2, 2}, {2, 2, 2}, {3, 1, 1}};
  for (const auto& degrees : star_forests) {
    const int k = static_cast<int>(degrees.size());
    const int rk = degrees.back();
    int order = k;
    for (int x : degrees) order += x;
    const std::string label = "star forest " + detail::join_ints(degrees);
    for (int n : detail::n_values(c, order)) {
      for (unsigned p = 2; p <= c.p_max; ++p) {
        cell.check(
            "exp_" + label, n, p, [&] { return exp_star_forest(n, degrees, p).value; },
            [&] { return ref::star_join(n, k, rk, p); }, [&] { return g_star_join(n, k, rk); });
      }
      // ex: best of G(n, i, r_i) over i
      cell.check(
          "ex_" + label, n, 1, [&] { return 2 * ex_star_forest(n, degrees).value; },
          [&] {
            BigCount best = 0;
            for (int i = 1; i <= k; ++i) best = std::max(best, ref::star_join(n, i, degrees[static_cast<std::size_t>(i - 1)], 1));
            return best;
          },
          [&] {
            const auto argmax = ex_star_forest(n, degrees).argmax;
            const int i = argmax.front();
            return g_star_join(n, i, degrees[static_cast<std::size_t>(i - 1)]);
          });
    }
  }

  for (int rs = 1; rs <= 6; ++rs) {
    for (int n : detail::n_values(c, 1)) {
      for (unsigned p = 1; p <= c.p_max; ++p) {
        cell.check(
            "exp_star r=" + std::to_string(rs), n, p, [&] { return exp_star(n, rs, p).value; },
            [&] { return ref::star_extremal(n, rs, p); },
            [&] { return n <= rs - 1 ? complete_graph(n) : near_regular(n, rs - 1); });
      }
      if (n >= rs) {
        // ex_1 bridge: ex_1(n,S_r) = 2 ex(n,S_r)
        r.expect(exp_star(n, rs, 1).value == 2 * ex_star_forest(n, {rs}).value,
                 [&] { return "ex_1 bridge for S_" + std::to_string(rs) + " at n=" + std::to_string(n); });
      }
    }
  }
  for (int n : detail::n_values(c, 2)) {
    for (int ell = 2; ell <= 3; ++ell) {
      r.expect(exp_path(n, ell, 1).value == 2 * ex_path(n, ell).value,
               [&] { return "ex_1 bridge for P_" + std::to_string(ell) + " at n=" + std::to_string(n); });
    }
  }

  for (int ell = 4; ell <= 7; ++ell) {
    for (int s = 0; s <= 3; ++s) {
      const std::string label = "exp_broom ell=" + std::to_string(ell) + " s=" + std::to_string(s);
      for (int n : detail::n_values(c, ell + s)) {
        for (unsigned p = 2; p <= c.p_max; ++p) {
          cell.check(
              label, n, p, [&] { return exp_broom(n, ell, s, p).value; },
              [&] {
                if (ell == 4 && s >= 1) return ref::sum(n, p, [&](std::int64_t v) -> std::int64_t { return v == 0 ? n - 1 : 1; });
                if (ell == 5 && s >= 1) return ref::clique_join_matching(n, 2, p);
                return ref::split(n, ell / 2 - 1, ell % 2 == 1, p);
              },
              [&] {
                if (ell == 4 && s >= 1) return star_graph(n - 1);
                if (ell == 5 && s >= 1) return k_join_matching(n, 2);
                return h_path(n, ell);
              });
        }
      }
    }
  }

  for (int s = 1; s <= 4; ++s) {
    for (int n : detail::n_values(c, s + 4)) {
      const std::int64_t b = n % (s + 3);
      const bool second = s >= 3 && b >= 2 && b <= s;
      cell.check(
          "ex_broom4 s=" + std::to_string(s), n, 1, [&] { return 2 * ex_broom4(n, s).value; },
          [&] { return second ? ref::broom4_second(n, s, 1) : ref::clique_blocks(n, s + 3, 1); },
          [&] {
            if (!second) return detail::clique_blocks_graph(n, s + 3);
            const int lead = (n / (s + 3) - 1) * (s + 3);
            return disjoint_union(detail::clique_blocks_graph(lead, s + 3), near_regular(n - lead, s + 1));
          });
    }
  }
  for (int s = 1; s <= 3; ++s) {
    for (int n : detail::n_values(c, s + 5)) {
      const std::int64_t b = n % (s + 4);
      if (b >= 1 && b <= s) continue;  // base term left open
      cell.check(
          "ex_broom5 s=" + std::to_string(s), n, 1, [&] { return 2 * ex_broom5_partial(n, s).value; },
          [&] { return ref::clique_blocks(n, s + 4, 1); }, [&] { return detail::clique_blocks_graph(n, s + 4); });
    }
  }

  for (int rr = 1; rr <= 5; ++rr) {
    for (int n : detail::n_values(c, rr + 1)) {
      for (unsigned p = 1; p <= c.p_max; ++p) {
        cell.check(
            "exp_turan_clique r=" + std::to_string(rr), n, p, [&] { return exp_turan_clique(n, rr, p).value; },
            [&] { return ref::turan(n, rr, p); }, [&] { return turan_graph(n, rr); });
      }
    }
  }

  r.seconds = detail::seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------
// 2. Freeness certification

namespace detail {

inline void expect_free(CheckResult& r, const std::string& label, const Graph& g, const ForestPattern& f) {
  StepBudget budget(200'000'000);
  const Verdict v = detect(g, f, budget);
  r.expect(v == Verdict::absent, [&] {
    return label + " is not certified " + f.text() + "-free (" + (v == Verdict::present ? "contains it" : "budget exhausted") + ")";
  });
}

}  // namespace detail

inline CheckResult check_freeness(const VerifyConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.suite = Suite::freeness;
  std::mt19937_64 rng(c.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  for (int ell = 4; ell <= 9; ++ell) {
    for (int n = ell; n <= std::min(40, kMaxVertices); ++n) {
      r.guard("H(n,ell)", [&] {
        detail::expect_free(r, "H(" + std::to_string(n) + "," + std::to_string(ell) + ")", h_path(n, ell),
                            ForestPattern::path(ell));
      });
    }
  }

  std::set<std::vector<int>> linear;
  while (linear.size() < 12) {
    std::vector<int> lengths(static_cast<std::size_t>(uniform(2, 3)));
    for (int& x : lengths) x = uniform(2, 7);
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    if (std::all_of(lengths.begin(), lengths.end(), [](int x) { return x == 3; })) continue;
    linear.insert(lengths);
  }
  for (const auto& lengths : linear) {
    const auto f = ForestPattern::linear_forest(lengths);
    for (int n = f.order(); n <= 30; ++n) {
      r.guard("H(n,F)", [&] {
        detail::expect_free(r, "H(" + std::to_string(n) + ",{" + detail::join_ints(lengths) + "})",
                            h_linear_forest(n, lengths), f);
      });
    }
  }

  std::set<std::vector<int>> stars;
  while (stars.size() < 10) {
    std::vector<int> degrees(static_cast<std::size_t>(uniform(2, 3)));
    for (int& x : degrees) x = uniform(1, 5);
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    stars.insert(degrees);
  }
  for (const auto& degrees : stars) {
    const auto f = ForestPattern::star_forest(degrees);
    const int k = static_cast<int>(degrees.size());
    for (int n = f.order(); n <= 30; ++n) {
      r.guard("G(n,k,r_k)", [&] {
        detail::expect_free(r, "G(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(degrees.back()) + ")",
                            g_star_join(n, k, degrees.back()), f);
      });
    }
  }

  for (int s = 0; s <= 3; ++s) {
    for (int n = 5 + s; n <= 30; ++n) {
      r.guard("broom hosts", [&] {
        if (n >= 6 + s) detail::expect_free(r, "H(" + std::to_string(n) + ",6)", h_path(n, 6), ForestPattern::broom(6, s));
        if (n >= 7 + s) detail::expect_free(r, "H(" + std::to_string(n) + ",7)", h_path(n, 7), ForestPattern::broom(7, s));
        if (s >= 1) detail::expect_free(r, "K_1+M_" + std::to_string(n - 1), k_join_matching(n, 2), ForestPattern::broom(5, s));
      });
    }
  }

  r.seconds = detail::seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------
// 3. Oracle equivalence

inline CheckResult check_oracle(const VerifyConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.suite = Suite::oracle;
  OracleOptions options;
  options.threads = c.threads;
  options.override_cap = c.override_cap;
  const int lo = c.oracle_n.first;
  const int hi = c.oracle_n.second;
  auto in_range = [&](int n) { return n >= lo && n <= hi; };

  for (int n = 2; n <= 8; ++n) {
    if (!in_range(n)) continue;
    for (unsigned p : {2U, 3U}) {
      r.guard("P_3 oracle", [&] {
        const auto report = max_ep(n, ForestPattern::path(3), p, options);
        const BigCount expected = exp_path(n, 3, p).value;
        const std::string where = "n=" + std::to_string(n) + " p=" + std::to_string(p);
        r.expect(report.max_value == expected, [&] {
          return "ex_p(n,P_3) " + where + ": oracle " + to_decimal(report.max_value) + " vs " + to_decimal(expected);
        });
        r.expect(report.unique && report.maximizers.front().code == canonical_code(matching_graph(n)),
                 [&] { return "ex_p(n,P_3) " + where + ": maximizer is not uniquely M_n"; });
      });
    }
  }

  for (int n = 5; n <= 8; ++n) {
    if (!in_range(n)) continue;
    r.guard("2S_1 oracle", [&] {
      const auto report = max_ep(n, ForestPattern::star_forest({1, 1}), 2, options);
      const BigCount expected = big_pow(n - 1, 2) + (n - 1);
      r.expect(report.max_value == expected, [&] {
        return "ex_2(n,2S_1) n=" + std::to_string(n) + ": oracle " + to_decimal(report.max_value) + " vs " + to_decimal(expected);
      });
      r.expect(report.unique && report.maximizers.front().code == canonical_code(star_graph(n - 1)),
               [&] { return "ex_2(n,2S_1) n=" + std::to_string(n) + ": maximizer is not uniquely the star"; });
    });
  }

  for (int ell = 2; ell <= 6; ++ell) {
    for (int n = 2; n <= 8; ++n) {
      if (!in_range(n)) continue;
      r.guard("P_ell classical", [&] {
        const auto report = ex_classical(n, ForestPattern::path(ell), options);
        const BigCount expected = ex_path(n, ell).value;
        r.expect(classical_edges(report) == expected && report.max_value % 2 == 0, [&] {
          return "ex(n,P_" + std::to_string(ell) + ") n=" + std::to_string(n) + ": oracle " +
                 to_decimal(classical_edges(report)) + " vs " + to_decimal(expected);
        });
      });
    }
  }

  for (int n = 5; n <= 8; ++n) {
    if (!in_range(n)) continue;
    r.guard("2P_2 classical", [&] {
      const auto report = ex_classical(n, ForestPattern::linear_forest({2, 2}), options);
      const BigCount expected = ex_linear_forest(n, {2, 2}).value;
      r.expect(classical_edges(report) == expected, [&] {
        return "ex(n,2P_2) n=" + std::to_string(n) + ": oracle " + to_decimal(classical_edges(report)) + " vs " +
               to_decimal(expected);
      });
    });
  }

  r.seconds = detail::seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------
// 4. Lemma grids

struct AbsorbTuple {
  int ell = 5;
  int s = 0;
  std::int64_t h = 0;
  std::int64_t hstar = 0;
  std::int64_t d = 0;
  unsigned p = 2;
};

/// Deterministic sample of tuples satisfying h >= ell, hstar > 0 and
/// h + hstar > (ell+s+d)^2.
inline std::vector<AbsorbTuple> sample_absorb_tuples(LemmaVariant variant, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (variant == LemmaVariant::k1_matching ? 0xa11ceULL : 0xb0bULL));
  auto uniform = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  std::vector<AbsorbTuple> out;
  for (int i = 0; i < count; ++i) {
    AbsorbTuple t;
    t.ell = variant == LemmaVariant::k1_matching ? 5 : static_cast<int>(uniform(5, 7));
    t.s = static_cast<int>(uniform(0, 3));
    t.d = uniform(0, 30);
    t.p = static_cast<unsigned>(uniform(2, 4));
    const std::int64_t root = t.ell + t.s + t.d;
    const std::int64_t n = root * root + uniform(1, 400);
    t.hstar = uniform(1, n - t.ell);
    t.h = n - t.hstar;
    out.push_back(t);
  }
  return out;
}

inline CheckResult check_lemmas(const VerifyConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.suite = Suite::lemmas;
  for (int ell = 5; ell <= 7; ++ell) {
    for (LemmaVariant variant : {LemmaVariant::k1_matching, LemmaVariant::h_path}) {
      if (variant == LemmaVariant::k1_matching && ell != 5) continue;
      for (int n1 = ell; n1 <= ell + 20; ++n1) {
        for (int n2 = ell; n2 <= ell + 20; ++n2) {
          for (unsigned p : {2U, 3U}) {
            r.guard("superadditivity", [&] {
              r.expect(lemma_superadd_check(ell, n1, n2, p, variant), [&] {
                return "superadditivity fails at ell=" + std::to_string(ell) + " n1=" + std::to_string(n1) +
                       " n2=" + std::to_string(n2) + " p=" + std::to_string(p);
              });
            });
          }
        }
      }
    }
  }
  for (LemmaVariant variant : {LemmaVariant::k1_matching, LemmaVariant::h_path}) {
    for (const auto& t : sample_absorb_tuples(variant, c.absorb_tuples, c.seed)) {
      r.guard("absorption", [&] {
        r.expect(lemma_absorb_check(t.ell, t.s, t.h, t.hstar, t.d, t.p, variant), [&] {
          return "absorption fails at ell=" + std::to_string(t.ell) + " s=" + std::to_string(t.s) + " h=" +
                 std::to_string(t.h) + " hstar=" + std::to_string(t.hstar) + " d=" + std::to_string(t.d);
        });
      });
    }
  }
  r.seconds = detail::seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------
// 5. Rewrites

struct RewriteInstance {
  Graph host;
  int v = 0;
  PendentSite site;
};

/// A star at v = 0 with 8..10 leaves, one planted pendent structure of the
/// given kind at a neighbour x, and a few random edges among v's other
/// neighbours. At most 16 vertices; d(v) is the unique maximum.
inline RewriteInstance generate_rewrite_instance(SiteKind kind, std::mt19937_64& rng) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int t = (kind == SiteKind::spindle || kind == SiteKind::spindle_plus) ? uniform(2, 4) : 0;
  int peripheral = 0;
  switch (kind) {
    case SiteKind::edge: peripheral = 1; break;
    case SiteKind::triangle: peripheral = 2; break;
    case SiteKind::diamond: peripheral = 3; break;
    default: peripheral = t + 1; break;
  }
  const int leaves = uniform(8, 15 - peripheral);
  const int n = 1 + leaves + peripheral;
  Graph g(n);
  for (int u = 1; u <= leaves; ++u) g.add_edge(0, u);
  const int x = uniform(1, leaves);
  const int first = leaves + 1;
  PendentSite site;
  site.kind = kind;
  site.anchor = x;
  site.reference = 0;
  switch (kind) {
    case SiteKind::edge:
      site.leaves = {first};
      g.add_edge(x, first);
      break;
    case SiteKind::triangle:
      site.leaves = {first, first + 1};
      g.add_edge(x, first);
      g.add_edge(x, first + 1);
      g.add_edge(first, first + 1);
      break;
    case SiteKind::diamond:
      site.hub = first;
      site.leaves = {first + 1, first + 2};
      for (int y : site.leaves) {
        g.add_edge(x, y);
        g.add_edge(site.hub, y);
      }
      g.add_edge(first + 1, first + 2);
      break;
    default:
      site.hub = first;
      for (int k = 1; k <= t; ++k) {
        site.leaves.push_back(first + k);
        g.add_edge(x, first + k);
        g.add_edge(site.hub, first + k);
      }
      if (kind == SiteKind::spindle_plus) g.add_edge(x, site.hub);
      break;
  }
  // Random chords among v's neighbours, kept below d(v).
  std::bernoulli_distribution chord(0.15);
  for (int a = 1; a <= leaves; ++a) {
    for (int b = a + 1; b <= leaves; ++b) {
      if (!chord(rng)) continue;
      if (g.degree(a) + 1 >= g.degree(0) || g.degree(b) + 1 >= g.degree(0)) continue;
      g.add_edge(a, b);
    }
  }
  return {g, 0, site};
}

inline CheckResult check_rewrites(const VerifyConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.suite = Suite::rewrites;
  std::mt19937_64 rng(c.seed * 7919 + 17);
  for (SiteKind kind : {SiteKind::edge, SiteKind::triangle, SiteKind::diamond, SiteKind::spindle, SiteKind::spindle_plus}) {
    for (int i = 0; i < c.rewrite_instances; ++i) {
      const auto inst = generate_rewrite_instance(kind, rng);
      const std::string label = to_string(kind) + " instance " + std::to_string(i) + " (" + g6_encode(inst.host) + ")";
      r.guard(label, [&] {
        const auto sites = find_sites(inst.host, inst.v);
        r.expect(std::find(sites.begin(), sites.end(), inst.site) != sites.end(),
                 [&] { return label + ": planted site not found"; });
        for (int ell = 5; ell <= 7; ++ell) {
          for (int s = 0; s <= 2; ++s) {
            const Graph out = apply(inst.host, inst.v, inst.site, ell, s);
            for (unsigned p : {2U, 3U, 4U}) {
              r.expect(ep_value(out, p) > ep_value(inst.host, p),
                       [&] { return label + ": e_" + std::to_string(p) + " did not increase"; });
            }
            r.expect(out.degree(inst.v) == out.max_degree() && out.max_degree() >= ell + s - 1,
                     [&] { return label + ": d(v) is no longer the maximum degree"; });
            const auto broom = ForestPattern::broom(ell, s);
            if (is_free(inst.host, broom)) {
              r.expect(is_free(out, broom), [&] { return label + ": rewrite created " + broom.text(); });
            }
          }
        }
      });
    }
  }
  r.seconds = detail::seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------
// 6. The e_4 counterexample at n = 100

inline CheckResult check_counterexample(const VerifyConfig&) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.suite = Suite::counterexample;
  const int n = 100;
  const BigCount unbalanced = profile_power_sum(unbalanced_bipartite_profile(n), 4);
  const BigCount balanced = exp_turan_clique(n, 2, 4).value;
  const BigCount unbalanced_ref = detail::reference::complete_bipartite(n, n / 2 - 1, 4);
  const BigCount balanced_ref = detail::reference::complete_bipartite(n, n / 2, 4);
  r.expect(unbalanced == unbalanced_ref, [&] { return "e_4(unbalanced) = " + to_decimal(unbalanced) + " vs " + to_decimal(unbalanced_ref); });
  r.expect(balanced == balanced_ref, [&] { return "e_4(T_2(100)) = " + to_decimal(balanced) + " vs " + to_decimal(balanced_ref); });
  r.expect(unbalanced > balanced, [&] { return "e_4(unbalanced) does not beat e_4(T_2(100))"; });
  // The same profiles agree with the built graphs wherever they fit.
  for (int m = 6; m <= 60; ++m) {
    r.expect(profile_power_sum(unbalanced_bipartite_profile(m), 4) == ep_value(unbalanced_bipartite(m), 4),
             [&] { return "unbalanced profile mismatch at n=" + std::to_string(m); });
  }
  r.seconds = detail::seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------
// 7. Property suites

namespace detail {

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(density);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace detail

/// One representative per isomorphism class on n vertices (n <= 8), built by
/// adding a vertex with every neighbourhood to the classes on n-1 vertices.
inline std::vector<Graph> graphs_up_to_iso(int n) {
  detail::require(n >= 0 && n <= 8, "graphs_up_to_iso supports n <= 8");
  std::vector<Graph> level{Graph(0)};
  for (int m = 1; m <= n; ++m) {
    std::map<CanonicalCode, Graph> next;
    for (const Graph& g : level) {
      for (VertexMask nb = 0; nb < bit(m - 1); ++nb) {
        Graph h(m);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for (VertexMask b = nb; b != 0; b &= b - 1) h.add_edge(m - 1, std::countr_zero(b));
        next.emplace(canonical_code(h), h);
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(g);
  }
  return level;
}

inline const std::vector<ForestPattern>& property_patterns() {
  static const std::vector<ForestPattern> patterns = [] {
    std::vector<ForestPattern> out;
    for (const char* text : {"path:2", "path:3", "path:4", "path:5", "path:6", "path:7", "linear:2,2", "linear:3,2",
                             "linear:3,3", "linear:2,2,2", "linear:4,2", "linear:4,3", "star:2", "star:3", "star:4",
                             "stars:1,1", "stars:2,1", "stars:2,2", "stars:1,1,1", "stars:3,1", "broom:4,1",
                             "broom:4,2", "broom:5,0", "broom:5,1", "broom:6,1"}) {
      out.push_back(parse_pattern(text));
    }
    return out;
  }();
  return patterns;
}

inline CheckResult check_properties(const VerifyConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.suite = Suite::properties;
  std::mt19937_64 rng(c.seed * 104729 + 3);
  std::uniform_real_distribution<double> density(0.05, 0.95);

  // handshake, edge monotonicity, dominance monotonicity
  for (int i = 0; i < c.random_graphs; ++i) {
    const int n = std::uniform_int_distribution<int>(1, kMaxVertices)(rng);
    const Graph g = detail::random_graph(n, density(rng), rng);
    r.expect(ep_value(g, 1) == 2 * g.edge_count(), [&] { return "handshake fails for " + g6_encode(g); });
    std::vector<std::pair<int, int>> missing;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) missing.emplace_back(u, v);
    if (!missing.empty()) {
      const auto [u, v] = missing[std::uniform_int_distribution<std::size_t>(0, missing.size() - 1)(rng)];
      Graph h = g;
      h.add_edge(u, v);
      const auto dom = dominates(degree_sequence(h), degree_sequence(g));
      r.expect(dom.dominates && dom.strict, [&] { return "adding an edge is not a strict dominance step"; });
      for (unsigned p = 1; p <= 4; ++p) {
        r.expect(ep_value(h, p) > ep_value(g, p), [&] { return "e_p not increasing under edge addition, " + g6_encode(g); });
      }
    }
    // an unrelated graph of the same order
    const Graph other = detail::random_graph(n, density(rng), rng);
    const auto a = degree_sequence(g);
    const auto b = degree_sequence(other);
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      const auto dom = dominates(x, y);
      if (!dom.dominates) continue;
      for (unsigned p = 1; p <= 4; ++p) {
        const BigCount ex = power_sum(x.values(), p);
        const BigCount ey = power_sum(y.values(), p);
        r.expect(dom.strict ? ex > ey : ex == ey, [&] { return "dominance monotonicity fails"; });
      }
    }
  }

  // detectors against the generic embedding, exhaustively up to isomorphism
  for (int n = 1; n <= c.exhaustive_n; ++n) {
    for (const Graph& g : graphs_up_to_iso(n)) {
      for (const auto& f : property_patterns()) {
        r.guard("detector", [&] {
          r.expect(is_free(g, f) == !contains_forest_generic(g, f.to_graph()),
                   [&] { return "detector disagrees with generic search on " + g6_encode(g) + " for " + f.text(); });
        });
      }
    }
  }
  for (int i = 0; i < c.random_graphs; ++i) {
    const int n = std::uniform_int_distribution<int>(8, 12)(rng);
    const Graph g = detail::random_graph(n, density(rng) * 0.6, rng);
    for (const auto& f : property_patterns()) {
      r.guard("detector", [&] {
        r.expect(is_free(g, f) == !contains_forest_generic(g, f.to_graph()),
                 [&] { return "detector disagrees with generic search on " + g6_encode(g) + " for " + f.text(); });
      });
    }
  }

  // graph6 round trip over every labelled graph on at most 7 vertices
  for (int n = 0; n <= std::min(c.exhaustive_n, 7); ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slots;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
    std::int64_t bad = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
      Graph g(n);
      for (int i = 0; i < pairs; ++i) {
        if ((m >> i) & 1U) g.add_edge(slots[static_cast<std::size_t>(i)].first, slots[static_cast<std::size_t>(i)].second);
      }
      if (!(g6_decode(g6_encode(g)) == g)) ++bad;
    }
    r.expect(bad == 0, [&] { return "graph6 round trip fails for " + std::to_string(bad) + " graphs on " + std::to_string(n) + " vertices"; });
  }

  // oracle determinism
  const int oracle_n = std::min(7, c.oracle_n.second);
  for (const char* text : {"path:4", "path:5", "stars:1,1", "linear:2,2", "broom:4,1"}) {
    const auto f = parse_pattern(text);
    for (unsigned p : {1U, 2U}) {
      r.guard("oracle determinism", [&] {
        OracleOptions base;
        base.override_cap = c.override_cap;
        const auto ref = max_ep(oracle_n, f, p, base);
        auto same = [&](const OracleReport& x, bool with_stats) {
          if (x.max_value != ref.max_value || x.maximizers.size() != ref.maximizers.size()) return false;
          for (std::size_t i = 0; i < x.maximizers.size(); ++i) {
            if (x.maximizers[i].graph6 != ref.maximizers[i].graph6) return false;
          }
          return !with_stats || (x.stats.nodes == ref.stats.nodes && x.stats.pruned == ref.stats.pruned);
        };
        for (int threads : {1, 4, 8}) {
          OracleOptions o = base;
          o.threads = threads;
          r.expect(same(max_ep(oracle_n, f, p, o), true), [&] {
            return std::string("oracle report for ") + text + " changes with " + std::to_string(threads) + " threads";
          });
          o.prune = false;
          const auto unpruned = max_ep(oracle_n, f, p, o);
          r.expect(unpruned.max_value == ref.max_value && unpruned.maximizers.size() == ref.maximizers.size() &&
                       std::equal(unpruned.maximizers.begin(), unpruned.maximizers.end(), ref.maximizers.begin(),
                                  [](const Maximizer& a, const Maximizer& b) { return a.code == b.code; }),
                   [&] { return std::string("pruning changes the oracle result for ") + text; });
        }
      });
    }
  }

  r.seconds = detail::seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------

inline CheckResult run_suite(Suite suite, const VerifyConfig& c) {
  switch (suite) {
    case Suite::identities: return check_identities(c);
    case Suite::freeness: return check_freeness(c);
    case Suite::oracle: return check_oracle(c);
    case Suite::lemmas: return check_lemmas(c);
    case Suite::rewrites: return check_rewrites(c);
    case Suite::counterexample: return check_counterexample(c);
    case Suite::properties: return check_properties(c);
  }
  throw Error("unhandled suite");
}

/// Runs every suite the config selects, in criterion order.
inline std::vector<CheckResult> verify_suite(const VerifyConfig& c) {
  validate(c);
  std::vector<CheckResult> out;
  for (const auto& [suite, name] : suite_names()) {
    if (c.wants(suite)) out.push_back(run_suite(suite, c));
  }
  return out;
}

}  // namespace turanp
