#pragma once

// Slow, independent reference routines used only as test oracles.

#include <turanp/turanp.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace ref {

using Edges = std::vector<std::pair<int, int>>;

inline std::int64_t ipow(std::int64_t b, unsigned p) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < p; ++i) r *= b;
  return r;
}

// Degrees straight from an adjacency matrix built from the edge list.
inline turanp::BigCount degree_power(int n, const Edges& edges, unsigned p) {
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
  turanp::BigCount total = 0;
  for (int v = 0; v < n; ++v) {
    const int d = std::accumulate(adj[v].begin(), adj[v].end(), 0);
    turanp::BigCount x = 1;
    for (unsigned i = 0; i < p; ++i) x *= d;
    total += x;
  }
  return total;
}

inline turanp::BigCount degree_power(const turanp::Graph& g, unsigned p) {
  return degree_power(g.order(), g.edges(), p);
}

inline turanp::BigCount list_power(const std::vector<std::int64_t>& degrees, unsigned p) {
  turanp::BigCount total = 0;
  for (auto d : degrees) {
    turanp::BigCount x = 1;
    for (unsigned i = 0; i < p; ++i) x *= d;
    total += x;
  }
  return total;
}

// Subgraph containment by trying every injective map of pattern vertices.
inline bool contains(const turanp::Graph& host, int k, const Edges& pattern) {
  const int n = host.order();
  if (k > n) return false;
  if (pattern.empty()) return true;
  std::vector<int> map(k, -1);
  std::vector<bool> used(n, false);
  auto ok_so_far = [&](int upto) {
    for (auto [a, b] : pattern) {
      if (a <= upto && b <= upto && !host.has_edge(map[a], map[b])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      map[i] = v;
      used[v] = true;
      if (ok_so_far(i) && self(self, i + 1)) return true;
      used[v] = false;
    }
    map[i] = -1;
    return false;
  };
  return rec(rec, 0);
}

inline Edges path_edges(int ell, int offset = 0) {
  Edges e;
  for (int i = 0; i + 1 < ell; ++i) e.push_back({offset + i, offset + i + 1});
  return e;
}

// Linear forest on sum(lengths) vertices.
inline std::pair<int, Edges> linear_forest(const std::vector<int>& lengths) {
  Edges e;
  int off = 0;
  for (int len : lengths) {
    for (auto x : path_edges(len, off)) e.push_back(x);
    off += len;
  }
  return {off, e};
}

inline std::pair<int, Edges> star_forest(const std::vector<int>& degrees) {
  Edges e;
  int off = 0;
  for (int r : degrees) {
    for (int i = 1; i <= r; ++i) e.push_back({off, off + i});
    off += r + 1;
  }
  return {off, e};
}

// Path 0..ell-1, s leaves on vertex ell-2.
inline std::pair<int, Edges> broom(int ell, int s) {
  Edges e = path_edges(ell);
  for (int i = 0; i < s; ++i) e.push_back({ell - 2, ell + i});
  return {ell + s, e};
}

inline turanp::Graph graph_from_bits(int n, std::uint64_t bits) {
  turanp::Graph g(n);
  int k = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++k) {
      if ((bits >> k) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

inline turanp::Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  turanp::Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<int> sorted_degrees(const turanp::Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(static_cast<int>(g.row(v) ? __builtin_popcountll(g.row(v)) : 0));
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace ref
