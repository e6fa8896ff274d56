#pragma once

#include <turanp/error.hpp>

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace turanp {

/// Hard vertex cap: one 64-bit word per adjacency row.
inline constexpr int kMaxVertices = 64;

using VertexMask = std::uint64_t;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

inline constexpr VertexMask low_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// Simple undirected graph on vertices 0..n-1 stored as bitset rows.
///
/// Rows are kept symmetric and irreflexive by every mutator, so
/// degree(v) is always popcount(row(v)).
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0) throw Error("vertex count must be nonnegative");
    if (n > kMaxVertices) {
      throw CapacityError("graph on " + std::to_string(n) +
                          " vertices exceeds the vertex cap of " +
                          std::to_string(kMaxVertices));
    }
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }
  VertexMask vertices() const { return low_mask(n_); }
  VertexMask row(int v) const { return adj_[v]; }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  int degree(int v) const { return std::popcount(adj_[v]); }

  int max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (has_edge(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  /// Vertices reachable from `start` inside `allowed` (start must be allowed).
  VertexMask component_of(int start, VertexMask allowed) const {
    VertexMask seen = bit(start);
    VertexMask frontier = seen;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) {
        next |= adj_[std::countr_zero(f)];
      }
      next &= allowed & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  VertexMask component_of(int start) const { return component_of(start, vertices()); }

  bool is_connected() const {
    return n_ == 0 || component_of(0) == vertices();
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v) {
      if (a.adj_[v] != b.adj_[v]) return false;
    }
    return true;
  }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("vertex out of range");
    if (u == v) throw Error("loops are not allowed");
  }

  int n_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  const int shift = g.order();
  for (auto [u, v] : h.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

/// G + H: the disjoint union plus every edge between the two parts.
inline Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  }
  return out;
}

/// Subgraph induced on the vertices of `keep`, relabelled in increasing order.
inline Graph induced(const Graph& g, VertexMask keep) {
  std::vector<int> ids;
  for (VertexMask m = keep & g.vertices(); m != 0; m &= m - 1) {
    ids.push_back(std::countr_zero(m));
  }
  Graph out(static_cast<int>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (g.has_edge(ids[i], ids[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

/// Relabel: vertex v of `g` becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace turanp
