#pragma once

#include <turanp/bigcount.hpp>
#include <turanp/error.hpp>
#include <turanp/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

// Builders for the named extremal families. Labelling convention: clique or
// universal vertices come first (0..b-1), followed by the remaining part.

namespace turanp {

using detail::require;

inline Graph complete_graph(int t) {
  require(t >= 0, "complete graph needs t >= 0");
  Graph g(t);
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
  return g;
}

inline Graph empty_graph(int t) {
  require(t >= 0, "empty graph needs t >= 0");
  return Graph(t);
}

inline Graph path_graph(int t) {
  require(t >= 0, "path needs t >= 0");
  Graph g(t);
  for (int v = 0; v + 1 < t; ++v) g.add_edge(v, v + 1);
  return g;
}

/// S_r: centre 0 joined to r leaves.
inline Graph star_graph(int r) {
  require(r >= 0, "star needs r >= 0");
  Graph g(r + 1);
  for (int v = 1; v <= r; ++v) g.add_edge(0, v);
  return g;
}

/// M_t: floor(t/2) disjoint edges {0,1},{2,3},...; vertex t-1 isolated when t is odd.
inline Graph matching_graph(int t) {
  require(t >= 0, "matching graph needs t >= 0");
  Graph g(t);
  for (int v = 0; v + 1 < t; v += 2) g.add_edge(v, v + 1);
  return g;
}

/// Part sizes of T_r(n): the first n mod r parts get one extra vertex.
inline std::vector<int> turan_part_sizes(int n, int r) {
  require(r >= 1, "Turan graph needs r >= 1");
  require(n >= 0, "Turan graph needs n >= 0");
  std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
  for (int i = 0; i < n % r; ++i) ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

inline Graph turan_graph(int n, int r) {
  const auto sizes = turan_part_sizes(n, r);
  std::vector<int> part;
  for (int i = 0; i < r; ++i) part.insert(part.end(), static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)]), i);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) g.add_edge(u, v);
  return g;
}

/// Friendship graph F_n = K_1 + M_{n-1}, n odd.
inline Graph friendship_graph(int n) {
  require(n >= 3 && n % 2 == 1, "friendship graph needs odd n >= 3");
  return join(complete_graph(1), matching_graph(n - 1));
}

/// B_{ell,s}: path 0..ell-1 with s leaves (ell..ell+s-1) on vertex ell-2.
inline Graph broom_graph(int ell, int s) {
  require(ell >= 4, "broom needs ell >= 4");
  require(s >= 0, "broom needs s >= 0");
  Graph g(ell + s);
  for (int v = 0; v + 1 < ell; ++v) g.add_edge(v, v + 1);
  for (int j = 0; j < s; ++j) g.add_edge(ell - 2, ell + j);
  return g;
}

/// Havel-Hakimi realisation of a degree sequence (indexed by vertex).
/// Ties are broken towards the lowest index, so the output is deterministic.
inline Graph havel_hakimi(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  Graph g(n);
  std::vector<int> residual = degrees;
  auto by_residual = [&](int a, int b) {
    if (residual[static_cast<std::size_t>(a)] != residual[static_cast<std::size_t>(b)])
      return residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(b)];
    return a < b;
  };
  std::vector<int> order(static_cast<std::size_t>(n));
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), by_residual);
    const int head = order.empty() ? -1 : order.front();
    if (head < 0 || residual[static_cast<std::size_t>(head)] == 0) break;
    const int need = residual[static_cast<std::size_t>(head)];
    if (need > n - 1) throw Error("degree sequence is not graphical");
    residual[static_cast<std::size_t>(head)] = 0;
    for (int i = 1; i <= need; ++i) {
      const int v = order[static_cast<std::size_t>(i)];
      if (residual[static_cast<std::size_t>(v)] == 0) throw Error("degree sequence is not graphical");
      --residual[static_cast<std::size_t>(v)];
      g.add_edge(head, v);
    }
  }
  return g;
}

/// Degree targets of a near d-regular graph on n vertices: all d, except the
/// last vertex gets d-1 when dn is odd.
inline std::vector<int> near_regular_degrees(int n, int d) {
  require(n >= 1, "near-regular graph needs n >= 1");
  require(d >= 0 && d < n, "near-regular graph needs 0 <= d < n");
  std::vector<int> deg(static_cast<std::size_t>(n), d);
  if ((static_cast<long long>(d) * n) % 2 != 0) deg.back() = d - 1;
  return deg;
}

inline Graph near_regular(int n, int d) { return havel_hakimi(near_regular_degrees(n, d)); }

/// H(n,ell) generalised to a linear forest: K_b + E_{n-b} with
/// b = sum floor(ell_i/2) - 1, plus the edge {b, b+1} when every ell_i is odd.
inline Graph h_linear_forest(int n, const std::vector<int>& lengths) {
  require(!lengths.empty(), "linear forest needs at least one component");
  int b = -1;
  int total = 0;
  bool all_odd = true;
  for (int len : lengths) {
    require(len >= 2, "linear forest component lengths must be >= 2");
    b += len / 2;
    total += len;
    all_odd = all_odd && (len % 2 == 1);
  }
  require(n >= total, "H(n,F) needs n >= |V(F)| = " + std::to_string(total));
  Graph g = join(complete_graph(b), empty_graph(n - b));
  if (all_odd) g.add_edge(b, b + 1);
  return g;
}

/// H(n,ell) = K_b + E_{n-b}, b = floor(ell/2) - 1, plus one edge when ell is odd.
inline Graph h_path(int n, int ell) {
  require(ell >= 4, "H(n,ell) needs ell >= 4");
  require(n >= ell, "H(n,ell) needs n >= ell");
  return h_linear_forest(n, {ell});
}

/// G(n,i,r) = K_{i-1} + (near (r-1)-regular graph on n-i+1 vertices).
inline Graph g_star_join(int n, int i, int r) {
  require(i >= 1, "G(n,i,r) needs i >= 1");
  require(r >= 1, "G(n,i,r) needs r >= 1");
  require(n - i + 1 > r - 1, "G(n,i,r) needs n - i + 1 > r - 1");
  return join(complete_graph(i - 1), near_regular(n - i + 1, r - 1));
}

/// K_{k-1} + M_{n-k+1}.
inline Graph k_join_matching(int n, int k) {
  require(k >= 1, "K_{k-1} + M_{n-k+1} needs k >= 1");
  require(n >= k, "K_{k-1} + M_{n-k+1} needs n >= k");
  return join(complete_graph(k - 1), matching_graph(n - k + 1));
}

/// Complete bipartite graph with parts floor(n/2)-1 and ceil(n/2)+1.
inline Graph unbalanced_bipartite(int n) {
  require(n >= 6, "unbalanced bipartite graph needs n >= 6");
  const int small = n / 2 - 1;
  Graph g(n);
  for (int u = 0; u < small; ++u)
    for (int v = small; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Degree profiles of the same families, usable for n far beyond the vertex
// cap. A profile is a multiset of (degree, multiplicity).

struct DegreeClass {
  std::int64_t degree = 0;
  std::int64_t count = 0;
};

using DegreeProfile = std::vector<DegreeClass>;

inline BigCount profile_power_sum(const DegreeProfile& profile, unsigned p) {
  BigCount total = 0;
  for (const auto& c : profile) {
    if (c.count > 0) total += BigCount(c.count) * big_pow(c.degree, p);
  }
  return total;
}

/// Degrees of K_{k-1} + M_{n-k+1}.
inline DegreeProfile k_join_matching_profile(std::int64_t n, std::int64_t k) {
  require(k >= 1 && n >= k, "K_{k-1} + M_{n-k+1} needs 1 <= k <= n");
  const std::int64_t rest = n - k + 1;
  return {{n - 1, k - 1}, {k, 2 * (rest / 2)}, {k - 1, rest % 2}};
}

/// Degrees of K_b + E_{n-b}, with the extra edge when `extra_edge`.
inline DegreeProfile split_profile(std::int64_t n, std::int64_t b, bool extra_edge) {
  require(b >= 0 && n >= b + (extra_edge ? 2 : 0), "split graph profile out of range");
  if (extra_edge) return {{n - 1, b}, {b + 1, 2}, {b, n - b - 2}};
  return {{n - 1, b}, {b, n - b}};
}

/// Degrees of unbalanced_bipartite(n).
inline DegreeProfile unbalanced_bipartite_profile(std::int64_t n) {
  require(n >= 6, "unbalanced bipartite graph needs n >= 6");
  const std::int64_t small = n / 2 - 1;
  return {{n - small, small}, {small, n - small}};
}

/// Degrees of turan_graph(n, r).
inline DegreeProfile turan_profile(std::int64_t n, std::int64_t r) {
  require(r >= 1 && n >= 0, "Turan graph needs r >= 1 and n >= 0");
  return {{n - (n / r + 1), (n % r) * (n / r + 1)}, {n - n / r, (r - n % r) * (n / r)}};
}

}  // namespace turanp
