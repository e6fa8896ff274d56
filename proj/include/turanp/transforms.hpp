#pragma once

#include <turanp/error.hpp>
#include <turanp/graph.hpp>

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

// x-pendent structures hanging off a connected graph C relative to a vertex
// v, and the rewrites that move them onto v. A rewrite raises d(v), raises
// no other degree, and strictly increases e_p for p >= 2.

namespace turanp {

enum class SiteKind { edge, triangle, diamond, spindle, spindle_plus };

inline std::string to_string(SiteKind kind) {
  switch (kind) {
    case SiteKind::edge: return "edge";
    case SiteKind::triangle: return "triangle";
    case SiteKind::diamond: return "diamond";
    case SiteKind::spindle: return "spindle";
    case SiteKind::spindle_plus: return "spindle-plus";
  }
  return "?";
}

inline SiteKind parse_site_kind(const std::string& text) {
  for (SiteKind k : {SiteKind::edge, SiteKind::triangle, SiteKind::diamond, SiteKind::spindle, SiteKind::spindle_plus}) {
    if (to_string(k) == text) return k;
  }
  throw Error("unknown pendent structure '" + text + "'");
}

/// One x-pendent structure.
///
/// - edge:         leaves = {y}, N(y) = {x}
/// - triangle:     leaves = {y, y'}, N(y) = {x, y'}, N(y') = {x, y}
/// - diamond:      hub z, leaves = {y, y'}, N(z) = {y, y'},
///                 N(y) = {x, z, y'}, N(y') = {x, z, y}; xz is not an edge
/// - spindle:      hub z, leaves = {y_1..y_t}, t >= 2, N(z) = leaves,
///                 N(y_k) = {x, z}; xz is not an edge
/// - spindle_plus: as spindle but N(z) = leaves + {x}
///
/// Neither v nor x belongs to the peripheral set.
struct PendentSite {
  SiteKind kind = SiteKind::edge;
  int anchor = -1;  // x
  int hub = -1;     // z, diamond and spindles only
  std::vector<int> leaves;
  int reference = -1;  // v

  int t() const { return static_cast<int>(leaves.size()); }

  VertexMask peripheral() const {
    VertexMask m = 0;
    for (int y : leaves) m |= bit(y);
    if (hub >= 0) m |= bit(hub);
    return m;
  }

  friend bool operator==(const PendentSite&, const PendentSite&) = default;
};

namespace detail {

inline VertexMask mask_of(const std::vector<int>& vs) {
  VertexMask m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

// Checks every closed-neighbourhood condition of the site's definition.
inline bool site_holds(const Graph& c, const PendentSite& site) {
  const int n = c.order();
  const int v = site.reference;
  const int x = site.anchor;
  auto in_range = [n](int u) { return u >= 0 && u < n; };
  if (!in_range(v) || !in_range(x) || v == x) return false;
  for (int y : site.leaves) {
    if (!in_range(y)) return false;
  }
  const VertexMask leaves = mask_of(site.leaves);
  if (std::popcount(leaves) != site.t()) return false;  // distinct
  const VertexMask outside = bit(v) | bit(x);
  switch (site.kind) {
    case SiteKind::edge: {
      if (site.t() != 1 || site.hub >= 0 || (leaves & outside)) return false;
      return c.row(site.leaves[0]) == bit(x);
    }
    case SiteKind::triangle: {
      if (site.t() != 2 || site.hub >= 0 || (leaves & outside)) return false;
      const int y = site.leaves[0];
      const int y2 = site.leaves[1];
      return c.row(y) == (bit(x) | bit(y2)) && c.row(y2) == (bit(x) | bit(y));
    }
    case SiteKind::diamond: {
      if (site.t() != 2 || !in_range(site.hub)) return false;
      const int z = site.hub;
      if (((leaves | bit(z)) & outside) || (leaves & bit(z))) return false;
      const int y = site.leaves[0];
      const int y2 = site.leaves[1];
      return c.row(z) == leaves && c.row(y) == (bit(x) | bit(z) | bit(y2)) &&
             c.row(y2) == (bit(x) | bit(z) | bit(y));
    }
    case SiteKind::spindle:
    case SiteKind::spindle_plus: {
      if (site.t() < 2 || !in_range(site.hub)) return false;
      const int z = site.hub;
      if (((leaves | bit(z)) & outside) || (leaves & bit(z))) return false;
      const VertexMask hub_row = site.kind == SiteKind::spindle ? leaves : (leaves | bit(x));
      if (c.row(z) != hub_row) return false;
      for (int y : site.leaves) {
        if (c.row(y) != (bit(x) | bit(z))) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// All x-pendent structures of a connected graph with respect to v, in a
/// deterministic order (by kind, then anchor, then vertices).
inline std::vector<PendentSite> find_sites(const Graph& c, int v) {
  if (v < 0 || v >= c.order()) throw Error("reference vertex out of range");
  if (!c.is_connected()) throw Error("find_sites needs a connected graph");
  const int n = c.order();
  std::vector<PendentSite> out;
  auto consider = [&](PendentSite site) {
    site.reference = v;
    if (detail::site_holds(c, site)) out.push_back(std::move(site));
  };
  // edges
  for (int y = 0; y < n; ++y) {
    if (y == v || c.degree(y) != 1) continue;
    const int x = std::countr_zero(c.row(y));
    consider({SiteKind::edge, x, -1, {y}, v});
  }
  // triangles
  for (int y = 0; y < n; ++y) {
    if (y == v || c.degree(y) != 2) continue;
    for (VertexMask m = c.row(y); m != 0; m &= m - 1) {
      const int y2 = std::countr_zero(m);
      if (y2 <= y) continue;
      const int x = std::countr_zero(c.row(y) & ~bit(y2));
      consider({SiteKind::triangle, x, -1, {y, y2}, v});
    }
  }
  // diamonds: hub z of degree 2 whose two neighbours are adjacent
  for (int z = 0; z < n; ++z) {
    if (z == v || c.degree(z) != 2) continue;
    const int y = std::countr_zero(c.row(z));
    const int y2 = 63 - std::countl_zero(c.row(z));
    const VertexMask rest = c.row(y) & ~(bit(z) | bit(y2));
    if (std::popcount(rest) != 1) continue;
    consider({SiteKind::diamond, std::countr_zero(rest), z, {y, y2}, v});
  }
  // spindles and spindle+ : hub z, leaves are z's neighbours other than x
  for (int z = 0; z < n; ++z) {
    if (z == v) continue;
    const VertexMask nz = c.row(z);
    if (nz == 0) continue;
    const int some = std::countr_zero(nz);
    // x is the common other neighbour of the leaves.
    VertexMask anchor = c.row(some) & ~bit(z);
    if (std::popcount(anchor) != 1) {
      // `some` may be x itself in the spindle+ case
      anchor = 0;
      for (VertexMask m = nz; m != 0; m &= m - 1) {
        const int y = std::countr_zero(m);
        const VertexMask other = c.row(y) & ~bit(z);
        if (std::popcount(other) == 1) {
          anchor = other;
          break;
        }
      }
      if (anchor == 0) continue;
    }
    const int x = std::countr_zero(anchor);
    std::vector<int> leaves;
    for (VertexMask m = nz & ~bit(x); m != 0; m &= m - 1) leaves.push_back(std::countr_zero(m));
    const SiteKind kind = (nz & bit(x)) ? SiteKind::spindle_plus : SiteKind::spindle;
    consider({kind, x, z, std::move(leaves), v});
  }
  std::stable_sort(out.begin(), out.end(), [](const PendentSite& a, const PendentSite& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.anchor != b.anchor) return a.anchor < b.anchor;
    if (a.hub != b.hub) return a.hub < b.hub;
    return a.leaves < b.leaves;
  });
  return out;
}

/// Performs the rewrite of `site` onto v. Requires d(v) = Delta(c) >= ell+s-1.
///
/// edge: delete xy, add vy. triangle: delete xy, xy', yy', add vy, vy'.
/// diamond: delete its five edges, add vz, vy, vy'. spindle(+): delete its
/// 2t (2t+1) edges, add vz, vy_1..vy_t.
inline Graph apply(const Graph& c, int v, const PendentSite& site, int ell, int s) {
  if (site.reference != v) throw Error("site was found for a different reference vertex");
  if (!detail::site_holds(c, site)) throw Error("stale " + to_string(site.kind) + " site: its defining edges no longer hold");
  if (c.degree(v) != c.max_degree()) throw Error("rewrite needs d(v) = maximum degree");
  if (c.degree(v) < ell + s - 1) {
    throw Error("rewrite needs d(v) >= ell+s-1 = " + std::to_string(ell + s - 1) + ", got " + std::to_string(c.degree(v)));
  }
  Graph out = c;
  const int x = site.anchor;
  for (int y : site.leaves) out.remove_edge(x, y);
  if (site.hub >= 0) {
    for (int y : site.leaves) out.remove_edge(site.hub, y);
    if (site.kind == SiteKind::spindle_plus) out.remove_edge(x, site.hub);
    out.add_edge(v, site.hub);
  }
  if (site.kind == SiteKind::triangle || site.kind == SiteKind::diamond) {
    out.remove_edge(site.leaves[0], site.leaves[1]);
  }
  for (int y : site.leaves) out.add_edge(v, y);
  return out;
}

}  // namespace turanp
