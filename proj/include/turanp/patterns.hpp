#pragma once

#include <turanp/constructions.hpp>
#include <turanp/error.hpp>
#include <turanp/family_spec.hpp>
#include <turanp/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

namespace turanp {

// ---------------------------------------------------------------------------
// Pattern description

struct PathPattern {
  int ell = 2;
};
struct LinearForestPattern {
  std::vector<int> lengths;  // descending, each >= 2
};
struct StarPattern {
  int r = 1;
};
struct StarForestPattern {
  std::vector<int> degrees;  // descending, each >= 1
};
struct BroomPattern {
  int ell = 4;
  int s = 0;
};

/// One of the forbidden forests: P_ell, a linear forest, S_r, a star forest,
/// or a broom B_{ell,s}.
class ForestPattern {
 public:
  using Variant = std::variant<PathPattern, LinearForestPattern, StarPattern, StarForestPattern, BroomPattern>;

  static ForestPattern path(int ell) {
    detail::require(ell >= 2, "path pattern needs ell >= 2");
    return ForestPattern(PathPattern{ell});
  }
  static ForestPattern linear_forest(std::vector<int> lengths) {
    detail::require(!lengths.empty(), "linear forest needs at least one component");
    for (int len : lengths) detail::require(len >= 2, "linear forest component lengths must be >= 2");
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return ForestPattern(LinearForestPattern{std::move(lengths)});
  }
  static ForestPattern k_paths(int k, int ell) {
    detail::require(k >= 1, "k copies need k >= 1");
    return linear_forest(std::vector<int>(static_cast<std::size_t>(k), ell));
  }
  static ForestPattern star(int r) {
    detail::require(r >= 1, "star pattern needs r >= 1");
    return ForestPattern(StarPattern{r});
  }
  static ForestPattern star_forest(std::vector<int> degrees) {
    detail::require(!degrees.empty(), "star forest needs at least one component");
    for (int r : degrees) detail::require(r >= 1, "star forest degrees must be >= 1");
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return ForestPattern(StarForestPattern{std::move(degrees)});
  }
  static ForestPattern broom(int ell, int s) {
    detail::require(ell >= 4, "broom pattern needs ell >= 4");
    detail::require(s >= 0, "broom pattern needs s >= 0");
    return ForestPattern(BroomPattern{ell, s});
  }

  const Variant& variant() const { return v_; }

  int order() const {
    return std::visit(
        [](const auto& p) -> int {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, PathPattern>) return p.ell;
          else if constexpr (std::is_same_v<T, LinearForestPattern>)
            return std::accumulate(p.lengths.begin(), p.lengths.end(), 0);
          else if constexpr (std::is_same_v<T, StarPattern>) return p.r + 1;
          else if constexpr (std::is_same_v<T, StarForestPattern>)
            return std::accumulate(p.degrees.begin(), p.degrees.end(), 0) + static_cast<int>(p.degrees.size());
          else return p.ell + p.s;
        },
        v_);
  }

  bool connected() const {
    return std::visit(
        [](const auto& p) -> bool {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, LinearForestPattern>) return p.lengths.size() == 1;
          else if constexpr (std::is_same_v<T, StarForestPattern>) return p.degrees.size() == 1;
          else return true;
        },
        v_);
  }

  /// Explicit graph of the pattern, for the generic detector.
  Graph to_graph() const {
    return std::visit(
        [](const auto& p) -> Graph {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, PathPattern>) return path_graph(p.ell);
          else if constexpr (std::is_same_v<T, LinearForestPattern>) {
            Graph g(0);
            for (int len : p.lengths) g = disjoint_union(g, path_graph(len));
            return g;
          } else if constexpr (std::is_same_v<T, StarPattern>) return star_graph(p.r);
          else if constexpr (std::is_same_v<T, StarForestPattern>) {
            Graph g(0);
            for (int r : p.degrees) g = disjoint_union(g, star_graph(r));
            return g;
          } else return broom_graph(p.ell, p.s);
        },
        v_);
  }

  /// Text form in the CLI grammar (`path:6`, `linear:5,3,2`, `star:4`,
  /// `stars:3,2,2`, `broom:6,3`).
  std::string text() const {
    auto join_list = [](const std::vector<int>& xs) {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
      return out;
    };
    return std::visit(
        [&](const auto& p) -> std::string {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, PathPattern>) return "path:" + std::to_string(p.ell);
          else if constexpr (std::is_same_v<T, LinearForestPattern>) return "linear:" + join_list(p.lengths);
          else if constexpr (std::is_same_v<T, StarPattern>) return "star:" + std::to_string(p.r);
          else if constexpr (std::is_same_v<T, StarForestPattern>) return "stars:" + join_list(p.degrees);
          else return "broom:" + std::to_string(p.ell) + "," + std::to_string(p.s);
        },
        v_);
  }

  friend bool operator==(const ForestPattern& a, const ForestPattern& b) { return a.text() == b.text(); }

 private:
  explicit ForestPattern(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

inline ForestPattern parse_pattern(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("pattern needs the form kind:args, got '" + std::string(text) + "'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view args = text.substr(colon + 1);
  auto ints = [&] {
    std::vector<int> out;
    for (auto part : detail::split(args, ',')) out.push_back(detail::parse_int(part, kind));
    return out;
  };
  if (kind == "path") {
    const auto xs = ints();
    detail::require(xs.size() == 1, "path pattern takes one length");
    return ForestPattern::path(xs[0]);
  }
  if (kind == "linear") return ForestPattern::linear_forest(ints());
  if (kind == "star") {
    const auto xs = ints();
    detail::require(xs.size() == 1, "star pattern takes one degree");
    return ForestPattern::star(xs[0]);
  }
  if (kind == "stars") return ForestPattern::star_forest(ints());
  if (kind == "broom") {
    const auto xs = ints();
    detail::require(xs.size() == 2, "broom pattern takes ell,s");
    return ForestPattern::broom(xs[0], xs[1]);
  }
  if (kind == "kpath") {
    const auto parts = detail::split(args, 'x');
    detail::require(parts.size() == 2, "kpath pattern takes KxELL");
    return ForestPattern::k_paths(detail::parse_int(parts[0], "k"), detail::parse_int(parts[1], "ell"));
  }
  throw Error("unknown pattern kind '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------------------
// Detection

enum class Verdict { absent, present, unknown };

/// Optional cap on backtracking steps. An exhausted budget turns the answer
/// into Verdict::unknown instead of a guess.
class StepBudget {
 public:
  StepBudget() = default;
  explicit StepBudget(std::uint64_t steps) : left_(steps), limited_(true) {}

  bool spend() {
    if (!limited_) return true;
    if (left_ == 0) {
      exhausted_ = true;
      return false;
    }
    --left_;
    return true;
  }
  bool exhausted() const { return exhausted_; }

 private:
  std::uint64_t left_ = 0;
  bool limited_ = false;
  bool exhausted_ = false;
};

namespace detail {

inline Verdict verdict(bool found, const StepBudget& budget) {
  if (found) return Verdict::present;
  return budget.exhausted() ? Verdict::unknown : Verdict::absent;
}

// twins[v] = vertices u with N(u) - v = N(v) - u (v included). Swapping two
// twins is an automorphism, so searches only need the lowest free twin.
inline std::vector<VertexMask> twin_classes(const Graph& g) {
  std::vector<VertexMask> twins(static_cast<std::size_t>(g.order()), 0);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (u == v || (g.row(u) & ~bit(v)) == (g.row(v) & ~bit(u))) twins[static_cast<std::size_t>(u)] |= bit(v);
    }
  }
  return twins;
}

// Enumerates directed simple paths on `ell` vertices inside `allowed`, up to
// swapping twins. `visit(order, mask)` returns true to stop the enumeration
// and must not distinguish twins. A `gate` may reject a vertex at a given
// path position; it must treat twins alike.
class PathEnumerator {
 public:
  using Visit = std::function<bool(const std::vector<int>&, VertexMask)>;
  using Gate = std::function<bool(int position, int vertex)>;

  PathEnumerator(const Graph& g, int ell, StepBudget& budget, const std::vector<VertexMask>* twins = nullptr)
      : g_(g), ell_(ell), budget_(budget) {
    order_.reserve(static_cast<std::size_t>(ell));
    if (twins != nullptr) {
      twins_ = *twins;
    } else {
      twins_ = twin_classes(g);
    }
  }

  void set_gate(Gate gate) { gate_ = std::move(gate); }

  bool run(VertexMask allowed, const Visit& visit) {
    allowed_ = allowed;
    visit_ = &visit;
    if (ell_ > std::popcount(allowed)) return false;
    for (VertexMask m = allowed; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (shadowed(v, allowed)) continue;
      if (!admit(0, v)) continue;
      if (ell_ > 1 && (g_.row(v) & allowed) == 0) continue;
      // Every path lies inside one component.
      if (std::popcount(g_.component_of(v, allowed)) < ell_) continue;
      order_.assign(1, v);
      if (extend(bit(v))) return true;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

 private:
  bool admit(int pos, int v) const { return !gate_ || gate_(pos, v); }

  // A lower-numbered twin of v is still available.
  bool shadowed(int v, VertexMask available) const {
    return (twins_[static_cast<std::size_t>(v)] & available & (bit(v) - 1)) != 0;
  }

  bool extend(VertexMask used) {
    if (!budget_.spend()) return false;
    const int len = static_cast<int>(order_.size());
    if (len == ell_) return (*visit_)(order_, used);
    const int end = order_.back();
    const int need = ell_ - len;
    const VertexMask free = allowed_ & ~used;
    if (need >= 3 && std::popcount(g_.component_of(end, free | bit(end))) - 1 < need) return false;
    for (VertexMask m = g_.row(end) & free; m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (shadowed(w, free)) continue;
      if (!admit(len, w)) continue;
      order_.push_back(w);
      const bool done = extend(used | bit(w));
      order_.pop_back();
      if (done) return true;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const Graph& g_;
  int ell_;
  StepBudget& budget_;
  Gate gate_;
  std::vector<VertexMask> twins_;
  VertexMask allowed_ = 0;
  const Visit* visit_ = nullptr;
  std::vector<int> order_;
};

struct MaskKey {
  std::size_t index;
  VertexMask mask;
  friend bool operator==(const MaskKey&, const MaskKey&) = default;
};
struct MaskKeyHash {
  std::size_t operator()(const MaskKey& k) const {
    return std::hash<VertexMask>{}(k.mask) ^ (k.index * 0x9e3779b97f4a7c15ULL);
  }
};

// Places the paths longest first, each in what is left of the vertex set.
// Failed (component index, remaining set) states are memoised.
class LinearForestSearch {
 public:
  LinearForestSearch(const Graph& g, std::vector<int> lengths, StepBudget& budget)
      : g_(g), lengths_(std::move(lengths)), budget_(budget), twins_(twin_classes(g)) {
    std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
  }

  bool run(VertexMask allowed) { return place(0, allowed); }

 private:
  bool place(std::size_t index, VertexMask remaining) {
    if (index == lengths_.size()) return true;
    int needed = 0;
    for (std::size_t i = index; i < lengths_.size(); ++i) needed += lengths_[i];
    if (needed > std::popcount(remaining)) return false;
    if (failed_.count(MaskKey{index, remaining}) > 0) return false;
    std::unordered_set<VertexMask> tried;
    PathEnumerator paths(g_, lengths_[index], budget_, &twins_);
    const bool found = paths.run(remaining, [&](const std::vector<int>&, VertexMask used) {
      if (!tried.insert(used).second) return false;
      return place(index + 1, remaining & ~used);
    });
    if (!found && !budget_.exhausted()) failed_.insert(MaskKey{index, remaining});
    return found;
  }

  const Graph& g_;
  std::vector<int> lengths_;
  StepBudget& budget_;
  std::vector<VertexMask> twins_;
  std::unordered_set<MaskKey, MaskKeyHash> failed_;
};

// Leaf assignment for fixed star centres: bipartite b-matching from centres
// (capacity r_i) to non-centre vertices (capacity 1), by augmenting paths.
class LeafAssignment {
 public:
  LeafAssignment(const Graph& g, const std::vector<int>& centres, const std::vector<int>& degrees,
                 VertexMask allowed)
      : g_(g), centres_(centres) {
    VertexMask centre_mask = 0;
    for (int c : centres) centre_mask |= bit(c);
    leaves_ = allowed & ~centre_mask;
    for (std::size_t i = 0; i < centres.size(); ++i) {
      for (int j = 0; j < degrees[i]; ++j) slot_owner_.push_back(static_cast<int>(i));
    }
    match_of_leaf_.assign(kMaxVertices, -1);
  }

  bool feasible() {
    for (std::size_t slot = 0; slot < slot_owner_.size(); ++slot) {
      seen_ = 0;
      if (!augment(static_cast<int>(slot))) return false;
    }
    return true;
  }

 private:
  bool augment(int slot) {
    const int centre = centres_[static_cast<std::size_t>(slot_owner_[static_cast<std::size_t>(slot)])];
    for (VertexMask m = g_.row(centre) & leaves_ & ~seen_; m != 0; m &= m - 1) {
      const int leaf = std::countr_zero(m);
      seen_ |= bit(leaf);
      const int holder = match_of_leaf_[static_cast<std::size_t>(leaf)];
      if (holder < 0 || augment(holder)) {
        match_of_leaf_[static_cast<std::size_t>(leaf)] = slot;
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  const std::vector<int>& centres_;
  VertexMask leaves_ = 0;
  VertexMask seen_ = 0;
  std::vector<int> slot_owner_;
  std::vector<int> match_of_leaf_;
};

class StarForestSearch {
 public:
  StarForestSearch(const Graph& g, std::vector<int> degrees, StepBudget& budget)
      : g_(g), degrees_(std::move(degrees)), budget_(budget) {
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
  }

  bool run(VertexMask allowed) {
    allowed_ = allowed;
    int needed = 0;
    for (int r : degrees_) needed += r + 1;
    if (needed > std::popcount(allowed)) return false;
    // Candidate centres in decreasing host degree.
    for (VertexMask m = allowed; m != 0; m &= m - 1) ranked_.push_back(std::countr_zero(m));
    std::stable_sort(ranked_.begin(), ranked_.end(), [&](int a, int b) { return local_degree(a) > local_degree(b); });
    centres_.clear();
    ranks_.clear();
    return choose(0, 0);
  }

 private:
  int local_degree(int v) const { return std::popcount(g_.row(v) & allowed_); }

  bool choose(std::size_t index, VertexMask chosen) {
    if (!budget_.spend()) return false;
    if (index == degrees_.size()) return LeafAssignment(g_, centres_, degrees_, allowed_).feasible();
    // Equal degrees are interchangeable: keep their centres in rank order.
    std::size_t first = 0;
    if (index > 0 && degrees_[index] == degrees_[index - 1]) first = ranks_.back() + 1;
    for (std::size_t rank = first; rank < ranked_.size(); ++rank) {
      const int v = ranked_[rank];
      if (local_degree(v) < degrees_[index]) break;  // sorted, nothing later qualifies
      if (chosen & bit(v)) continue;
      centres_.push_back(v);
      ranks_.push_back(rank);
      const bool ok = choose(index + 1, chosen | bit(v));
      centres_.pop_back();
      ranks_.pop_back();
      if (ok) return true;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> degrees_;
  StepBudget& budget_;
  VertexMask allowed_ = 0;
  std::vector<int> ranked_;
  std::vector<int> centres_;
  std::vector<std::size_t> ranks_;
};

// Injective vertex-map backtracking for an arbitrary forest pattern.
class ForestEmbedding {
 public:
  ForestEmbedding(const Graph& host, const Graph& pattern, StepBudget& budget)
      : host_(host), pattern_(pattern), budget_(budget) {
    const int k = pattern.order();
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    parent_.assign(static_cast<std::size_t>(k), -1);
    // Components in order of decreasing size; BFS within each.
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < k; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      std::vector<int> comp{s};
      seen[static_cast<std::size_t>(s)] = true;
      for (std::size_t head = 0; head < comp.size(); ++head) {
        const int x = comp[head];
        for (int y = 0; y < k; ++y) {
          if (pattern.has_edge(x, y) && !seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = true;
            parent_[static_cast<std::size_t>(y)] = x;
            comp.push_back(y);
          }
        }
      }
      comps.push_back(std::move(comp));
    }
    std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (const auto& c : comps) order_.insert(order_.end(), c.begin(), c.end());
    image_.assign(static_cast<std::size_t>(k), -1);
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(std::size_t pos, VertexMask used) {
    if (!budget_.spend()) return false;
    if (pos == order_.size()) return true;
    const int x = order_[pos];
    const int parent = parent_[static_cast<std::size_t>(x)];
    const int need = pattern_.degree(x);
    VertexMask cand = parent < 0 ? host_.vertices() : host_.row(image_[static_cast<std::size_t>(parent)]);
    cand &= ~used;
    for (VertexMask m = cand; m != 0; m &= m - 1) {
      const int u = std::countr_zero(m);
      if (host_.degree(u) < need) continue;
      image_[static_cast<std::size_t>(x)] = u;
      if (extend(pos + 1, used | bit(u))) return true;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  StepBudget& budget_;
  std::vector<int> order_;
  std::vector<int> parent_;
  std::vector<int> image_;
};

inline bool is_forest(const Graph& g) {
  int components = 0;
  VertexMask left = g.vertices();
  while (left != 0) {
    const int v = std::countr_zero(left);
    left &= ~g.component_of(v);
    ++components;
  }
  return g.edge_count() == g.order() - components;
}

}  // namespace detail

inline Verdict detect_path(const Graph& g, int ell, StepBudget& budget, VertexMask allowed) {
  detail::require(ell >= 2, "path length must be >= 2");
  detail::PathEnumerator paths(g, ell, budget);
  const bool found = paths.run(allowed & g.vertices(), [](const auto&, VertexMask) { return true; });
  return detail::verdict(found, budget);
}

inline Verdict detect_linear_forest(const Graph& g, const std::vector<int>& lengths, StepBudget& budget,
                                    VertexMask allowed) {
  for (int len : lengths) detail::require(len >= 2, "linear forest component lengths must be >= 2");
  detail::LinearForestSearch search(g, lengths, budget);
  return detail::verdict(search.run(allowed & g.vertices()), budget);
}

inline Verdict detect_star_forest(const Graph& g, const std::vector<int>& degrees, StepBudget& budget,
                                  VertexMask allowed) {
  for (int r : degrees) detail::require(r >= 1, "star forest degrees must be >= 1");
  detail::StarForestSearch search(g, degrees, budget);
  return detail::verdict(search.run(allowed & g.vertices()), budget);
}

/// A path v_1..v_ell plus s further neighbours of v_{ell-1} off the path.
/// Directed enumeration visits both orientations, so only one end is checked.
inline Verdict detect_broom(const Graph& g, int ell, int s, StepBudget& budget, VertexMask allowed) {
  detail::require(ell >= 4, "broom needs ell >= 4");
  detail::require(s >= 0, "broom needs s >= 0");
  allowed &= g.vertices();
  detail::PathEnumerator paths(g, ell, budget);
  paths.set_gate([&](int position, int v) {
    return position != ell - 2 || std::popcount(g.row(v) & allowed) >= s + 2;
  });
  const bool found = paths.run(allowed, [&](const std::vector<int>& order, VertexMask used) {
    const int centre = order[static_cast<std::size_t>(ell - 2)];
    return std::popcount(g.row(centre) & allowed & ~used) >= s;
  });
  return detail::verdict(found, budget);
}

/// Generic containment of an explicit forest pattern.
inline Verdict detect_forest_generic(const Graph& g, const Graph& pattern, StepBudget& budget) {
  if (!detail::is_forest(pattern)) throw Error("pattern graph is not a forest");
  if (pattern.order() > g.order()) return Verdict::absent;
  detail::ForestEmbedding search(g, pattern, budget);
  return detail::verdict(search.run(), budget);
}

inline Verdict detect(const Graph& g, const ForestPattern& f, StepBudget& budget,
                      VertexMask allowed = ~VertexMask{0}) {
  return std::visit(
      [&](const auto& p) -> Verdict {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PathPattern>) return detect_path(g, p.ell, budget, allowed);
        else if constexpr (std::is_same_v<T, LinearForestPattern>)
          return detect_linear_forest(g, p.lengths, budget, allowed);
        else if constexpr (std::is_same_v<T, StarPattern>) return detect_star_forest(g, {p.r}, budget, allowed);
        else if constexpr (std::is_same_v<T, StarForestPattern>)
          return detect_star_forest(g, p.degrees, budget, allowed);
        else return detect_broom(g, p.ell, p.s, budget, allowed);
      },
      f.variant());
}

namespace detail {
inline bool definite(Verdict v) {
  if (v == Verdict::unknown) throw Error("detector budget exhausted");
  return v == Verdict::present;
}
}  // namespace detail

// Unbudgeted boolean forms.

inline bool contains_path(const Graph& g, int ell) {
  StepBudget budget;
  return detail::definite(detect_path(g, ell, budget, g.vertices()));
}

inline bool contains_linear_forest(const Graph& g, const std::vector<int>& lengths) {
  StepBudget budget;
  return detail::definite(detect_linear_forest(g, lengths, budget, g.vertices()));
}

inline bool contains_star_forest(const Graph& g, const std::vector<int>& degrees) {
  StepBudget budget;
  return detail::definite(detect_star_forest(g, degrees, budget, g.vertices()));
}

inline bool contains_broom(const Graph& g, int ell, int s) {
  StepBudget budget;
  return detail::definite(detect_broom(g, ell, s, budget, g.vertices()));
}

inline bool contains_forest_generic(const Graph& g, const Graph& pattern) {
  StepBudget budget;
  return detail::definite(detect_forest_generic(g, pattern, budget));
}

inline bool contains_forest_generic(const Graph& g, int pattern_order, const std::vector<std::pair<int, int>>& edges) {
  return contains_forest_generic(g, Graph::from_edges(pattern_order, edges));
}

inline bool is_free(const Graph& g, const ForestPattern& f) {
  StepBudget budget;
  return !detail::definite(detect(g, f, budget));
}

}  // namespace turanp
