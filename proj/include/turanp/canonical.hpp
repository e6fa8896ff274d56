#pragma once

#include <turanp/error.hpp>
#include <turanp/graph.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace turanp {

/// Largest order accepted by canonical_code.
inline constexpr int kCanonicalCap = 10;

/// Byte string identifying an isomorphism class (n <= kCanonicalCap).
struct CanonicalCode {
  std::string bytes;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

namespace detail {

// Iterated degree refinement. Colours are ranks of isomorphism-invariant
// signatures, so the resulting ordered partition is itself invariant.
inline std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(colour[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for (int u = 0; u < n; ++u) {
        if (g.has_edge(u, v)) around.push_back(colour[static_cast<std::size_t>(u)]);
      }
      std::sort(around.begin(), around.end());
      s.push_back(static_cast<int>(around.size()));
      s.insert(s.end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    std::vector<int> updated(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      updated[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
    }
    const bool stable = updated == colour;
    colour = std::move(updated);
    if (stable) break;
  }
  return colour;
}

// Searches orderings that keep colour classes contiguous and in colour
// order; emits upper-triangle bits column by column so that every placed
// vertex fixes a prefix of the code, which allows lexicographic pruning.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    colour_ = refine_colours(g);
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    order_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
    bits_.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2));
  }

  std::string run() {
    place(0);
    return best_;
  }

 private:
  // Prefix comparison is against the current best, which may change while
  // siblings are still being explored.
  bool above_best() const {
    return have_best_ && std::string_view(bits_) > std::string_view(best_).substr(0, bits_.size());
  }

  void place(int pos) {
    if (pos == n_) {
      if (!have_best_ || bits_ < best_) {
        best_ = bits_;
        have_best_ = true;
      }
      return;
    }
    const int want = slot_colour_[static_cast<std::size_t>(pos)];
    for (int v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)] || colour_[static_cast<std::size_t>(v)] != want) continue;
      const std::size_t mark = bits_.size();
      for (int i = 0; i < pos; ++i) {
        bits_.push_back(g_.has_edge(order_[static_cast<std::size_t>(i)], v) ? '1' : '0');
      }
      if (!above_best()) {
        used_[static_cast<std::size_t>(v)] = true;
        order_[static_cast<std::size_t>(pos)] = v;
        place(pos + 1);
        used_[static_cast<std::size_t>(v)] = false;
      }
      bits_.resize(mark);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<int> order_;
  std::vector<bool> used_;
  std::string bits_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace detail

/// Canonical form by refinement-pruned permutation search. Capped at
/// kCanonicalCap vertices.
inline CanonicalCode canonical_code(const Graph& g) {
  if (g.order() > kCanonicalCap) {
    throw Error("canonical_code supports at most " + std::to_string(kCanonicalCap) +
                " vertices, got " + std::to_string(g.order()));
  }
  detail::CanonicalSearch search(g);
  std::string bits = search.run();
  // Leading byte carries n; the colour multiset is implied by the bits.
  std::string code(1, static_cast<char>(g.order()));
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    unsigned char byte = 0;
    for (std::size_t j = 0; j < 8; ++j) {
      byte = static_cast<unsigned char>(byte << 1);
      if (i + j < bits.size() && bits[i + j] == '1') byte |= 1U;
    }
    code.push_back(static_cast<char>(byte));
  }
  return CanonicalCode{std::move(code)};
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

}  // namespace turanp
