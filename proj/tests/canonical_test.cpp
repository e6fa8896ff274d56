#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace turanp;

namespace {

// Isomorphism by trying every permutation.
bool brute_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) {
      if (!b.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST(Canonical, ElevenClassesOnFourVertices) {
  std::set<CanonicalCode> codes;
  for (std::uint64_t bits = 0; bits < 64; ++bits) codes.insert(canonical_code(ref::graph_from_bits(4, bits)));
  EXPECT_EQ(codes.size(), 11U);
}

TEST(Canonical, ClassCountsMatchBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Graph> reps;
    std::set<CanonicalCode> codes;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
      const Graph g = ref::graph_from_bits(n, bits);
      codes.insert(canonical_code(g));
      if (std::none_of(reps.begin(), reps.end(), [&](const Graph& h) { return brute_isomorphic(g, h); })) {
        reps.push_back(g);
      }
    }
    EXPECT_EQ(codes.size(), reps.size()) << "n=" << n;
  }
}

TEST(Canonical, RelabelInvariance) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 8;
    const Graph g = ref::random_graph(n, 0.45, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_TRUE(isomorphic(g, h));
  }
}

TEST(Canonical, DistinguishesNonIsomorphic) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph a = ref::random_graph(6, 0.5, rng);
    const Graph b = ref::random_graph(6, 0.5, rng);
    EXPECT_EQ(isomorphic(a, b), brute_isomorphic(a, b));
  }
}

TEST(Canonical, CapEnforced) {
  EXPECT_NO_THROW(canonical_code(complete_graph(kCanonicalCap)));
  EXPECT_THROW(canonical_code(complete_graph(kCanonicalCap + 1)), Error);
}
