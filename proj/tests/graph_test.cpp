#include "support.hpp"

#include <gtest/gtest.h>

using namespace turanp;

TEST(Graph, BasicOperations) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.edge_count(), 2);
  g.remove_edge(0, 1);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_FALSE(g.is_connected());
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), Error);
  EXPECT_THROW(g.add_edge(0, 3), Error);
  EXPECT_THROW(Graph(65), CapacityError);
  EXPECT_THROW(Graph(-1), Error);
}

TEST(Graph, EpExamples) {
  EXPECT_EQ(ep_value(complete_graph(4), 2), ref::degree_power(complete_graph(4), 2));
  EXPECT_EQ(ep_value(complete_graph(4), 2), 36);
  EXPECT_EQ(ep_value(empty_graph(7), 3), 0);
  // H(10,5): one universal vertex, one extra edge among the rest.
  const std::vector<std::int64_t> h105{9, 2, 2, 1, 1, 1, 1, 1, 1, 1};
  EXPECT_EQ(ep_value(h_path(10, 5), 2), ref::list_power(h105, 2));
  EXPECT_EQ(ep_value(h_path(10, 5), 2), 96);
  EXPECT_THROW(ep_value(complete_graph(3), 0), Error);
}

TEST(Graph, DegreeSequences) {
  EXPECT_EQ(degree_sequence(star_graph(4)).values(), (std::vector<int>{4, 1, 1, 1, 1}));
  EXPECT_EQ(degree_sequence(matching_graph(5)).values(), (std::vector<int>{1, 1, 1, 1, 0}));
  EXPECT_EQ(DegreeSequence({1, 3, 2}).values(), (std::vector<int>{3, 2, 1}));
}

TEST(Graph, Dominance) {
  const auto a = DegreeSequence({3, 2, 2, 1});
  const auto b = DegreeSequence({2, 2, 2, 1});
  const auto c = DegreeSequence({4, 1, 1, 1});
  EXPECT_TRUE(dominates(a, b).dominates);
  EXPECT_TRUE(dominates(a, b).strict);
  EXPECT_TRUE(dominates(a, a).dominates);
  EXPECT_FALSE(dominates(a, a).strict);
  EXPECT_FALSE(dominates(a, c).dominates);
  EXPECT_FALSE(dominates(c, a).dominates);
  EXPECT_THROW(dominates(a, DegreeSequence({1})), Error);
}

TEST(Graph, UnionJoinInducedRelabel) {
  const Graph u = disjoint_union(complete_graph(3), path_graph(3));
  EXPECT_EQ(u.order(), 6);
  EXPECT_EQ(u.edge_count(), 5);
  const Graph j = join(empty_graph(2), empty_graph(3));
  EXPECT_EQ(j.edge_count(), 6);
  EXPECT_EQ(join(complete_graph(2), complete_graph(3)), complete_graph(5));
  EXPECT_EQ(induced(complete_graph(5), 0b10101).edge_count(), 3);
  const Graph r = relabel(path_graph(3), {2, 0, 1});
  EXPECT_EQ(r.edge_count(), 2);
  EXPECT_EQ(degree_sequence(r), degree_sequence(path_graph(3)));
}

TEST(Graph, Handshake) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 30;
    const Graph g = ref::random_graph(n, 0.3, rng);
    EXPECT_EQ(ep_value(g, 1), 2 * g.edge_count());
    for (unsigned p = 2; p <= 4; ++p) EXPECT_EQ(ep_value(g, p), ref::degree_power(g, p));
  }
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(g6_encode(complete_graph(3)), "Bw");
  EXPECT_EQ(g6_encode(empty_graph(1)), "@");
  EXPECT_EQ(g6_encode(empty_graph(0)), "?");
  EXPECT_EQ(g6_decode("Bw"), complete_graph(3));
  EXPECT_EQ(g6_decode("@"), empty_graph(1));
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(g6_decode(""), Error);
  EXPECT_THROW(g6_decode("B"), Error);     // missing payload
  EXPECT_THROW(g6_decode("Bww"), Error);   // trailing byte
  EXPECT_THROW(g6_decode("B\x20"), Error); // byte below 63
  EXPECT_THROW(g6_decode("Bx"), Error);    // padding bits set
}

TEST(Graph6, LongHeaderRoundTrip) {
  std::mt19937_64 rng(3);
  for (int n : {62, 63, 64}) {
    const Graph g = ref::random_graph(n, 0.2, rng);
    const std::string s = g6_encode(g);
    if (n >= 63) {
      EXPECT_EQ(static_cast<unsigned char>(s[0]), 126);
    }
    EXPECT_EQ(g6_decode(s), g);
  }
}
