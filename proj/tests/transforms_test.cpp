#include "support.hpp"

#include <gtest/gtest.h>

using namespace turanp;

namespace {

// Star at 0 with leaves 1..leaves; the structure hangs off vertex 1.
Graph star_host(int n, int leaves) {
  Graph g(n);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  return d;
}

}  // namespace

TEST(Transforms, KindNames) {
  for (auto k : {SiteKind::edge, SiteKind::triangle, SiteKind::diamond, SiteKind::spindle, SiteKind::spindle_plus})
    EXPECT_EQ(parse_site_kind(to_string(k)), k);
  EXPECT_THROW(parse_site_kind("pentagon"), Error);
}

TEST(Transforms, PendantPathHasOneEdgeSite) {
  Graph g = star_host(6, 4);  // v=0, leaves 1..4
  g.add_edge(1, 5);           // v - x=1 - y=5
  const auto sites = find_sites(g, 0);
  ASSERT_EQ(sites.size(), 1U);
  EXPECT_EQ(sites[0].kind, SiteKind::edge);
  EXPECT_EQ(sites[0].anchor, 1);
  EXPECT_EQ(sites[0].leaves, (std::vector<int>{5}));
}

TEST(Transforms, TriangleSite) {
  Graph g = star_host(7, 4);
  g.add_edge(1, 5);
  g.add_edge(1, 6);
  g.add_edge(5, 6);
  const auto sites = find_sites(g, 0);
  ASSERT_EQ(sites.size(), 1U);
  EXPECT_EQ(sites[0].kind, SiteKind::triangle);
  EXPECT_EQ(sites[0].anchor, 1);
}

TEST(Transforms, CompleteGraphHasNoSites) {
  for (int v = 0; v < 4; ++v) EXPECT_TRUE(find_sites(complete_graph(4), v).empty());
}

TEST(Transforms, Errors) {
  EXPECT_THROW(find_sites(empty_graph(3), 0), Error);
  EXPECT_THROW(find_sites(complete_graph(3), 3), Error);
}

TEST(Transforms, EdgeRewrite) {
  Graph g = star_host(7, 5);
  g.add_edge(1, 6);
  const auto site = find_sites(g, 0).at(0);
  const Graph out = apply(g, 0, site, 5, 1);
  EXPECT_TRUE(out.has_edge(0, 6));
  EXPECT_FALSE(out.has_edge(1, 6));
  for (unsigned p = 2; p <= 4; ++p) EXPECT_GT(ep_value(out, p), ep_value(g, p));
  EXPECT_TRUE(out.is_connected());
}

TEST(Transforms, TriangleRewriteDegrees) {
  Graph g = star_host(8, 5);
  g.add_edge(1, 6);
  g.add_edge(1, 7);
  g.add_edge(6, 7);
  const auto site = find_sites(g, 0).at(0);
  ASSERT_EQ(site.kind, SiteKind::triangle);
  const Graph out = apply(g, 0, site, 5, 0);
  const auto before = degrees(g);
  const auto after = degrees(out);
  EXPECT_EQ(before[6], 2);
  EXPECT_EQ(after[6], 1);
  EXPECT_EQ(after[7], 1);
  EXPECT_EQ(after[0], before[0] + 2);
  EXPECT_EQ(after[1], before[1] - 2);
}

TEST(Transforms, SpindlePlusRewriteDegrees) {
  // x=1, hub z=6, leaves 7,8; z adjacent to x as well.
  Graph g = star_host(9, 5);
  for (int y : {7, 8}) {
    g.add_edge(1, y);
    g.add_edge(6, y);
  }
  g.add_edge(1, 6);
  const auto sites = find_sites(g, 0);
  const auto it = std::find_if(sites.begin(), sites.end(), [](const PendentSite& s) { return s.kind == SiteKind::spindle_plus; });
  ASSERT_NE(it, sites.end());
  EXPECT_EQ(it->t(), 2);
  EXPECT_EQ(g.degree(6), 3);
  const Graph out = apply(g, 0, *it, 5, 0);
  EXPECT_EQ(out.degree(6), 1);
  for (unsigned p = 2; p <= 4; ++p) EXPECT_GT(ep_value(out, p), ep_value(g, p));
}

TEST(Transforms, DiamondRequiresNoAnchorHubEdge) {
  Graph g = star_host(9, 5);
  // x=1; y=6, y'=7, hub z=8
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 6}, {1, 7}, {6, 7}, {8, 6}, {8, 7}}) g.add_edge(a, b);
  auto sites = find_sites(g, 0);
  EXPECT_TRUE(std::any_of(sites.begin(), sites.end(), [](const PendentSite& s) { return s.kind == SiteKind::diamond; }));
  g.add_edge(1, 8);
  sites = find_sites(g, 0);
  EXPECT_FALSE(std::any_of(sites.begin(), sites.end(), [](const PendentSite& s) { return s.kind == SiteKind::diamond; }));
}

TEST(Transforms, ApplyRejectsStaleAndSmallDelta) {
  Graph g = star_host(7, 5);
  g.add_edge(1, 6);
  const auto site = find_sites(g, 0).at(0);
  EXPECT_THROW(apply(g, 0, site, 6, 1), Error);  // needs d(v) >= 6
  Graph changed = g;
  changed.add_edge(2, 6);
  EXPECT_THROW(apply(changed, 0, site, 5, 0), Error);
  EXPECT_THROW(apply(g, 2, site, 2, 0), Error);
}

// Random hosts: each rewrite raises e_p, raises only d(v), keeps v maximal.
TEST(Transforms, GeneratedInstances) {
  std::mt19937_64 rng(31);
  for (auto kind : {SiteKind::edge, SiteKind::triangle, SiteKind::diamond, SiteKind::spindle, SiteKind::spindle_plus}) {
    for (int i = 0; i < 40; ++i) {
      const auto inst = generate_rewrite_instance(kind, rng);
      ASSERT_LE(inst.host.order(), 16);
      const auto sites = find_sites(inst.host, inst.v);
      EXPECT_NE(std::find(sites.begin(), sites.end(), inst.site), sites.end());
      const Graph out = apply(inst.host, inst.v, inst.site, 5, 0);
      for (int u = 0; u < out.order(); ++u) {
        if (u == inst.v) EXPECT_GT(out.degree(u), inst.host.degree(u));
        else EXPECT_LE(out.degree(u), inst.host.degree(u));
      }
      EXPECT_EQ(out.degree(inst.v), out.max_degree());
      EXPECT_TRUE(out.is_connected());
      for (unsigned p = 2; p <= 4; ++p) EXPECT_GT(ep_value(out, p), ep_value(inst.host, p));
    }
  }
}
