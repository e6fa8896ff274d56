#include "support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace turanp;

namespace {

VerifyConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace

TEST(VerifyConfig, Defaults) {
  const auto c = parse("");
  EXPECT_TRUE(c.only.empty());
  EXPECT_EQ(c.n_max, 60);
  EXPECT_EQ(c.oracle_n, (std::pair<int, int>{2, 8}));
  EXPECT_EQ(c.large_n, (std::vector<int>{200, 500}));
}

TEST(VerifyConfig, ParsesKeys) {
  const auto c = parse("# comment\nonly = lemmas, rewrites\nn_max=30  # trailing\nlarge_n=100\np_max=3\n"
                       "oracle_n=3:7\nthreads=2\nseed=9\nrewrite_instances=5\n");
  EXPECT_EQ(c.only, (std::vector<Suite>{Suite::lemmas, Suite::rewrites}));
  EXPECT_EQ(c.n_max, 30);
  EXPECT_EQ(c.large_n, (std::vector<int>{100}));
  EXPECT_EQ(c.p_max, 3U);
  EXPECT_EQ(c.oracle_n, (std::pair<int, int>{3, 7}));
  EXPECT_EQ(c.threads, 2);
  EXPECT_EQ(c.seed, 9U);
  EXPECT_EQ(c.rewrite_instances, 5);
  EXPECT_TRUE(c.wants(Suite::lemmas));
  EXPECT_FALSE(c.wants(Suite::oracle));
}

TEST(VerifyConfig, Malformed) {
  EXPECT_THROW(parse("n_max\n"), Error);
  EXPECT_THROW(parse("colour=blue\n"), Error);
  EXPECT_THROW(parse("oracle_n=8:3\n"), Error);
  EXPECT_THROW(parse("only=nothing\n"), Error);
  EXPECT_THROW(parse("override_cap=maybe\n"), Error);
}

TEST(VerifyConfig, OracleCapNamedInError) {
  try {
    parse("oracle_n=2:9\n");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("cap of 8"), std::string::npos) << e.what();
  }
  EXPECT_NO_THROW(parse("oracle_n=2:9\noverride_cap=true\n"));
  EXPECT_THROW(parse("oracle_n=2:10\noverride_cap=true\n"), Error);
}

TEST(VerifySuites, SuiteNames) {
  for (const auto& [suite, name] : suite_names()) EXPECT_EQ(parse_suite(to_string(suite)), suite);
  EXPECT_EQ(suite_names().size(), 7U);
}

TEST(VerifySuites, FastSuitesPass) {
  VerifyConfig c;
  c.rewrite_instances = 10;
  c.absorb_tuples = 10;
  for (Suite s : {Suite::lemmas, Suite::rewrites, Suite::counterexample}) {
    const auto r = run_suite(s, c);
    EXPECT_TRUE(r.pass()) << to_string(s) << ": " << (r.messages.empty() ? "" : r.messages[0]);
    EXPECT_GT(r.cases, 0);
  }
}

TEST(VerifySuites, OnlyFilters) {
  VerifyConfig c;
  c.only = {Suite::counterexample};
  const auto results = verify_suite(c);
  ASSERT_EQ(results.size(), 1U);
  EXPECT_EQ(results[0].suite, Suite::counterexample);
}

TEST(VerifySuites, AbsorbTuplesSatisfyPreconditions) {
  for (auto variant : {LemmaVariant::k1_matching, LemmaVariant::h_path}) {
    const auto tuples = sample_absorb_tuples(variant, 50, 1);
    EXPECT_EQ(tuples.size(), 50U);
    for (const auto& t : tuples) {
      const std::int64_t root = t.ell + t.s + t.d;
      EXPECT_GT(t.h + t.hstar, root * root);
      EXPECT_GE(t.h, t.ell);
      EXPECT_GT(t.hstar, 0);
    }
  }
}

TEST(VerifySuites, ReferenceSummationMatchesGraphs) {
  for (int n = 6; n <= 30; ++n) {
    for (unsigned p = 1; p <= 4; ++p) {
      EXPECT_EQ(detail::reference::turan(n, 3, p), ref::degree_power(turan_graph(n, 3), p));
      EXPECT_EQ(detail::reference::clique_join_matching(n, 2, p), ref::degree_power(k_join_matching(n, 2), p));
      EXPECT_EQ(detail::reference::complete_bipartite(n, n / 2 - 1, p), ref::degree_power(unbalanced_bipartite(n), p));
    }
  }
}
