#include "support.hpp"

#include <gtest/gtest.h>

using namespace turanp;

namespace {

BigCount val(const FormulaResult& r) { return r.value; }

// Maximum over a = floor(n/(l-1)) blocks of K_{l-1} plus K_b: the
// edge count of disjoint cliques, evaluated block by block.
std::int64_t clique_blocks_edges(std::int64_t n, std::int64_t block) {
  std::int64_t edges = 0;
  while (n >= block) {
    edges += block * (block - 1) / 2;
    n -= block;
  }
  return edges + n * (n - 1) / 2;
}

}  // namespace

TEST(Formulas, ClassicalPath) {
  EXPECT_EQ(val(ex_path(10, 5)), 13);
  EXPECT_EQ(val(ex_path(7, 3)), 3);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(val(ex_path(n, 2)), 0);
  for (int ell = 2; ell <= 9; ++ell)
    for (int n = 0; n <= 60; ++n) EXPECT_EQ(val(ex_path(n, ell)), clique_blocks_edges(n, ell - 1));
  EXPECT_EQ(eg_bound(9, 4), 9);
  EXPECT_EQ(eg_bound(10, 5), 15);
  EXPECT_EQ(eg_bound(17, 2), 0);
}

TEST(Formulas, ClassicalLinearForest) {
  EXPECT_EQ(val(ex_linear_forest(10, {4, 2})), 17);
  EXPECT_EQ(val(ex_linear_forest(6, {2, 2})), 5);
  EXPECT_EQ(val(ex_linear_forest(10, {5, 3})), 18);
  EXPECT_THROW(ex_linear_forest(10, {3, 3}), Error);
  EXPECT_EQ(val(ex_linear_forest(10, {6})), val(ex_path(10, 6)));
  for (int n = 10; n <= 40; ++n) {
    for (auto lengths : std::vector<std::vector<int>>{{4, 2}, {5, 3}, {2, 2, 2}, {6, 4}, {5, 5}}) {
      EXPECT_EQ(val(ex_linear_forest(n, lengths)), h_linear_forest(n, lengths).edge_count());
    }
  }
}

TEST(Formulas, ClassicalKP3) {
  EXPECT_EQ(val(ex_kP3(11, 2)), 15);
  EXPECT_EQ(val(ex_kP3(13, 3)), 28);
  for (int n = 1; n <= 30; ++n) EXPECT_EQ(val(ex_kP3(n, 1)), n / 2);
  for (int k = 1; k <= 5; ++k)
    for (int n = k; n <= 40; ++n) EXPECT_EQ(val(ex_kP3(n, k)), k_join_matching(n, k).edge_count());
}

TEST(Formulas, ClassicalStarForest) {
  const auto a = ex_star_forest(10, {3, 2});
  EXPECT_EQ(a.value, 13);
  EXPECT_EQ(a.argmax, (std::vector<int>{2}));
  EXPECT_EQ(val(ex_star_forest(9, {1})), 0);
  const auto b = ex_star_forest(12, {2, 2, 2});
  // i=1: 6, i=2: 11+0+5 = 16, i=3: 20+1+5 = 26
  EXPECT_EQ(b.value, 26);
  EXPECT_EQ(b.argmax, (std::vector<int>{3}));
  for (int n = 8; n <= 30; ++n) {
    for (auto rs : std::vector<std::vector<int>>{{3, 2}, {2, 2, 2}, {4, 1}, {3, 3, 1}}) {
      const auto r = ex_star_forest(n, rs);
      for (int i : r.argmax) EXPECT_EQ(r.value, g_star_join(n, i, rs[i - 1]).edge_count());
    }
  }
}

TEST(Formulas, ClassicalBrooms) {
  EXPECT_EQ(val(ex_broom4(14, 3)), 31);
  EXPECT_EQ(val(ex_broom4(12, 3)), 30);
  for (int s = 1; s <= 6; ++s) EXPECT_EQ(val(ex_broom4(s + 4, s)), (s + 3) * (s + 2) / 2);
  EXPECT_THROW(ex_broom4(4, 1), Error);
  EXPECT_EQ(val(ex_broom5_partial(12, 2)), 30);
  const auto partial = ex_broom5_partial(13, 2);
  EXPECT_EQ(partial.value, 15);
  ASSERT_TRUE(partial.unspecified.has_value());
  EXPECT_EQ(partial.unspecified->base_n, 7);
  EXPECT_EQ(val(ex_broom5_partial(14, 1)), 26);
  EXPECT_FALSE(ex_broom5_partial(14, 1).unspecified.has_value());
}

TEST(Formulas, PowerPathExamples) {
  for (unsigned p = 1; p <= 5; ++p) EXPECT_EQ(val(exp_path(7, 3, p)), 6);
  EXPECT_EQ(val(exp_path(10, 6, 2)), 194);
  EXPECT_EQ(val(exp_path(10, 5, 2)), 96);
  EXPECT_EQ(val(exp_path(10, 6, 2)), ref::degree_power(h_path(10, 6), 2));
  EXPECT_FALSE(exp_path(10, 6, 2).in_window);
  EXPECT_THROW(exp_path(10, 6, 1), Error);
  EXPECT_EQ(val(exp_path(9, 2, 3)), 0);
}

TEST(Formulas, PowerStarExamples) {
  EXPECT_EQ(val(exp_star(5, 3, 2)), 20);
  EXPECT_EQ(val(exp_star(5, 4, 2)), 40);
  EXPECT_EQ(val(exp_star(3, 5, 2)), 12);
}

TEST(Formulas, PowerStarForestExamples) {
  EXPECT_EQ(val(exp_star_forest(9, {2, 2}, 2)), 96);
  EXPECT_EQ(val(exp_star_forest(8, {3, 3}, 2)), 112);
  EXPECT_EQ(val(exp_star_forest(8, {3, 3}, 2)), ref::degree_power(join(complete_graph(1), near_regular(7, 2)), 2));
  EXPECT_EQ(val(exp_star_forest(8, {2, 2}, 2)), 74);
  EXPECT_THROW(exp_star_forest(8, {3}, 2), Error);
}

TEST(Formulas, PowerLinearForestExamples) {
  EXPECT_EQ(val(exp_linear_forest(10, {4, 2}, 2)), 194);
  EXPECT_EQ(val(exp_linear_forest(10, {5, 3}, 2)), 204);
  for (int n = 4; n <= 30; ++n) {
    for (unsigned p = 2; p <= 4; ++p) {
      EXPECT_EQ(val(exp_linear_forest(n, {2, 2}, p)), ref::ipow(n - 1, p) + (n - 1));
      EXPECT_EQ(val(exp_linear_forest(n, {2, 2}, p)), val(exp_star_forest(n, {1, 1}, p)));
    }
  }
  EXPECT_THROW(exp_linear_forest(12, {3, 3}, 2), Error);
}

TEST(Formulas, PowerKP3Examples) {
  EXPECT_EQ(val(exp_kP3(9, 2, 2)), 96);
  EXPECT_EQ(val(exp_kP3(8, 2, 2)), 74);
  for (int k = 2; k <= 8; ++k)
    for (unsigned p = 2; p <= 4; ++p) EXPECT_EQ(val(exp_kP3(k, k, p)), k * ref::ipow(k - 1, p));
  EXPECT_THROW(exp_kP3(3, 4, 2), Error);
}

TEST(Formulas, PowerBroomExamples) {
  const auto a = exp_broom(10, 4, 2, 2);
  EXPECT_EQ(a.value, 90);
  EXPECT_FALSE(a.in_window);
  EXPECT_TRUE(exp_broom(13, 4, 2, 2).in_window);
  const auto b = exp_broom(200, 5, 3, 2);
  EXPECT_EQ(b.value, ref::list_power([] {
              std::vector<std::int64_t> d{199};
              for (int i = 0; i < 198; ++i) d.push_back(2);
              d.push_back(1);
              return d;
            }(),
                                     2));
  EXPECT_EQ(b.value, 40394);
  EXPECT_FALSE(b.in_window);
  for (int n = 8; n <= 40; ++n)
    for (int s = 0; s <= 3; ++s) EXPECT_EQ(val(exp_broom(n, 6, s, 3)), val(exp_path(n, 6, 3)));
  EXPECT_THROW(exp_broom(20, 8, 1, 2), Error);
}

TEST(Formulas, PowerTuranClique) {
  EXPECT_EQ(val(exp_turan_clique(6, 2, 2)), 54);
  EXPECT_EQ(val(exp_turan_clique(100, 2, 4)), 625000000);
  for (int n = 2; n <= 20; ++n) {
    EXPECT_EQ(val(exp_turan_clique(n, n, 1)), n * (n - 1));
    // T_{n-1}(n) misses exactly one edge of K_n.
    EXPECT_EQ(val(exp_turan_clique(n, n - 1, 1)), n * (n - 1) - 2);
  }
  EXPECT_TRUE(exp_turan_clique(10, 3, 3).in_window);
  EXPECT_FALSE(exp_turan_clique(10, 3, 4).in_window);
}

// Each closed form against e_p of its construction, evaluated through the
// reference adjacency-matrix summation.
TEST(Formulas, ConstructionConsistency) {
  for (int n = 2; n <= 40; ++n) {
    for (unsigned p = 1; p <= 5; ++p) {
      for (int r = 1; r <= 6; ++r) {
        if (n > r - 1) {
          EXPECT_EQ(val(exp_star(n, r, p)), ref::degree_power(near_regular(n, r - 1), p));
        }
        EXPECT_EQ(val(exp_turan_clique(n, r, p)), ref::degree_power(turan_graph(n, r), p));
      }
      if (p < 2) continue;
      for (int ell = 4; ell <= 9 && ell <= n; ++ell)
        EXPECT_EQ(val(exp_path(n, ell, p)), ref::degree_power(h_path(n, ell), p));
      for (auto lengths : std::vector<std::vector<int>>{{4, 2}, {5, 3}, {4, 4}, {6, 3, 2}}) {
        if (n >= std::accumulate(lengths.begin(), lengths.end(), 0)) {
          EXPECT_EQ(val(exp_linear_forest(n, lengths, p)), ref::degree_power(h_linear_forest(n, lengths), p));
        }
      }
      for (auto rs : std::vector<std::vector<int>>{{2, 2}, {3, 2}, {3, 3, 1}, {4, 4}}) {
        const int k = static_cast<int>(rs.size());
        if (n - k + 1 > rs.back() - 1) {
          EXPECT_EQ(val(exp_star_forest(n, rs, p)), ref::degree_power(g_star_join(n, k, rs.back()), p));
        }
      }
      for (int k = 2; k <= 5 && k <= n; ++k)
        EXPECT_EQ(val(exp_kP3(n, k, p)), ref::degree_power(k_join_matching(n, k), p));
      for (int s = 1; s <= 3; ++s)
        EXPECT_EQ(val(exp_broom(n, 5, s, p)), ref::degree_power(k_join_matching(n, 2), p));
    }
  }
}

TEST(Formulas, SuperadditivityExamples) {
  EXPECT_TRUE(lemma_superadd_check(5, 5, 5, 2, LemmaVariant::k1_matching));
  EXPECT_EQ(2 * ep_value(k_join_matching(5, 2), 2), 64);
  EXPECT_EQ(ep_value(k_join_matching(10, 2), 2), 114);
  EXPECT_TRUE(lemma_superadd_check(6, 6, 7, 2, LemmaVariant::h_path));
  EXPECT_TRUE(lemma_superadd_check(7, 7, 7, 3, LemmaVariant::h_path));
  EXPECT_THROW(lemma_superadd_check(6, 6, 6, 2, LemmaVariant::k1_matching), Error);
  EXPECT_THROW(lemma_superadd_check(6, 5, 6, 2, LemmaVariant::h_path), Error);
}

TEST(Formulas, AbsorptionExamples) {
  EXPECT_TRUE(lemma_absorb_check(5, 0, 96, 5, 5, 2, LemmaVariant::k1_matching));
  EXPECT_TRUE(lemma_absorb_check(6, 0, 140, 5, 6, 2, LemmaVariant::h_path));
  // 1162 is not above (7+1+27)^2 = 1225.
  EXPECT_THROW(lemma_absorb_check(7, 1, 1160, 2, 27, 2, LemmaVariant::h_path), Error);
  EXPECT_TRUE(lemma_absorb_check(7, 1, 1160, 2, 26, 2, LemmaVariant::h_path));
  EXPECT_THROW(lemma_absorb_check(5, 0, 90, 5, 5, 2, LemmaVariant::k1_matching), Error);
}
