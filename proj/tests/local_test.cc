/*
 * Copyright 2026 The bilink authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "bilink/local.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "test_util.hpp"

namespace bilink {
namespace {

using testing::g_fix;

// Quadrangle-rich 6-CN/7-LCL neighbourhood: seeds x,y with
// N(x)={b1,b2,b3}, N(y)={a1,a2,a3} and seven cross edges.
BipartiteGraph six_cn_seven_lcl() {
  // left: x=0, a1=1, a2=2, a3=3; right: y=0, b1=1, b2=2, b3=3
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3},            // x-b*
                             {1, 0}, {2, 0}, {3, 0},            // a*-y
                             {1, 1}, {1, 2}, {1, 3}, {2, 1},
                             {2, 2}, {3, 2}, {3, 3}};
  return BipartiteGraph::from_edges(4, 4, std::move(edges));
}

TEST(LocalCommunity, FixturePair) {
  const auto g = g_fix();
  const auto lc = local_community(g, 0, 2);  // (a1, b3)
  EXPECT_EQ(lc.cn_right, std::vector<uint32_t>{1});  // b2
  EXPECT_EQ(lc.cn_left, std::vector<uint32_t>{2});   // a3
  EXPECT_EQ(lc.gamma_right, std::vector<uint32_t>{1});
  EXPECT_EQ(lc.gamma_left, std::vector<uint32_t>{1});
  EXPECT_EQ(lc.lcl, 1u);
}

TEST(LocalCommunity, NoQuadrangleMeansEmpty) {
  // Two disjoint edges: nothing connects N(a0) to N(b1).
  const auto g = BipartiteGraph::from_edges(2, 2, {{0, 0}, {1, 1}});
  const auto lc = local_community(g, 0, 1);
  EXPECT_TRUE(lc.cn_left.empty());
  EXPECT_TRUE(lc.cn_right.empty());
  EXPECT_TRUE(lc.gamma_left.empty());
  EXPECT_EQ(lc.lcl, 0u);
}

TEST(LocalCommunity, SixCnSevenLcl) {
  const auto g = six_cn_seven_lcl();
  const auto lc = local_community(g, 0, 0);
  EXPECT_EQ(lc.cn_count(), 6u);
  EXPECT_EQ(lc.lcl, 7u);
  EXPECT_DOUBLE_EQ(score(IndexKind::CAR, g, 0, 0), 42.0);
}

TEST(LocalCommunity, InvalidSeedsThrow) {
  const auto g = g_fix();
  EXPECT_THROW(local_community(g, 5, 0), InvalidArgument);
  EXPECT_THROW(score(IndexKind::CN, g, 0, 9), InvalidArgument);
}

TEST(Score, FixtureFrozenValues) {
  const auto g = g_fix();
  // (a1, b3)
  EXPECT_DOUBLE_EQ(score(IndexKind::CN, g, 0, 2), 2.0);
  EXPECT_DOUBLE_EQ(score(IndexKind::JC, g, 0, 2), 2.0 / 3.0);
  EXPECT_NEAR(score(IndexKind::AA, g, 0, 2), 1.0 / std::log2(3.0) + 1.0,
              1e-12);
  EXPECT_NEAR(score(IndexKind::RA, g, 0, 2), 1.0 / 3.0 + 1.0 / 2.0, 1e-12);
  EXPECT_DOUBLE_EQ(score(IndexKind::PA, g, 0, 2), 2.0);
  EXPECT_DOUBLE_EQ(score(IndexKind::LCL, g, 0, 2), 1.0);
  EXPECT_DOUBLE_EQ(score(IndexKind::CAR, g, 0, 2), 2.0);
  EXPECT_DOUBLE_EQ(score(IndexKind::CJC, g, 0, 2), 2.0 / 3.0);
  EXPECT_NEAR(score(IndexKind::CAA, g, 0, 2), 1.0 / std::log2(3.0) + 1.0,
              1e-12);
  EXPECT_NEAR(score(IndexKind::CRA, g, 0, 2), 1.0 / 3.0 + 1.0 / 2.0, 1e-12);
  EXPECT_DOUBLE_EQ(score(IndexKind::CPA, g, 0, 2), 6.0);
  // (a3, b1): the denser candidate
  EXPECT_DOUBLE_EQ(score(IndexKind::CN, g, 2, 0), 3.0);
  EXPECT_DOUBLE_EQ(score(IndexKind::JC, g, 2, 0), 0.75);
  EXPECT_DOUBLE_EQ(score(IndexKind::LCL, g, 2, 0), 2.0);
  EXPECT_DOUBLE_EQ(score(IndexKind::CAR, g, 2, 0), 6.0);
  EXPECT_DOUBLE_EQ(score(IndexKind::CPA, g, 2, 0), 42.0);
}

TEST(Score, EmptyCommunityCollapsesToPa) {
  const auto g = BipartiteGraph::from_edges(3, 3, {{0, 0}, {0, 1}, {1, 2}});
  // (a0, b2): no quadrangle
  for (IndexKind k :
       {IndexKind::CN, IndexKind::JC, IndexKind::AA, IndexKind::RA,
        IndexKind::LCL, IndexKind::CAR, IndexKind::CJC, IndexKind::CAA,
        IndexKind::CRA}) {
    EXPECT_DOUBLE_EQ(score(k, g, 0, 2), 0.0) << index_name(k);
  }
  EXPECT_DOUBLE_EQ(score(IndexKind::CPA, g, 0, 2),
                   score(IndexKind::PA, g, 0, 2));
}

TEST(ScoreAll, MatchesPerPairCalls) {
  const auto g = g_fix();
  const auto pairs = candidate_pairs(g);
  for (IndexKind k : kAllIndexKinds) {
    const auto scores = score_all(k, g, pairs);
    ASSERT_EQ(scores.size(), pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
      EXPECT_EQ(scores[i], score(k, g, pairs[i].left, pairs[i].right))
          << index_name(k) << " pair " << i;
    }
  }
  EXPECT_TRUE(
      score_all(IndexKind::CN, g, candidate_pairs(testing::complete(3, 3)))
          .empty());
}

TEST(ScoreAll, ThreadCountDoesNotChangeBits) {
  const auto g = oracle::random_bipartite(20, 18, 0.25, 99);
  const auto pairs = candidate_pairs(g);
  for (IndexKind k : {IndexKind::CRA, IndexKind::CAA, IndexKind::JC}) {
    const auto s1 = score_all(k, g, pairs, 1);
    const auto s4 = score_all(k, g, pairs, 4);
    EXPECT_EQ(s1, s4) << index_name(k);
  }
}

TEST(OracleEquivalence, RandomGraphs) {
  int pairs_checked = 0;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const double p = 0.1 + 0.04 * static_cast<double>(seed % 10);
    const auto g = oracle::random_bipartite(12, 12, p, 1000 + seed);
    for (uint32_t x = 0; x < g.n_left(); ++x) {
      for (uint32_t y = 0; y < g.n_right(); ++y) {
        const auto lc = local_community(g, x, y);
        const auto brute = oracle::brute_local_community(g, x, y);
        ASSERT_EQ(std::vector<uint32_t>(brute.cn_left.begin(),
                                        brute.cn_left.end()),
                  lc.cn_left);
        ASSERT_EQ(std::vector<uint32_t>(brute.cn_right.begin(),
                                        brute.cn_right.end()),
                  lc.cn_right);
        ASSERT_EQ(brute.lcl, lc.lcl);
        for (size_t i = 0; i < lc.cn_left.size(); ++i) {
          ASSERT_EQ(brute.gamma_left.at(lc.cn_left[i]), lc.gamma_left[i]);
        }
        for (size_t i = 0; i < lc.cn_right.size(); ++i) {
          ASSERT_EQ(brute.gamma_right.at(lc.cn_right[i]), lc.gamma_right[i]);
        }
        if (!g.has_edge(x, y)) {
          for (IndexKind k : kAllIndexKinds) {
            const double got = score(k, g, x, y);
            const double want = oracle::brute_index(k, g, x, y);
            if (k == IndexKind::CN || k == IndexKind::PA ||
                k == IndexKind::LCL || k == IndexKind::CAR ||
                k == IndexKind::CPA) {
              ASSERT_EQ(got, want) << index_name(k);
            } else {
              ASSERT_NEAR(got, want, 1e-12) << index_name(k);
            }
          }
        }
        ++pairs_checked;
      }
    }
  }
  EXPECT_GT(pairs_checked, 1000);
}

TEST(Invariants, GammaLclCarBounds) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = oracle::random_bipartite(11, 12, 0.3, 500 + seed);
    for (uint32_t x = 0; x < g.n_left(); ++x) {
      for (uint32_t y = 0; y < g.n_right(); ++y) {
        const auto lc = local_community(g, x, y);
        uint64_t gamma_sum = 0;
        for (uint32_t gam : lc.gamma_left) gamma_sum += gam;
        for (uint32_t gam : lc.gamma_right) gamma_sum += gam;
        ASSERT_EQ(gamma_sum, 2 * lc.lcl);
        ASSERT_LE(lc.lcl, static_cast<uint64_t>(lc.cn_left.size()) *
                              lc.cn_right.size());
        if (lc.lcl >= 1) {
          ASSERT_GE(lc.cn_left.size(), 1u);
          ASSERT_GE(lc.cn_right.size(), 1u);
        }
        for (size_t i = 0; i < lc.cn_left.size(); ++i) {
          ASSERT_GE(lc.gamma_left[i], 1u);
          ASSERT_GE(g.left_degree(lc.cn_left[i]), 2u);
          ASSERT_LE(lc.gamma_left[i], g.left_degree(lc.cn_left[i]));
        }
        for (size_t i = 0; i < lc.cn_right.size(); ++i) {
          ASSERT_GE(lc.gamma_right[i], 1u);
          ASSERT_GE(g.right_degree(lc.cn_right[i]), 2u);
        }
        ASSERT_LE(lc.cn_count(), g.left_degree(x) + g.right_degree(y));
        if (!g.has_edge(x, y)) {
          const double uni = g.left_degree(x) + g.right_degree(y);
          ASSERT_EQ(score(IndexKind::CAR, g, x, y),
                    score(IndexKind::CN, g, x, y) *
                        score(IndexKind::LCL, g, x, y));
          if (uni > 0) {
            ASSERT_NEAR(score(IndexKind::CJC, g, x, y) * uni,
                        score(IndexKind::CAR, g, x, y), 1e-9);
          }
          // P3 equivalence
          ASSERT_EQ(score(IndexKind::LCL, g, x, y),
                    static_cast<double>(oracle::brute_p3_count(g, x, y)));
        }
      }
    }
  }
}

TEST(Invariants, PartitionSwapSymmetry) {
  // Transposing the graph and swapping the seed roles must not change any
  // index value.
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = oracle::random_bipartite(9, 11, 0.3, 42 + seed);
    std::vector<Edge> flipped;
    for (const Edge& e : g.edges()) flipped.push_back({e.right, e.left});
    const auto gt =
        BipartiteGraph::from_edges(g.n_right(), g.n_left(), std::move(flipped));
    for (uint32_t x = 0; x < g.n_left(); ++x) {
      for (uint32_t y = 0; y < g.n_right(); ++y) {
        for (IndexKind k : kAllIndexKinds) {
          // Summation order differs between orientations, so real-valued
          // indices agree to rounding only.
          ASSERT_NEAR(score(k, g, x, y), score(k, gt, y, x), 1e-12)
              << index_name(k);
        }
      }
    }
  }
}

TEST(IndexKind, NamesRoundTrip) {
  for (IndexKind k : kAllIndexKinds) {
    EXPECT_EQ(parse_index(index_name(k)), k);
  }
  EXPECT_EQ(parse_index("CRA"), IndexKind::CRA);
  EXPECT_FALSE(parse_index("nope").has_value());
}

}  // namespace
}  // namespace bilink
