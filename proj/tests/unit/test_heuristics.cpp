#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "gembench/error.hpp"
#include "gembench/heuristics.hpp"
#include "oracles.hpp"

using namespace gembench;

namespace {

constexpr HeuristicKind kNeighborhood[] = {HeuristicKind::preferential_attachment, HeuristicKind::common_neighbors,
                                           HeuristicKind::adamic_adar, HeuristicKind::jaccard};

double brute(HeuristicKind kind, const std::vector<std::vector<int>>& a, NodeId u, NodeId v) {
  switch (kind) {
    case HeuristicKind::preferential_attachment: return oracle::pa(a, u, v);
    case HeuristicKind::common_neighbors: return oracle::cn(a, u, v);
    case HeuristicKind::adamic_adar: return oracle::aa(a, u, v);
    case HeuristicKind::jaccard: return oracle::jc(a, u, v);
    default: return 0.0;
  }
}

EdgeSplit no_hidden(const Graph& g) { return EdgeSplit{g, {}, 0.0, 0}; }

}  // namespace

TEST(Heuristics, PathExample) {
  const auto g = oracle::path_graph(3);
  EXPECT_EQ(heuristic_score(HeuristicKind::common_neighbors, g, 0, 2), 1.0);
  EXPECT_EQ(heuristic_score(HeuristicKind::jaccard, g, 0, 2), 1.0);
  EXPECT_NEAR(heuristic_score(HeuristicKind::adamic_adar, g, 0, 2), 1.4426950408889634, 1e-12);
}

TEST(Heuristics, DisjointNeighborhoods) {
  const auto g = Graph::from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  for (auto k : {HeuristicKind::common_neighbors, HeuristicKind::jaccard, HeuristicKind::adamic_adar}) {
    EXPECT_EQ(heuristic_score(k, g, 0, 2), 0.0);
  }
}

TEST(Heuristics, PreferentialAttachmentProduct) {
  // deg(0) = 3, deg(1) = 4.
  const auto g = Graph::from_edges(9, {{0, 2, 1.0}, {0, 3, 1.0}, {0, 4, 1.0}, {1, 5, 1.0}, {1, 6, 1.0}, {1, 7, 1.0}, {1, 8, 1.0}});
  EXPECT_EQ(heuristic_score(HeuristicKind::preferential_attachment, g, 0, 1), 12.0);
}

TEST(Heuristics, IsolatedPairJaccardZero) {
  EXPECT_EQ(heuristic_score(HeuristicKind::jaccard, Graph(3), 0, 1), 0.0);
}

TEST(Heuristics, OutOfRangeIsBoundsError) {
  const auto g = oracle::path_graph(3);
  EXPECT_THROW(heuristic_score(HeuristicKind::common_neighbors, g, 0, 3), BoundsError);
}

TEST(Heuristics, WeightsIgnored) {
  const auto a = Graph::from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  const auto b = Graph::from_edges(3, {{0, 1, 7.0}, {1, 2, 0.1}});
  for (auto k : kNeighborhood) EXPECT_EQ(heuristic_score(k, a, 0, 2), heuristic_score(k, b, 0, 2));
}

TEST(Heuristics, IdRoundTrip) {
  for (auto k : {HeuristicKind::preferential_attachment, HeuristicKind::common_neighbors, HeuristicKind::adamic_adar,
                 HeuristicKind::jaccard, HeuristicKind::random}) {
    EXPECT_EQ(parse_heuristic(heuristic_id(k)), k);
  }
  EXPECT_FALSE(parse_heuristic("katz").has_value());
}

TEST(Heuristics, MatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::size_t n = 3 + s % 10;
    const auto g = oracle::random_graph(n, 0.2 + 0.01 * static_cast<double>(s % 30), 1000 + s);
    const auto a = oracle::adjacency(g);
    for (auto k : kNeighborhood) {
      HeuristicScorer scorer(k, g);
      std::vector<double> row(n);
      for (NodeId u = 0; u < n; ++u) {
        scorer.score_row(u, row);
        for (NodeId v = 0; v < n; ++v) {
          if (u == v) continue;
          const double expected = brute(k, a, u, v);
          ASSERT_EQ(heuristic_score(k, g, u, v), expected) << heuristic_id(k) << " seed " << s;
          ASSERT_EQ(row[v], expected) << heuristic_id(k) << " row, seed " << s;
        }
      }
    }
  }
}

TEST(Heuristics, SymmetricAndBounded) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = oracle::random_graph(15, 0.3, s);
    for (NodeId u = 0; u < 15; ++u) {
      for (NodeId v = u + 1; v < 15; ++v) {
        for (auto k : kNeighborhood) {
          const double x = heuristic_score(k, g, u, v);
          EXPECT_EQ(x, heuristic_score(k, g, v, u));
          EXPECT_GE(x, 0.0);
        }
        const double jc = heuristic_score(HeuristicKind::jaccard, g, u, v);
        EXPECT_LE(jc, 1.0);
        const double cn = heuristic_score(HeuristicKind::common_neighbors, g, u, v);
        EXPECT_LE(heuristic_score(HeuristicKind::adamic_adar, g, u, v), cn / std::log(2.0) + 1e-12);
      }
    }
  }
}

TEST(Heuristics, RandomIsUniformAndSeeded) {
  const auto g = oracle::random_graph(40, 0.1, 3);
  double sum = 0.0;
  std::size_t count = 0;
  for (NodeId u = 0; u < 40; ++u) {
    for (NodeId v = u + 1; v < 40; ++v) {
      const double x = heuristic_score(HeuristicKind::random, g, u, v, 5);
      EXPECT_GE(x, 0.0);
      EXPECT_LT(x, 1.0);
      EXPECT_EQ(x, heuristic_score(HeuristicKind::random, g, v, u, 5));
      sum += x;
      ++count;
    }
  }
  EXPECT_NEAR(sum / static_cast<double>(count), 0.5, 0.05);
  EXPECT_NE(heuristic_score(HeuristicKind::random, g, 0, 1, 5), heuristic_score(HeuristicKind::random, g, 0, 1, 6));
}

TEST(Ranking, RandomDeterministic) {
  const auto g = oracle::random_connected_graph(30, 0.1, 8);
  const auto split = no_hidden(g);
  EXPECT_EQ(rank_candidates(HeuristicKind::random, split, {}, 11), rank_candidates(HeuristicKind::random, split, {}, 11));
}

TEST(Ranking, TriangleMinusEdge) {
  const auto split = no_hidden(oracle::path_graph(3));
  const auto r = rank_candidates(HeuristicKind::common_neighbors, split);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].pair, (NodePair{0, 2}));
  EXPECT_EQ(r[0].score, 1.0);
}

TEST(Ranking, FourCycleTieBreak) {
  const auto split = no_hidden(oracle::ring_graph(4));
  const auto r = rank_candidates(HeuristicKind::common_neighbors, split);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], (ScoredPair{{0, 2}, 2.0}));
  EXPECT_EQ(r[1], (ScoredPair{{1, 3}, 2.0}));
}

TEST(Ranking, MatchesFullSortAndTruncates) {
  for (std::uint64_t s = 0; s < 15; ++s) {
    const auto g = oracle::random_graph(14, 0.25, 50 + s);
    const auto split = no_hidden(g);
    const auto a = oracle::adjacency(g);
    for (auto k : kNeighborhood) {
      std::vector<ScoredPair> expected;
      for (NodeId u = 0; u < 14; ++u) {
        for (NodeId v = u + 1; v < 14; ++v) {
          if (!a[u][v]) expected.push_back({{u, v}, brute(k, a, u, v)});
        }
      }
      std::sort(expected.begin(), expected.end(), ranks_before);
      EXPECT_EQ(rank_candidates(k, split), expected);
      const auto top = rank_candidates(k, split, 7);
      ASSERT_EQ(top.size(), std::min<std::size_t>(7, expected.size()));
      EXPECT_TRUE(std::equal(top.begin(), top.end(), expected.begin()));
    }
  }
}

TEST(Ranking, HiddenEdgesAreCandidates) {
  const auto g = oracle::complete_graph(5);
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (!(e.u == 0 && e.v == 1)) kept.push_back(e);
  }
  const EdgeSplit split{Graph::from_edges(5, kept), {{0, 1}}, 0.1, 0};
  const auto r = rank_candidates(HeuristicKind::common_neighbors, split);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].score, 3.0);
}

TEST(Ranking, NodeCandidatesOrder) {
  const auto split = no_hidden(oracle::path_graph(5));
  const auto r = rank_node_candidates(HeuristicScorer(HeuristicKind::common_neighbors, split.train), split, 2);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].pair, (NodePair{0, 2}));
  EXPECT_EQ(r[1].pair, (NodePair{2, 4}));
}
