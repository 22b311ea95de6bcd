#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gembench/graph.hpp"
#include "gembench/ranking.hpp"
#include "gembench/split.hpp"

namespace gembench {

enum class HeuristicKind { preferential_attachment, common_neighbors, adamic_adar, jaccard, random };

/// "pa", "cn", "aa", "jc", "random".
std::string heuristic_id(HeuristicKind kind);
std::optional<HeuristicKind> parse_heuristic(const std::string& id);

/// Neighborhood score on the train graph; weights are ignored. For `random` the score is a
/// uniform [0,1) value fixed by (seed, pair).
double heuristic_score(HeuristicKind kind, const Graph& train, NodeId u, NodeId v, std::uint64_t seed = 0);

class HeuristicScorer final : public PairScorer {
 public:
  HeuristicScorer(HeuristicKind kind, const Graph& train, std::uint64_t seed = 0)
      : kind_(kind), train_(&train), seed_(seed) {}

  std::size_t num_nodes() const override { return train_->num_nodes(); }
  double score(NodeId u, NodeId v) const override;
  void score_row(NodeId u, std::span<double> out) const override;

 private:
  HeuristicKind kind_;
  const Graph* train_;
  std::uint64_t seed_;
};

std::vector<ScoredPair> rank_candidates(HeuristicKind kind, const EdgeSplit& split,
                                        std::optional<std::size_t> top_k = std::nullopt,
                                        std::uint64_t seed = 0);

}  // namespace gembench
