#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gembench/graph.hpp"
#include "gembench/split.hpp"

namespace gembench {

struct ScoredPair {
  NodePair pair;
  double score = 0.0;

  friend bool operator==(const ScoredPair&, const ScoredPair&) = default;
};

/// Global ranking order: higher score first, then lexicographic pair order.
inline bool ranks_before(const ScoredPair& a, const ScoredPair& b) noexcept {
  if (a.score != b.score) return a.score > b.score;
  return a.pair < b.pair;
}

/// Symmetric link scorer over nodes 0..n-1.
class PairScorer {
 public:
  virtual ~PairScorer() = default;

  virtual std::size_t num_nodes() const = 0;
  /// Score of the unordered pair (u,v), u != v.
  virtual double score(NodeId u, NodeId v) const = 0;
  /// out[v] = score(u, v) for every v (out[u] is unspecified). out.size() == num_nodes().
  virtual void score_row(NodeId u, std::span<double> out) const;
};

/// Scores every candidate of the split (all non-train pairs) and sorts by `ranks_before`,
/// keeping only the first top_k when given. Throws NumericError on a non-finite score.
std::vector<ScoredPair> rank_candidates(const PairScorer& scorer, const EdgeSplit& split,
                                        std::optional<std::size_t> top_k = std::nullopt);

/// Candidates incident to u in ranking order. Ties fall to the other endpoint ascending,
/// which is the lexicographic pair order restricted to u's pairs.
std::vector<ScoredPair> rank_node_candidates(const PairScorer& scorer, const EdgeSplit& split, NodeId u);

/// Bounded selection of the best k items under `ranks_before`.
class TopK {
 public:
  explicit TopK(std::size_t k) : k_(k) {}

  void offer(const ScoredPair& item);
  /// Items in ranking order.
  std::vector<ScoredPair> take() &&;

 private:
  std::size_t k_;
  std::vector<ScoredPair> heap_;  ///< worst item at the front
};

}  // namespace gembench
