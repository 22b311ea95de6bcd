#include "gembench/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gembench/error.hpp"

namespace gembench {

void PairScorer::score_row(NodeId u, std::span<double> out) const {
  for (NodeId v = 0; v < out.size(); ++v) out[v] = v == u ? 0.0 : score(u, v);
}

void TopK::offer(const ScoredPair& item) {
  if (k_ == 0) return;
  if (heap_.size() < k_) {
    heap_.push_back(item);
    std::push_heap(heap_.begin(), heap_.end(), ranks_before);
  } else if (ranks_before(item, heap_.front())) {
    std::pop_heap(heap_.begin(), heap_.end(), ranks_before);
    heap_.back() = item;
    std::push_heap(heap_.begin(), heap_.end(), ranks_before);
  }
}

std::vector<ScoredPair> TopK::take() && {
  std::sort_heap(heap_.begin(), heap_.end(), ranks_before);
  return std::move(heap_);
}

namespace {

void require_finite(double s, NodeId u, NodeId v) {
  if (!std::isfinite(s)) {
    throw NumericError("non-finite link score for pair (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
}

void check_scorer(const PairScorer& scorer, const EdgeSplit& split) {
  if (scorer.num_nodes() != split.num_nodes()) {
    throw ValidationError("scorer covers " + std::to_string(scorer.num_nodes()) + " nodes, split has " +
                          std::to_string(split.num_nodes()));
  }
}

}  // namespace

std::vector<ScoredPair> rank_candidates(const PairScorer& scorer, const EdgeSplit& split,
                                        std::optional<std::size_t> top_k) {
  check_scorer(scorer, split);
  const std::size_t n = split.num_nodes();
  const Graph& train = split.train;
  std::vector<double> row(n);
  std::vector<ScoredPair> all;
  TopK best(top_k.value_or(0));
  if (!top_k) all.reserve(split.num_candidates());

  for (NodeId u = 0; u < n; ++u) {
    scorer.score_row(u, row);
    const auto nbrs = train.neighbors(u);
    auto nb = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    for (NodeId v = u + 1; v < n; ++v) {
      if (nb != nbrs.end() && *nb == v) {
        ++nb;
        continue;
      }
      require_finite(row[v], u, v);
      const ScoredPair item{{u, v}, row[v]};
      if (top_k) {
        best.offer(item);
      } else {
        all.push_back(item);
      }
    }
  }
  if (top_k) return std::move(best).take();
  std::sort(all.begin(), all.end(), ranks_before);
  return all;
}

std::vector<ScoredPair> rank_node_candidates(const PairScorer& scorer, const EdgeSplit& split, NodeId u) {
  check_scorer(scorer, split);
  const std::size_t n = split.num_nodes();
  if (u >= n) throw BoundsError("node " + std::to_string(u) + " out of range");
  std::vector<double> row(n);
  scorer.score_row(u, row);
  const auto nbrs = split.train.neighbors(u);
  auto nb = nbrs.begin();
  std::vector<ScoredPair> ranked;
  ranked.reserve(n - 1 - nbrs.size());
  for (NodeId v = 0; v < n; ++v) {
    if (nb != nbrs.end() && *nb == v) {
      ++nb;
      continue;
    }
    if (v == u) continue;
    require_finite(row[v], u, v);
    ranked.push_back({NodePair::of(u, v), row[v]});
  }
  std::stable_sort(ranked.begin(), ranked.end(), ranks_before);
  return ranked;
}

}  // namespace gembench
