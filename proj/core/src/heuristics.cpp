#include "gembench/heuristics.hpp"

#include <algorithm>
#include <cmath>

#include "gembench/error.hpp"
#include "gembench/rng.hpp"

namespace gembench {
namespace {

void check_pair(const Graph& g, NodeId u, NodeId v) {
  const auto n = g.num_nodes();
  if (u >= n || v >= n) {
    throw BoundsError("pair (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for " +
                      std::to_string(n) + " nodes");
  }
  if (u == v) throw ValidationError("heuristic score needs two distinct nodes");
}

double random_score(std::uint64_t seed, NodeId u, NodeId v) {
  const auto p = NodePair::of(u, v);
  return unit_from_bits(stable_hash(seed, p.first, p.second));
}

double inverse_log_degree(const Graph& g, NodeId z) {
  return 1.0 / std::log(static_cast<double>(g.degree(z)));
}

}  // namespace

std::string heuristic_id(HeuristicKind kind) {
  switch (kind) {
    case HeuristicKind::preferential_attachment: return "pa";
    case HeuristicKind::common_neighbors: return "cn";
    case HeuristicKind::adamic_adar: return "aa";
    case HeuristicKind::jaccard: return "jc";
    case HeuristicKind::random: return "random";
  }
  return "unknown";
}

std::optional<HeuristicKind> parse_heuristic(const std::string& id) {
  for (auto k : {HeuristicKind::preferential_attachment, HeuristicKind::common_neighbors, HeuristicKind::adamic_adar,
                 HeuristicKind::jaccard, HeuristicKind::random}) {
    if (heuristic_id(k) == id) return k;
  }
  return std::nullopt;
}

double heuristic_score(HeuristicKind kind, const Graph& train, NodeId u, NodeId v, std::uint64_t seed) {
  check_pair(train, u, v);
  if (kind == HeuristicKind::random) return random_score(seed, u, v);
  const double du = static_cast<double>(train.degree(u));
  const double dv = static_cast<double>(train.degree(v));
  if (kind == HeuristicKind::preferential_attachment) return du * dv;

  const auto a = train.neighbors(u);
  const auto b = train.neighbors(v);
  double common = 0.0;
  double adamic = 0.0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      common += 1.0;
      adamic += inverse_log_degree(train, *i);
      ++i;
      ++j;
    }
  }
  switch (kind) {
    case HeuristicKind::common_neighbors: return common;
    case HeuristicKind::adamic_adar: return adamic;
    default: {
      const double uni = du + dv - common;
      return uni > 0.0 ? common / uni : 0.0;
    }
  }
}

double HeuristicScorer::score(NodeId u, NodeId v) const { return heuristic_score(kind_, *train_, u, v, seed_); }

void HeuristicScorer::score_row(NodeId u, std::span<double> out) const {
  const Graph& g = *train_;
  const std::size_t n = g.num_nodes();
  if (u >= n) throw BoundsError("node " + std::to_string(u) + " out of range");
  if (out.size() != n) throw ValidationError("score row has wrong length");
  std::fill(out.begin(), out.end(), 0.0);
  switch (kind_) {
    case HeuristicKind::random:
      for (NodeId v = 0; v < n; ++v) out[v] = v == u ? 0.0 : random_score(seed_, u, v);
      return;
    case HeuristicKind::preferential_attachment: {
      const double du = static_cast<double>(g.degree(u));
      for (NodeId v = 0; v < n; ++v) out[v] = du * static_cast<double>(g.degree(v));
      out[u] = 0.0;
      return;
    }
    default:
      break;
  }
  // Two-hop sweep accumulates common-neighbor counts (or Adamic-Adar weights) for every v.
  for (NodeId z : g.neighbors(u)) {
    const double w = kind_ == HeuristicKind::adamic_adar ? inverse_log_degree(g, z) : 1.0;
    for (NodeId v : g.neighbors(z)) out[v] += w;
  }
  out[u] = 0.0;
  if (kind_ == HeuristicKind::jaccard) {
    const double du = static_cast<double>(g.degree(u));
    for (NodeId v = 0; v < n; ++v) {
      const double uni = du + static_cast<double>(g.degree(v)) - out[v];
      out[v] = uni > 0.0 ? out[v] / uni : 0.0;
    }
    out[u] = 0.0;
  }
}

std::vector<ScoredPair> rank_candidates(HeuristicKind kind, const EdgeSplit& split, std::optional<std::size_t> top_k,
                                        std::uint64_t seed) {
  return rank_candidates(HeuristicScorer(kind, split.train, seed), split, top_k);
}

}  // namespace gembench
