#include "gembench/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gembench/error.hpp"
#include "gembench/heuristics.hpp"
#include "gembench/rng.hpp"

namespace gembench::eval {

std::string map_mode_name(MapMode mode) {
  return mode == MapMode::all_nodes ? "all_nodes" : "nodes_with_hidden";
}

MapMode parse_map_mode(const std::string& name) {
  if (name == "all_nodes") return MapMode::all_nodes;
  if (name == "nodes_with_hidden") return MapMode::nodes_with_hidden;
  throw ValidationError("unknown MAP mode '" + name + "' (expected all_nodes or nodes_with_hidden)");
}

std::string metric_name(Metric metric) { return metric == Metric::map ? "map" : "p_at_k"; }

namespace {

bool contains(std::span<const NodePair> sorted, NodePair p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

std::vector<NodePair> sorted_copy(std::span<const NodePair> pairs) {
  std::vector<NodePair> out(pairs.begin(), pairs.end());
  std::sort(out.begin(), out.end());
  return out;
}

double map_denominator(std::size_t num_nodes, std::size_t nodes_with_hidden, MapMode mode) {
  return static_cast<double>(mode == MapMode::all_nodes ? num_nodes : nodes_with_hidden);
}

}  // namespace

double precision_at_k(std::span<const NodePair> ranking, std::span<const NodePair> hidden, std::size_t k) {
  if (k == 0) throw ValidationError("k must be at least 1");
  const auto sorted = sorted_copy(hidden);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < std::min(k, ranking.size()); ++i) hits += contains(sorted, ranking[i]) ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(k);
}

double precision_at_k(std::span<const ScoredPair> ranking, std::span<const NodePair> hidden, std::size_t k) {
  std::vector<NodePair> pairs;
  pairs.reserve(std::min(k, ranking.size()));
  for (std::size_t i = 0; i < std::min(k, ranking.size()); ++i) pairs.push_back(ranking[i].pair);
  return precision_at_k(pairs, hidden, k);
}

double average_precision(const std::vector<bool>& hits) {
  double sum = 0.0;
  std::size_t found = 0;
  for (std::size_t r = 0; r < hits.size(); ++r) {
    if (hits[r]) {
      ++found;
      sum += static_cast<double>(found) / static_cast<double>(r + 1);
    }
  }
  return found == 0 ? 0.0 : sum / static_cast<double>(found);
}

double map_score(const std::vector<std::vector<NodePair>>& per_node_rankings, std::span<const NodePair> hidden,
                 MapMode mode) {
  const auto sorted = sorted_copy(hidden);
  const std::size_t n = per_node_rankings.size();
  std::vector<bool> has_hidden(n, false);
  for (const auto& p : sorted) {
    if (p.first < n) has_hidden[p.first] = true;
    if (p.second < n) has_hidden[p.second] = true;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> hits;
    hits.reserve(per_node_rankings[i].size());
    for (const auto& p : per_node_rankings[i]) {
      if (p.first != i && p.second != i) {
        throw ValidationError("ranking of node " + std::to_string(i) + " contains pair (" + std::to_string(p.first) +
                              ", " + std::to_string(p.second) + ") not incident to it");
      }
      hits.push_back(contains(sorted, p));
    }
    total += average_precision(hits);
  }
  const auto covered = static_cast<std::size_t>(std::count(has_hidden.begin(), has_hidden.end(), true));
  const double denom = map_denominator(n, covered, mode);
  return denom > 0.0 ? total / denom : 0.0;
}

LinkMetrics evaluate(const PairScorer& scorer, const EdgeSplit& split, std::size_t k, MapMode mode) {
  if (k == 0) throw ValidationError("k must be at least 1");
  const std::size_t n = split.num_nodes();
  if (scorer.num_nodes() != n) throw ValidationError("scorer and split disagree on the node count");

  std::vector<std::vector<NodeId>> hidden_nbrs(n);
  for (const auto& p : split.hidden) {
    hidden_nbrs[p.first].push_back(p.second);
    hidden_nbrs[p.second].push_back(p.first);
  }
  for (auto& h : hidden_nbrs) std::sort(h.begin(), h.end());

  TopK best(k);
  std::vector<double> row(n);
  std::vector<std::size_t> ranks;
  double ap_total = 0.0;
  std::size_t covered = 0;
  for (NodeId u = 0; u < n; ++u) {
    scorer.score_row(u, row);
    const auto nbrs = split.train.neighbors(u);
    auto nb = nbrs.begin();
    // candidate mask for this row: v != u and (u,v) not a train edge
    for (NodeId v = 0; v < n; ++v) {
      if (nb != nbrs.end() && *nb == v) {
        ++nb;
        row[v] = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      if (v == u) {
        row[v] = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      if (!std::isfinite(row[v])) {
        throw NumericError("non-finite link score for pair (" + std::to_string(u) + ", " + std::to_string(v) + ")");
      }
      if (v > u) best.offer({{u, v}, row[v]});
    }

    const auto& hid = hidden_nbrs[u];
    if (hid.empty()) continue;
    ++covered;
    // Rank of each hidden partner h: candidates ahead of it (higher score, or equal score
    // with a smaller partner id) plus one.
    ranks.clear();
    for (NodeId h : hid) {
      const double s = row[h];
      std::size_t ahead = 0;
      for (NodeId v = 0; v < n; ++v) {
        const double r = row[v];
        ahead += (r > s || (r == s && v < h)) ? 1 : 0;
      }
      ranks.push_back(ahead + 1);
    }
    std::sort(ranks.begin(), ranks.end());
    double sum = 0.0;
    for (std::size_t j = 0; j < ranks.size(); ++j) sum += static_cast<double>(j + 1) / static_cast<double>(ranks[j]);
    ap_total += sum / static_cast<double>(ranks.size());
  }

  LinkMetrics out;
  const auto top = std::move(best).take();
  std::size_t hits = 0;
  for (const auto& item : top) hits += split.is_hidden(item.pair) ? 1 : 0;
  out.p_at_k = static_cast<double>(hits) / static_cast<double>(k);
  const double all = n > 0 ? ap_total / static_cast<double>(n) : 0.0;
  const double nonzero = covered > 0 ? ap_total / static_cast<double>(covered) : 0.0;
  out.map = mode == MapMode::all_nodes ? all : nonzero;
  out.map_alt = mode == MapMode::all_nodes ? nonzero : all;
  return out;
}

double random_p_at_k(const EdgeSplit& split, std::size_t k) {
  if (k == 0) throw ValidationError("k must be at least 1");
  const std::size_t c = split.num_candidates();
  if (c == 0 || split.hidden.empty()) return baseline_floor;
  const double filled = static_cast<double>(std::min(k, c)) / static_cast<double>(k);
  return std::max(baseline_floor, filled * static_cast<double>(split.hidden.size()) / static_cast<double>(c));
}

RandomBaseline random_baseline(const EdgeSplit& split, std::size_t k, std::size_t trials, std::uint64_t seed,
                               MapMode mode) {
  if (trials == 0) throw ValidationError("random baseline needs at least one trial");
  RandomBaseline out;
  out.p_at_k = random_p_at_k(split, k);
  if (split.hidden.empty()) {
    out.map = out.map_alt = baseline_floor;
    return out;
  }
  double map = 0.0;
  double alt = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto m = evaluate(HeuristicScorer(HeuristicKind::random, split.train, stable_hash(seed, t)), split, k, mode);
    map += m.map;
    alt += m.map_alt;
  }
  out.map = std::max(baseline_floor, map / static_cast<double>(trials));
  out.map_alt = std::max(baseline_floor, alt / static_cast<double>(trials));
  return out;
}

}  // namespace gembench::eval
