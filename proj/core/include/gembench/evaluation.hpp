#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gembench/graph.hpp"
#include "gembench/ranking.hpp"
#include "gembench/split.hpp"

namespace gembench::eval {

enum class MapMode {
  all_nodes,       ///< sum of AP over |V|
  nodes_with_hidden  ///< sum of AP over nodes incident to at least one hidden edge
};

std::string map_mode_name(MapMode mode);
MapMode parse_map_mode(const std::string& name);

/// Fraction of ranking[0..k) that are hidden edges; missing slots count as misses.
/// `hidden` must be sorted.
double precision_at_k(std::span<const NodePair> ranking, std::span<const NodePair> hidden, std::size_t k);
double precision_at_k(std::span<const ScoredPair> ranking, std::span<const NodePair> hidden, std::size_t k);

/// Average precision of one node's ranking given a per-position hit flag.
double average_precision(const std::vector<bool>& hits);

/// MAP over per-node rankings; per_node_rankings[i] lists pairs incident to node i. Nodes
/// with no hidden edge contribute AP 0. Throws ValidationError for a pair not incident to
/// its node.
double map_score(const std::vector<std::vector<NodePair>>& per_node_rankings, std::span<const NodePair> hidden,
                 MapMode mode = MapMode::all_nodes);

struct LinkMetrics {
  double p_at_k = 0.0;
  double map = 0.0;      ///< in the requested mode
  double map_alt = 0.0;  ///< in the other mode
};

/// Both metrics in one pass over scorer rows: P@k over all candidates, MAP over each node's
/// untruncated candidate ranking.
LinkMetrics evaluate(const PairScorer& scorer, const EdgeSplit& split, std::size_t k,
                     MapMode mode = MapMode::all_nodes);

constexpr double baseline_floor = 1e-9;

struct RandomBaseline {
  double p_at_k = 0.0;
  double map = 0.0;
  double map_alt = 0.0;
};

/// Expected P@k of a uniformly random candidate ranking, min(k, C)/k * |hidden|/C.
double random_p_at_k(const EdgeSplit& split, std::size_t k);

/// Mean MAP over `trials` uniformly random rankings.
RandomBaseline random_baseline(const EdgeSplit& split, std::size_t k, std::size_t trials, std::uint64_t seed,
                               MapMode mode = MapMode::all_nodes);

// ---------------------------------------------------------------------------
// GFS aggregation

enum class Metric { map, p_at_k };
std::string metric_name(Metric metric);

/// One metric value of a method on one graph and trial.
struct MetricValue {
  std::string graph;
  std::string method;
  std::size_t dimension = 0;
  std::uint64_t trial_seed = 0;
  Metric metric = Metric::map;
  double value = 0.0;
};

/// Random-predictor value on the same split, keyed by (graph, trial_seed, metric).
struct BaselineValue {
  std::string graph;
  std::uint64_t trial_seed = 0;
  Metric metric = Metric::map;
  double value = 0.0;
};

struct GfsCell {
  double micro = 0.0;
  double macro = 0.0;
  std::map<std::string, double> per_domain;
  std::map<std::string, double> per_graph;  ///< trial-averaged ratio
  std::map<std::string, std::size_t> domain_counts;
};

/// Keyed by (method, metric).
using GfsReport = std::map<std::pair<std::string, Metric>, GfsCell>;

/// Ratio e(g,a)/e(g,random) per row, averaged over trials per graph, then averaged over
/// graphs (micro), per domain, and over domain means (macro). Throws ValidationError
/// naming the graph when a baseline or domain label is missing.
GfsReport gfs_scores(const std::vector<MetricValue>& values, const std::vector<BaselineValue>& baselines,
                     const std::map<std::string, std::string>& graph_domains);

}  // namespace gembench::eval
