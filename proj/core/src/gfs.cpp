#include <map>
#include <tuple>

#include "gembench/error.hpp"
#include "gembench/evaluation.hpp"

namespace gembench::eval {

GfsReport gfs_scores(const std::vector<MetricValue>& values, const std::vector<BaselineValue>& baselines,
                     const std::map<std::string, std::string>& graph_domains) {
  std::map<std::tuple<std::string, std::uint64_t, Metric>, double> base;
  for (const auto& b : baselines) base[{b.graph, b.trial_seed, b.metric}] = b.value;

  // (method, metric) -> graph -> (sum of ratios, trials)
  std::map<std::pair<std::string, Metric>, std::map<std::string, std::pair<double, std::size_t>>> ratios;
  for (const auto& v : values) {
    const auto it = base.find({v.graph, v.trial_seed, v.metric});
    if (it == base.end()) {
      throw ValidationError("no random baseline for graph '" + v.graph + "' (" + metric_name(v.metric) + ", trial seed " +
                            std::to_string(v.trial_seed) + ")");
    }
    const double denom = std::max(it->second, baseline_floor);
    auto& acc = ratios[{v.method, v.metric}][v.graph];
    acc.first += v.value / denom;
    acc.second += 1;
  }

  GfsReport report;
  for (const auto& [key, graphs] : ratios) {
    GfsCell cell;
    std::map<std::string, std::pair<double, std::size_t>> domains;
    double micro = 0.0;
    for (const auto& [graph, acc] : graphs) {
      const auto d = graph_domains.find(graph);
      if (d == graph_domains.end()) throw ValidationError("no domain label for graph '" + graph + "'");
      const double ratio = acc.first / static_cast<double>(acc.second);
      cell.per_graph[graph] = ratio;
      micro += ratio;
      domains[d->second].first += ratio;
      domains[d->second].second += 1;
    }
    cell.micro = micro / static_cast<double>(graphs.size());
    double macro = 0.0;
    for (const auto& [domain, acc] : domains) {
      const double score = acc.first / static_cast<double>(acc.second);
      cell.per_domain[domain] = score;
      cell.domain_counts[domain] = acc.second;
      macro += score;
    }
    cell.macro = macro / static_cast<double>(domains.size());
    report[key] = std::move(cell);
  }
  return report;
}

}  // namespace gembench::eval
