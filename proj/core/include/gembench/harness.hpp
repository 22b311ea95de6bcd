#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "gembench/config.hpp"
#include "gembench/graph.hpp"

namespace gembench {

struct GraphInput {
  std::string name;
  DomainLabel domain;
  Graph graph;
};

/// Loads the manifest or builds the synthetic plan named by the config.
std::vector<GraphInput> resolve_corpus(const ExperimentConfig& config, std::size_t workers = 1);

/// One (graph, method, dimension, trial) outcome. Heuristic records are computed once per
/// (graph, trial) and repeated for every dimension.
struct RunRecord {
  std::string graph;
  std::string domain;
  std::size_t n = 0;
  std::size_t m = 0;
  double density = 0.0;
  double avg_degree = 0.0;
  std::string method;
  std::size_t dimension = 0;
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  std::uint64_t task_seed = 0;
  double hide_fraction = 0.0;
  std::size_t hidden_edges = 0;
  std::size_t candidates = 0;
  std::string map_mode;
  double map = 0.0;
  double random_map = 0.0;
  double map_alt = 0.0;
  double p_at_k = 0.0;
  std::size_t k = 0;
  double random_p_at_k = 0.0;
  std::string params;
  /// Wall-clock seconds; persisted separately because it varies between runs.
  double seconds = 0.0;
};

struct TaskFailure {
  std::string graph;
  std::string method;
  std::size_t dimension = 0;  ///< 0 when the failure covers every dimension
  std::size_t trial = 0;
  std::string error;
};

struct ExperimentResult {
  std::vector<RunRecord> records;  ///< sorted by (graph order, method order, dimension, trial)
  std::vector<TaskFailure> failures;
};

std::uint64_t trial_seed(std::uint64_t master, const std::string& graph, std::size_t trial);
std::uint64_t task_seed(std::uint64_t master, const std::string& graph, const std::string& method,
                        std::size_t dimension, std::size_t trial);

/// Progress callback: (finished tasks, total tasks).
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

/// Runs the grid. Task failures are recorded, not thrown. Output is independent of `workers`.
ExperimentResult run_experiment(const ExperimentConfig& config, const std::vector<GraphInput>& corpus,
                                std::size_t workers = 1, const ProgressFn& progress = {});

/// Methods with records for no graph at all, in config order.
std::vector<std::string> fully_failed_methods(const ExperimentConfig& config, const ExperimentResult& result);

/// Writes config.json, corpus.json, results.csv, timings.csv, failures.csv and gfs_report.txt.
void write_run_outputs(const std::filesystem::path& out_dir, const ExperimentConfig& config,
                       const std::vector<GraphInput>& corpus, const ExperimentResult& result);

}  // namespace gembench
