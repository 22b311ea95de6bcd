#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gembench/corpus.hpp"
#include "gembench/embeddings.hpp"
#include "gembench/evaluation.hpp"

namespace gembench {

/// Everything a `run` needs. Read from a JSON document; every field is optional.
struct ExperimentConfig {
  /// Exactly one corpus source: a manifest file or a synthetic plan.
  std::optional<std::filesystem::path> manifest;
  std::optional<CorpusPlan> plan;
  /// Seed for building the synthetic corpus; defaults to the master seed.
  std::optional<std::uint64_t> corpus_seed;

  std::vector<std::string> methods{"lap_eigen", "gf", "hope", "sdne", "pa", "cn", "aa", "jc"};
  std::vector<std::size_t> dimensions{16, 32, 64, 128};
  std::vector<std::size_t> size_bins{256, 512, 1024};
  std::vector<double> degree_bins{3.0, 4.0, 5.0};
  /// Average-degree window for size panels of the plot series.
  std::array<double, 2> density_range{3.0, 5.0};

  double hide_fraction = 0.2;
  bool preserve_connectivity = true;
  std::size_t trials = 1;
  std::uint64_t seed = 42;
  std::size_t k = 100;
  eval::MapMode map_mode = eval::MapMode::all_nodes;
  std::size_t baseline_trials = 10;

  embed::GfParams gf;
  embed::HopeParams hope;
  embed::SdneParams sdne;
  /// Per-method decoder overrides.
  std::map<std::string, embed::Decoder> decoders;
};

/// Throws ValidationError for unknown methods, non power-of-two dimensions, trials == 0 and
/// similar; ParseError for malformed JSON. Relative paths resolve against base_dir.
ExperimentConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);
void validate(const ExperimentConfig& config);

/// Canonical JSON form holding every field (the run snapshot).
std::string config_to_json(const ExperimentConfig& config);

/// GEMBENCH_SEED replaces the master seed when set.
void apply_env_overrides(ExperimentConfig& config);
/// GEMBENCH_WORKERS when set, else `requested`.
std::size_t workers_from_env(std::size_t requested);

bool is_embedding_method(const std::string& id);
bool is_heuristic_method(const std::string& id);

/// "key=value;..." of the hyperparameters that produced a method's records.
std::string method_params_string(const ExperimentConfig& config, const std::string& method);

}  // namespace gembench
