#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gembench/generators.hpp"
#include "gembench/graph.hpp"

namespace gembench {

using Initiator = std::array<std::array<double, 2>, 2>;

struct DomainPlan {
  DomainLabel domain;
  /// Generator names as reported by gen::model_name.
  std::vector<std::string> generators;
  /// Base shape of the domain's Kronecker initiator; rescaled to hit each degree target.
  Initiator kronecker_initiator{{{0.95, 0.5}, {0.5, 0.25}}};
};

/// Which synthetic graphs to build and how to tune the free model parameters.
struct CorpusPlan {
  std::vector<std::size_t> sizes{256, 512, 1024};
  std::vector<double> degrees{3.0, 4.0, 5.0};
  std::vector<DomainPlan> domains;
  /// Adds one Stochastic Kronecker graph per (domain, size, degree).
  bool add_kronecker = true;

  std::size_t sbm_blocks = 4;
  double sbm_in_out_ratio = 10.0;  ///< p_in / p_out
  double plc_triad_p = 0.5;
  double ws_rewire_p = 0.1;
  double waxman_beta = 0.1;
  double hyperbolic_alpha = 1.0;
  std::array<double, 4> rmat_probs{0.57, 0.19, 0.19, 0.05};

  /// social: SBM / geometric / Waxman; biology: Watts-Strogatz / duplication-divergence /
  /// hyperbolic; internet: Barabasi-Albert / powerlaw-cluster / R-Mat.
  static CorpusPlan appendix_default();
};

struct CorpusEntry {
  std::string name;
  DomainLabel domain;
  gen::GeneratorSpec spec;
  Graph graph;
  std::size_t target_n = 0;
  double target_degree = 0.0;
};

/// Solves each generator's parameters for the planned (size, average degree) and generates
/// the graph. Entry i is seeded with stable_hash(seed, i); output order is domain, size,
/// degree, generator, with the Kronecker graph last in each group.
std::vector<CorpusEntry> build_synthetic_corpus(const CorpusPlan& plan, std::uint64_t seed,
                                                std::size_t workers = 1);

/// Parameters for one planned graph (no generation). Throws ValidationError when the degree
/// target cannot be met by the model.
gen::GeneratorSpec calibrate_generator(const std::string& generator, const DomainPlan& domain,
                                       const CorpusPlan& plan, std::size_t n, double avg_degree,
                                       std::uint64_t seed);

CorpusPlan parse_corpus_plan(const std::string& json_text);
CorpusPlan load_corpus_plan(const std::filesystem::path& path);
std::string corpus_plan_to_json(const CorpusPlan& plan);

std::string generator_spec_to_json(const gen::GeneratorSpec& spec);
gen::GeneratorSpec generator_spec_from_json(const std::string& json_text);

}  // namespace gembench
