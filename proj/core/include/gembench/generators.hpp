#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "gembench/graph.hpp"

namespace gembench::gen {

/// Preferential attachment. Starts from m isolated nodes; every new node attaches m edges.
struct BarabasiAlbert {
  std::size_t n = 0;
  std::size_t m = 1;
};

/// Preferential attachment with a triad-formation step taken with probability p.
struct PowerlawCluster {
  std::size_t n = 0;
  std::size_t m = 1;
  double p = 0.0;
};

/// Ring lattice of even degree k, each lattice edge rewired with probability p.
struct WattsStrogatz {
  std::size_t n = 0;
  std::size_t k = 2;
  double p = 0.0;
};

/// Duplication-divergence growth from a single edge; duplicate edges kept with p_retain.
struct DuplicationDivergence {
  std::size_t n = 0;
  double p_retain = 0.5;
};

/// Uniform points in the unit square; edge when Euclidean distance <= radius.
struct RandomGeometric {
  std::size_t n = 0;
  double radius = 0.1;
};

/// Uniform points in a square of side domain_size; edge with probability
/// alpha * exp(-dist / (beta * L)), L the largest pairwise distance, only for dist <= radius.
struct Waxman {
  std::size_t n = 0;
  double alpha = 0.4;
  double beta = 0.1;
  double domain_size = 1.0;
  double radius = std::numeric_limits<double>::infinity();
};

struct StochasticBlockModel {
  std::vector<std::size_t> block_sizes;
  double p_in = 0.0;
  double p_out = 0.0;
};

/// Recursive-matrix generator on 2^scale nodes with exactly edge_count distinct edges.
struct RMat {
  std::size_t scale = 0;
  std::size_t edge_count = 0;
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
};

/// Points in a hyperbolic disk of radius R (radial density alpha*sinh(alpha r)); edge when the
/// hyperbolic distance is below R.
struct RandomHyperbolic {
  std::size_t n = 0;
  double radius = 10.0;
  double alpha = 1.0;
};

/// k-fold Kronecker power of a 2x2 probability initiator, one Bernoulli draw per cell.
struct StochasticKronecker {
  std::array<std::array<double, 2>, 2> initiator{{{0.9, 0.5}, {0.5, 0.1}}};
  std::size_t iterations = 1;
};

using ModelParams = std::variant<BarabasiAlbert, PowerlawCluster, WattsStrogatz,
                                 DuplicationDivergence, RandomGeometric, Waxman,
                                 StochasticBlockModel, RMat, RandomHyperbolic,
                                 StochasticKronecker>;

struct GeneratorSpec {
  ModelParams model;
  std::uint64_t seed = 0;
};

/// Short machine name ("barabasi_albert", "stochastic_block_model", ...).
std::string model_name(const ModelParams& model);
std::size_t model_num_nodes(const ModelParams& model);

/// Throws ValidationError naming the violated bound.
void validate(const GeneratorSpec& spec);

/// Deterministic in (spec, seed).
Graph generate(const GeneratorSpec& spec);

/// Induced-subgraph random-walk sample with exactly target_n nodes, relabelled by
/// increasing original id.
Graph isrw_sample(const Graph& graph, std::size_t target_n, std::uint64_t seed);

/// Expected number of undirected edges of a Kronecker spec under per-cell draws with OR
/// symmetrization, excluding the diagonal.
double kronecker_expected_edges(const StochasticKronecker& model);

// Parameter calibration. Each helper reproduces the positions `generate` draws for the same
// seed, so the returned parameter is exact for that realization.

/// Smallest radius giving RandomGeometric(n, radius) at least `edges` edges for this seed.
double geometric_radius_for_edges(std::size_t n, std::size_t edges, std::uint64_t seed);

/// Waxman alpha whose expected edge count over this seed's positions equals `edges`.
/// May exceed 1 when the target is unreachable at this beta.
double waxman_alpha_for_edges(std::size_t n, double beta, double domain_size, std::size_t edges,
                              std::uint64_t seed);

/// Disk radius whose realized average degree is closest to `avg_degree` (bisection).
double hyperbolic_radius_for_degree(std::size_t n, double alpha, double avg_degree,
                                    std::uint64_t seed);

}  // namespace gembench::gen
