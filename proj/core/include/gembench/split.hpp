#pragma once

#include <cstdint>
#include <vector>

#include "gembench/graph.hpp"

namespace gembench {

/// Train graph plus held-out edges. Candidates are every unordered pair u != v that is not a
/// train edge; hidden edges are always candidates.
struct EdgeSplit {
  Graph train;
  std::vector<NodePair> hidden;  ///< sorted
  double hide_fraction = 0.0;
  /// Edges that could not be hidden because every remaining eligible edge was exempt.
  std::size_t shortfall = 0;

  std::size_t num_nodes() const noexcept { return train.num_nodes(); }
  std::size_t num_candidates() const noexcept;
  bool is_hidden(NodePair pair) const;
};

/// Hides floor(hide_fraction * m) edges chosen uniformly. With preserve_connectivity, the
/// edges of a uniform random spanning forest (one tree per component) are never hidden.
EdgeSplit split_edges(const Graph& graph, double hide_fraction, std::uint64_t seed,
                      bool preserve_connectivity = true);

/// Uniform spanning forest by Wilson's algorithm, one tree per component. Returned edges
/// are canonical pairs, sorted.
std::vector<NodePair> random_spanning_forest(const Graph& graph, std::uint64_t seed);

}  // namespace gembench
