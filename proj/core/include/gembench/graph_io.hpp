#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>

#include "gembench/graph.hpp"

namespace gembench {

struct EdgeListLoadReport {
  std::size_t lines = 0;
  std::size_t dropped_self_loops = 0;
  std::size_t duplicate_edges = 0;  ///< repeated pairs (either orientation); last weight kept
};

/// Reads a whitespace-delimited edge list: one "u v [w]" per line, '#' starts a comment.
/// Node count is max id + 1, or n_hint when larger. Directed input is symmetrized.
Graph load_edge_list(const std::filesystem::path& path, std::optional<std::size_t> n_hint = {},
                     EdgeListLoadReport* report = nullptr);

/// Writes "u v w" per edge with u < v, in lexicographic order.
void save_edge_list(const Graph& graph, const std::filesystem::path& path);

}  // namespace gembench
