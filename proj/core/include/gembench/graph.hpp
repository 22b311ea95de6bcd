#pragma once

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace gembench {

using NodeId = std::uint32_t;
using DenseMatrix = Eigen::MatrixXd;

/// Unordered node pair stored canonically with first < second.
struct NodePair {
  NodeId first = 0;
  NodeId second = 0;

  static constexpr NodePair of(NodeId u, NodeId v) noexcept {
    return u < v ? NodePair{u, v} : NodePair{v, u};
  }
  friend constexpr auto operator<=>(const NodePair&, const NodePair&) = default;
};

struct Edge {
  NodeId u = 0;  ///< always < v
  NodeId v = 0;
  double weight = 1.0;

  NodePair pair() const noexcept { return {u, v}; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected, weighted, simple graph on nodes 0..n-1.
///
/// Stored as CSR with sorted neighbor lists, so `has_edge` is a binary search. Immutable
/// once built; use `GraphBuilder` to assemble one.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n nodes.
  explicit Graph(std::size_t n);

  /// Builds from canonical edges. Throws ValidationError on self-loops, duplicates,
  /// out-of-range ids or non-positive / non-finite weights.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  /// Edges sorted lexicographically by (u, v), u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const NodeId> neighbors(NodeId u) const;
  std::span<const double> neighbor_weights(NodeId u) const;
  std::size_t degree(NodeId u) const;

  bool has_edge(NodeId u, NodeId v) const;
  /// Weight of (u,v), or 0 when absent.
  double weight(NodeId u, NodeId v) const;

  /// Dense symmetric |V|x|V| weight matrix W.
  DenseMatrix adjacency_matrix() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_nodes() == b.num_nodes() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<double> weights_;

  void check_node(NodeId u) const;
};

/// Accumulates edges in any orientation. A repeated pair keeps the last weight; self-loops
/// are counted and discarded.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n = 0) : n_(n) {}

  void add_edge(NodeId u, NodeId v, double weight = 1.0);
  /// Grow the node count to at least n.
  void reserve_nodes(std::size_t n) { n_ = std::max(n_, n); }

  std::size_t dropped_self_loops() const noexcept { return self_loops_; }
  std::size_t duplicate_edges() const noexcept { return duplicates_; }

  Graph build();

 private:
  std::size_t n_;
  std::vector<Edge> pending_;
  std::size_t self_loops_ = 0;
  std::size_t duplicates_ = 0;
};

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  double density = 0.0;  ///< 2m / (n(n-1)); 0 when n < 2
  double avg_degree = 0.0;
  std::size_t diameter_lcc = 0;
  double avg_clustering = 0.0;
  std::size_t num_components = 0;
};

GraphStats compute_stats(const Graph& graph);

/// Induced subgraph on `nodes`, relabelled in the given order (new id i <- nodes[i]).
Graph induced_subgraph(const Graph& graph, std::span<const NodeId> nodes);

struct Subgraph {
  Graph graph;
  std::vector<NodeId> original_ids;  ///< new id -> original id
};

/// Component id per node; components are numbered by increasing smallest member.
std::vector<std::size_t> connected_components(const Graph& graph, std::size_t* count = nullptr);

bool is_connected(const Graph& graph);

/// Largest component, ties broken by the smallest original node id it contains.
Subgraph largest_connected_component(const Graph& graph);

/// Unweighted BFS hop distances from `source`; unreachable nodes get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& graph, NodeId source);

/// Labelled graph domain. `other` carries a free-form name.
class DomainLabel {
 public:
  enum class Kind { social, biology, economic, technological, internet, other };

  DomainLabel() = default;
  DomainLabel(Kind kind) : kind_(kind) {}  // NOLINT(google-explicit-constructor)
  static DomainLabel other(std::string name);
  /// Known names map to their kind; anything else becomes other(name).
  static DomainLabel parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  std::string name() const;

  friend bool operator==(const DomainLabel&, const DomainLabel&) = default;
  friend auto operator<=>(const DomainLabel& a, const DomainLabel& b) { return a.name() <=> b.name(); }

 private:
  Kind kind_ = Kind::other;
  std::string other_;
};

}  // namespace gembench
