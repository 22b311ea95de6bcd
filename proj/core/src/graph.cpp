#include "gembench/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "gembench/error.hpp"

namespace gembench {

Graph::Graph(std::size_t n) : offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u == e.v) {
      throw ValidationError("self-loop on node " + std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw ValidationError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") references a node >= n=" + std::to_string(n));
    }
    if (!std::isfinite(e.weight) || e.weight <= 0.0) {
      throw ValidationError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has non-positive or non-finite weight");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.pair() < b.pair(); });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].pair() == edges[i - 1].pair()) {
      throw ValidationError("duplicate edge (" + std::to_string(edges[i].u) + "," +
                            std::to_string(edges[i].v) + ")");
    }
  }

  Graph g(n);
  g.edges_ = std::move(edges);
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
  g.targets_.resize(2 * g.edges_.size());
  g.weights_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u,v), so filling in this order leaves every list sorted:
  // node x receives its smaller neighbours (as v) before its larger ones (as u).
  for (const auto& e : g.edges_) {
    g.targets_[cursor[e.v]] = e.u;
    g.weights_[cursor[e.v]++] = e.weight;
  }
  for (const auto& e : g.edges_) {
    g.targets_[cursor[e.u]] = e.v;
    g.weights_[cursor[e.u]++] = e.weight;
  }
  return g;
}

void Graph::check_node(NodeId u) const {
  if (u >= num_nodes()) {
    throw BoundsError("node " + std::to_string(u) + " out of range for graph with " +
                      std::to_string(num_nodes()) + " nodes");
  }
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  check_node(u);
  return {targets_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

std::span<const double> Graph::neighbor_weights(NodeId u) const {
  check_node(u);
  return {weights_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

std::size_t Graph::degree(NodeId u) const {
  check_node(u);
  return offsets_[u + 1] - offsets_[u];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto nb = neighbors(u);
  check_node(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

double Graph::weight(NodeId u, NodeId v) const {
  const auto nb = neighbors(u);
  check_node(v);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return 0.0;
  return weights_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

DenseMatrix Graph::adjacency_matrix() const {
  const auto n = static_cast<Eigen::Index>(num_nodes());
  DenseMatrix w = DenseMatrix::Zero(n, n);
  for (const auto& e : edges_) {
    w(e.u, e.v) = e.weight;
    w(e.v, e.u) = e.weight;
  }
  return w;
}

void GraphBuilder::add_edge(NodeId u, NodeId v, double weight) {
  if (u == v) {
    ++self_loops_;
    return;
  }
  if (u > v) std::swap(u, v);
  n_ = std::max<std::size_t>(n_, static_cast<std::size_t>(v) + 1);
  pending_.push_back({u, v, weight});
}

Graph GraphBuilder::build() {
  // Stable sort keeps insertion order among repeats so the last one can win.
  std::vector<Edge> edges = pending_;
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) { return a.pair() < b.pair(); });
  std::vector<Edge> unique;
  unique.reserve(edges.size());
  duplicates_ = 0;
  for (const auto& e : edges) {
    if (!unique.empty() && unique.back().pair() == e.pair()) {
      unique.back().weight = e.weight;
      ++duplicates_;
    } else {
      unique.push_back(e);
    }
  }
  return Graph::from_edges(n_, std::move(unique));
}

std::vector<std::size_t> bfs_distances(const Graph& graph, NodeId source) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(graph.num_nodes(), kUnreached);
  std::vector<NodeId> queue;
  queue.reserve(graph.num_nodes());
  dist.at(source) = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId v : graph.neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::size_t> connected_components(const Graph& graph, std::size_t* count) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  const auto n = graph.num_nodes();
  std::vector<std::size_t> comp(n, kUnset);
  std::vector<NodeId> stack;
  std::size_t next = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : graph.neighbors(u)) {
        if (comp[v] == kUnset) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

bool is_connected(const Graph& graph) {
  std::size_t count = 0;
  connected_components(graph, &count);
  return count <= 1;
}

Graph induced_subgraph(const Graph& graph, std::span<const NodeId> nodes) {
  constexpr auto kAbsent = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> relabel(graph.num_nodes(), kAbsent);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] >= graph.num_nodes()) {
      throw BoundsError("induced_subgraph: node " + std::to_string(nodes[i]) + " out of range");
    }
    if (relabel[nodes[i]] != kAbsent) {
      throw ValidationError("induced_subgraph: node " + std::to_string(nodes[i]) + " listed twice");
    }
    relabel[nodes[i]] = static_cast<NodeId>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : graph.edges()) {
    if (relabel[e.u] != kAbsent && relabel[e.v] != kAbsent) {
      edges.push_back({relabel[e.u], relabel[e.v], e.weight});
    }
  }
  return Graph::from_edges(nodes.size(), std::move(edges));
}

Subgraph largest_connected_component(const Graph& graph) {
  if (graph.num_nodes() == 0) throw ValidationError("largest_connected_component: empty graph");
  std::size_t count = 0;
  const auto comp = connected_components(graph, &count);
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  // Components are numbered by their smallest member, so the first maximum wins the tie.
  const auto best = static_cast<std::size_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  Subgraph out;
  for (NodeId u = 0; u < graph.num_nodes(); ++u) {
    if (comp[u] == best) out.original_ids.push_back(u);
  }
  out.graph = induced_subgraph(graph, out.original_ids);
  return out;
}

namespace {

double local_clustering(const Graph& g, NodeId v) {
  const auto nb = g.neighbors(v);
  const std::size_t k = nb.size();
  if (k < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto ni = g.neighbors(nb[i]);
    // Count neighbours of nb[i] that are in nb and larger than nb[i] (sorted merge).
    auto a = std::upper_bound(ni.begin(), ni.end(), nb[i]);
    auto b = nb.begin() + static_cast<std::ptrdiff_t>(i) + 1;
    while (a != ni.end() && b != nb.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++links;
        ++a;
        ++b;
      }
    }
  }
  return 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

}  // namespace

GraphStats compute_stats(const Graph& graph) {
  GraphStats s;
  s.n = graph.num_nodes();
  s.m = graph.num_edges();
  if (s.n == 0) return s;
  const double n = static_cast<double>(s.n);
  const double m = static_cast<double>(s.m);
  s.density = s.n > 1 ? 2.0 * m / (n * (n - 1.0)) : 0.0;
  s.avg_degree = 2.0 * m / n;

  double clustering = 0.0;
  for (NodeId v = 0; v < s.n; ++v) clustering += local_clustering(graph, v);
  s.avg_clustering = clustering / n;

  std::size_t count = 0;
  const auto comp = connected_components(graph, &count);
  s.num_components = count;
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  const auto best = static_cast<std::size_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  for (NodeId u = 0; u < s.n; ++u) {
    if (comp[u] != best) continue;
    for (auto d : bfs_distances(graph, u)) {
      if (d != std::numeric_limits<std::size_t>::max()) s.diameter_lcc = std::max(s.diameter_lcc, d);
    }
  }
  return s;
}

DomainLabel DomainLabel::other(std::string name) {
  DomainLabel d(Kind::other);
  d.other_ = std::move(name);
  return d;
}

DomainLabel DomainLabel::parse(const std::string& text) {
  if (text == "social") return Kind::social;
  if (text == "biology" || text == "biological") return Kind::biology;
  if (text == "economic") return Kind::economic;
  if (text == "technological") return Kind::technological;
  if (text == "internet") return Kind::internet;
  if (text.empty()) throw ValidationError("empty domain label");
  return other(text);
}

std::string DomainLabel::name() const {
  switch (kind_) {
    case Kind::social:
      return "social";
    case Kind::biology:
      return "biology";
    case Kind::economic:
      return "economic";
    case Kind::technological:
      return "technological";
    case Kind::internet:
      return "internet";
    case Kind::other:
      break;
  }
  return other_.empty() ? "other" : other_;
}

}  // namespace gembench
