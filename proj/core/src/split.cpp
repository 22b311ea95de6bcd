#include "gembench/split.hpp"

#include <algorithm>
#include <cmath>

#include "gembench/error.hpp"
#include "gembench/rng.hpp"

namespace gembench {

std::size_t EdgeSplit::num_candidates() const noexcept {
  const std::size_t n = train.num_nodes();
  return n * (n > 0 ? n - 1 : 0) / 2 - train.num_edges();
}

bool EdgeSplit::is_hidden(NodePair pair) const {
  return std::binary_search(hidden.begin(), hidden.end(), pair);
}

std::vector<NodePair> random_spanning_forest(const Graph& graph, std::uint64_t seed) {
  const std::size_t n = graph.num_nodes();
  Rng rng(seed);
  std::size_t num_components = 0;
  const auto component = connected_components(graph, &num_components);

  constexpr auto none = static_cast<NodeId>(-1);
  std::vector<bool> in_tree(n, false);
  std::vector<NodeId> next(n, none);
  // Root each component at a uniformly chosen member.
  std::vector<std::vector<NodeId>> members(num_components);
  for (NodeId v = 0; v < n; ++v) members[component[v]].push_back(v);
  for (const auto& group : members) in_tree[group[rng.below(group.size())]] = true;

  std::vector<NodePair> forest;
  for (NodeId start = 0; start < n; ++start) {
    // Loop-erased random walk until the current tree is hit; `next` keeps the last exit.
    NodeId u = start;
    while (!in_tree[u]) {
      const auto nbrs = graph.neighbors(u);
      next[u] = nbrs[rng.below(nbrs.size())];
      u = next[u];
    }
    for (u = start; !in_tree[u]; u = next[u]) {
      in_tree[u] = true;
      forest.push_back(NodePair::of(u, next[u]));
    }
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

EdgeSplit split_edges(const Graph& graph, double hide_fraction, std::uint64_t seed, bool preserve_connectivity) {
  if (!(hide_fraction >= 0.0 && hide_fraction < 1.0)) {
    throw ValidationError("hide_fraction must lie in [0, 1)");
  }
  const auto& edges = graph.edges();
  const auto quota = static_cast<std::size_t>(std::floor(hide_fraction * static_cast<double>(edges.size())));

  std::vector<std::size_t> eligible;
  eligible.reserve(edges.size());
  if (preserve_connectivity && quota > 0) {
    const auto forest = random_spanning_forest(graph, stable_hash(seed, 1));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!std::binary_search(forest.begin(), forest.end(), edges[i].pair())) eligible.push_back(i);
    }
  } else {
    for (std::size_t i = 0; i < edges.size(); ++i) eligible.push_back(i);
  }

  Rng rng(stable_hash(seed, 2));
  rng.shuffle(eligible);
  const std::size_t take = std::min(quota, eligible.size());
  std::vector<bool> hide(edges.size(), false);
  for (std::size_t i = 0; i < take; ++i) hide[eligible[i]] = true;

  EdgeSplit split;
  split.hide_fraction = hide_fraction;
  split.shortfall = quota - take;
  std::vector<Edge> kept;
  kept.reserve(edges.size() - take);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (hide[i]) {
      split.hidden.push_back(edges[i].pair());
    } else {
      kept.push_back(edges[i]);
    }
  }
  split.train = Graph::from_edges(graph.num_nodes(), std::move(kept));
  return split;
}

}  // namespace gembench
