#include "gembench/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>

#include "gembench/error.hpp"
#include "gembench/rng.hpp"

namespace gembench::gen {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

void require_probability(double p, const std::string& name) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, name + " must lie in [0,1], got " + std::to_string(p));
}

std::uint64_t pair_key(NodeId u, NodeId v) {
  const auto p = NodePair::of(u, v);
  return (static_cast<std::uint64_t>(p.first) << 32) | p.second;
}

// Growing graph with unsorted adjacency lists and O(1) duplicate detection.
class DynamicGraph {
 public:
  explicit DynamicGraph(std::size_t n) : adj_(n) {}

  bool has_edge(NodeId u, NodeId v) const { return keys_.count(pair_key(u, v)) != 0; }

  bool add_edge(NodeId u, NodeId v) {
    if (u == v || !keys_.insert(pair_key(u, v)).second) return false;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    return true;
  }

  void remove_edge(NodeId u, NodeId v) {
    keys_.erase(pair_key(u, v));
    std::erase(adj_[u], v);
    std::erase(adj_[v], u);
  }

  const std::vector<NodeId>& neighbors(NodeId u) const { return adj_[u]; }
  std::size_t degree(NodeId u) const { return adj_[u].size(); }

  Graph to_graph() const {
    std::vector<Edge> edges;
    edges.reserve(keys_.size());
    for (NodeId u = 0; u < adj_.size(); ++u) {
      for (NodeId v : adj_[u]) {
        if (u < v) edges.push_back({u, v, 1.0});
      }
    }
    return Graph::from_edges(adj_.size(), std::move(edges));
  }

 private:
  std::vector<std::vector<NodeId>> adj_;
  std::unordered_set<std::uint64_t> keys_;
};

Graph from_pairs(std::size_t n, std::vector<NodePair> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto p : pairs) edges.push_back({p.first, p.second, 1.0});
  return Graph::from_edges(n, std::move(edges));
}

using Point = std::array<double, 2>;

std::vector<Point> draw_points(std::size_t n, double side, Rng& rng) {
  std::vector<Point> pts(n);
  for (auto& p : pts) {
    p[0] = side * rng.uniform();
    p[1] = side * rng.uniform();
  }
  return pts;
}

double distance(const Point& a, const Point& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

// ---------------------------------------------------------------------------
// Preferential attachment

// Draws a node proportionally to degree (via the endpoint multiset) not already in `taken`.
NodeId draw_preferential(const std::vector<NodeId>& endpoints, const std::vector<NodeId>& taken,
                         Rng& rng) {
  for (;;) {
    const NodeId t = endpoints[rng.below(endpoints.size())];
    if (std::find(taken.begin(), taken.end(), t) == taken.end()) return t;
  }
}

Graph generate_ba(const BarabasiAlbert& p, Rng& rng) {
  DynamicGraph g(p.n);
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * p.m * p.n);
  std::vector<NodeId> targets;
  for (auto source = static_cast<NodeId>(p.m); source < p.n; ++source) {
    targets.clear();
    if (endpoints.empty()) {
      // The seed nodes all have degree 0: attach uniformly, i.e. to all m of them.
      for (NodeId t = 0; t < p.m; ++t) targets.push_back(t);
    } else {
      while (targets.size() < p.m) targets.push_back(draw_preferential(endpoints, targets, rng));
    }
    for (NodeId t : targets) {
      g.add_edge(source, t);
      endpoints.push_back(t);
      endpoints.push_back(source);
    }
  }
  return g.to_graph();
}

Graph generate_plc(const PowerlawCluster& p, Rng& rng) {
  DynamicGraph g(p.n);
  std::vector<NodeId> endpoints;
  std::vector<NodeId> targets;
  std::vector<NodeId> triad;
  for (auto source = static_cast<NodeId>(p.m); source < p.n; ++source) {
    targets.clear();
    if (endpoints.empty()) {
      for (NodeId t = 0; t < p.m; ++t) targets.push_back(t);
    } else {
      NodeId anchor = draw_preferential(endpoints, targets, rng);
      targets.push_back(anchor);
      while (targets.size() < p.m) {
        if (rng.bernoulli(p.p)) {
          triad.clear();
          for (NodeId w : g.neighbors(anchor)) {
            if (std::find(targets.begin(), targets.end(), w) == targets.end()) triad.push_back(w);
          }
          if (!triad.empty()) {
            std::sort(triad.begin(), triad.end());
            targets.push_back(triad[rng.below(triad.size())]);
            continue;
          }
        }
        anchor = draw_preferential(endpoints, targets, rng);
        targets.push_back(anchor);
      }
    }
    for (NodeId t : targets) {
      g.add_edge(source, t);
      endpoints.push_back(t);
      endpoints.push_back(source);
    }
  }
  return g.to_graph();
}

// ---------------------------------------------------------------------------

Graph generate_ws(const WattsStrogatz& p, Rng& rng) {
  DynamicGraph g(p.n);
  const auto n = static_cast<NodeId>(p.n);
  for (NodeId u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= p.k / 2; ++j) g.add_edge(u, static_cast<NodeId>((u + j) % n));
  }
  if (p.p <= 0.0) return g.to_graph();
  for (std::size_t j = 1; j <= p.k / 2; ++j) {
    for (NodeId u = 0; u < n; ++u) {
      if (!rng.bernoulli(p.p)) continue;
      if (g.degree(u) >= p.n - 1) continue;
      const auto v = static_cast<NodeId>((u + j) % n);
      if (!g.has_edge(u, v)) continue;  // already rewired away from the other side
      NodeId w = 0;
      do {
        w = static_cast<NodeId>(rng.below(n));
      } while (w == u || g.has_edge(u, w));
      g.remove_edge(u, v);
      g.add_edge(u, w);
    }
  }
  return g.to_graph();
}

Graph generate_dd(const DuplicationDivergence& p, Rng& rng) {
  DynamicGraph g(p.n);
  g.add_edge(0, 1);
  std::size_t size = 2;
  std::size_t attempts = 0;
  const std::size_t max_attempts = 10000 * p.n + 100000;
  std::vector<NodeId> kept;
  while (size < p.n) {
    if (++attempts > max_attempts) {
      throw CapacityError("duplication-divergence: too many empty duplicates at p_retain=" +
                          std::to_string(p.p_retain));
    }
    const auto target = static_cast<NodeId>(rng.below(size));
    kept.clear();
    for (NodeId w : g.neighbors(target)) {
      if (rng.bernoulli(p.p_retain)) kept.push_back(w);
    }
    if (kept.empty()) continue;
    const auto fresh = static_cast<NodeId>(size++);
    for (NodeId w : kept) g.add_edge(fresh, w);
  }
  return g.to_graph();
}

Graph generate_rgg(const RandomGeometric& p, Rng& rng) {
  const auto pts = draw_points(p.n, 1.0, rng);
  std::vector<NodePair> pairs;
  for (NodeId i = 0; i < p.n; ++i) {
    for (NodeId j = i + 1; j < p.n; ++j) {
      if (distance(pts[i], pts[j]) <= p.radius) pairs.push_back({i, j});
    }
  }
  return from_pairs(p.n, std::move(pairs));
}

double max_pairwise_distance(const std::vector<Point>& pts) {
  double longest = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) longest = std::max(longest, distance(pts[i], pts[j]));
  }
  return longest;
}

Graph generate_waxman(const Waxman& p, Rng& rng) {
  const auto pts = draw_points(p.n, p.domain_size, rng);
  const double scale = p.beta * max_pairwise_distance(pts);
  std::vector<NodePair> pairs;
  for (NodeId i = 0; i < p.n; ++i) {
    for (NodeId j = i + 1; j < p.n; ++j) {
      const double d = distance(pts[i], pts[j]);
      if (d > p.radius) continue;
      const double prob = scale > 0.0 ? p.alpha * std::exp(-d / scale) : p.alpha;
      if (rng.bernoulli(prob)) pairs.push_back({i, j});
    }
  }
  return from_pairs(p.n, std::move(pairs));
}

Graph generate_sbm(const StochasticBlockModel& p, Rng& rng) {
  std::vector<std::size_t> block;
  for (std::size_t b = 0; b < p.block_sizes.size(); ++b) block.insert(block.end(), p.block_sizes[b], b);
  const auto n = block.size();
  std::vector<NodePair> pairs;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (rng.bernoulli(block[i] == block[j] ? p.p_in : p.p_out)) pairs.push_back({i, j});
    }
  }
  return from_pairs(n, std::move(pairs));
}

Graph generate_rmat(const RMat& p, Rng& rng) {
  const std::size_t n = std::size_t{1} << p.scale;
  if (p.edge_count > n * (n - 1) / 2) {
    throw CapacityError("R-Mat: cannot place " + std::to_string(p.edge_count) +
                        " distinct edges on " + std::to_string(n) + " nodes");
  }
  std::unordered_set<std::uint64_t> seen;
  std::vector<NodePair> pairs;
  pairs.reserve(p.edge_count);
  const std::size_t max_attempts = 1000 * p.edge_count + 100000;
  std::size_t attempts = 0;
  const double ab = p.a + p.b;
  const double abc = ab + p.c;
  while (pairs.size() < p.edge_count) {
    if (++attempts > max_attempts) {
      throw CapacityError("R-Mat: exceeded " + std::to_string(max_attempts) +
                          " draws placing distinct edges; quadrant probabilities too skewed");
    }
    NodeId u = 0;
    NodeId v = 0;
    for (std::size_t level = 0; level < p.scale; ++level) {
      const double r = rng.uniform();
      u <<= 1;
      v <<= 1;
      if (r < p.a) {
      } else if (r < ab) {
        v |= 1;
      } else if (r < abc) {
        u |= 1;
      } else {
        u |= 1;
        v |= 1;
      }
    }
    if (u == v) continue;
    if (seen.insert(pair_key(u, v)).second) pairs.push_back(NodePair::of(u, v));
  }
  return from_pairs(n, std::move(pairs));
}

// ---------------------------------------------------------------------------
// Hyperbolic disk

struct PolarPoint {
  double cosh_r, sinh_r, cos_t, sin_t;
};

struct HyperbolicDraw {
  std::vector<double> quantile;
  std::vector<double> angle;
};

HyperbolicDraw draw_hyperbolic(std::size_t n, Rng& rng) {
  HyperbolicDraw d;
  d.quantile.resize(n);
  d.angle.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.angle[i] = 2.0 * std::numbers::pi * rng.uniform();
    d.quantile[i] = rng.uniform();
  }
  return d;
}

std::vector<PolarPoint> place_hyperbolic(const HyperbolicDraw& d, double radius, double alpha) {
  std::vector<PolarPoint> pts(d.quantile.size());
  const double span = std::cosh(alpha * radius) - 1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    // Inverse CDF of the radial density alpha*sinh(alpha r)/(cosh(alpha R)-1).
    const double r = std::acosh(1.0 + span * d.quantile[i]) / alpha;
    pts[i] = {std::cosh(r), std::sinh(r), std::cos(d.angle[i]), std::sin(d.angle[i])};
  }
  return pts;
}

template <typename Fn>
void for_each_hyperbolic_edge(const std::vector<PolarPoint>& pts, double radius, Fn&& fn) {
  const double threshold = std::cosh(radius);
  for (NodeId i = 0; i < pts.size(); ++i) {
    for (NodeId j = i + 1; j < pts.size(); ++j) {
      const double cos_dt = pts[i].cos_t * pts[j].cos_t + pts[i].sin_t * pts[j].sin_t;
      const double cosh_d = pts[i].cosh_r * pts[j].cosh_r - pts[i].sinh_r * pts[j].sinh_r * cos_dt;
      if (cosh_d < threshold) fn(i, j);
    }
  }
}

Graph generate_hyperbolic(const RandomHyperbolic& p, Rng& rng) {
  const auto pts = place_hyperbolic(draw_hyperbolic(p.n, rng), p.radius, p.alpha);
  std::vector<NodePair> pairs;
  for_each_hyperbolic_edge(pts, p.radius, [&](NodeId i, NodeId j) { pairs.push_back({i, j}); });
  return from_pairs(p.n, std::move(pairs));
}

// ---------------------------------------------------------------------------

Graph generate_kronecker(const StochasticKronecker& p, Rng& rng) {
  const std::size_t n = std::size_t{1} << p.iterations;
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double prob = 1.0;
      for (std::size_t level = 0; level < p.iterations; ++level) {
        prob *= p.initiator[(i >> level) & 1U][(j >> level) & 1U];
      }
      // Every cell gets its own draw, diagonal included, so the stream does not depend on
      // which cells are kept.
      if (rng.bernoulli(prob) && i != j) {
        adj[i * n + j] = 1;
        adj[j * n + i] = 1;
      }
    }
  }
  std::vector<NodePair> pairs;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (adj[i * n + j] != 0) pairs.push_back({i, j});
    }
  }
  return from_pairs(n, std::move(pairs));
}

}  // namespace

std::string model_name(const ModelParams& model) {
  return std::visit(Overloaded{
                        [](const BarabasiAlbert&) { return std::string("barabasi_albert"); },
                        [](const PowerlawCluster&) { return std::string("powerlaw_cluster"); },
                        [](const WattsStrogatz&) { return std::string("watts_strogatz"); },
                        [](const DuplicationDivergence&) { return std::string("duplication_divergence"); },
                        [](const RandomGeometric&) { return std::string("random_geometric"); },
                        [](const Waxman&) { return std::string("waxman"); },
                        [](const StochasticBlockModel&) { return std::string("stochastic_block_model"); },
                        [](const RMat&) { return std::string("rmat"); },
                        [](const RandomHyperbolic&) { return std::string("random_hyperbolic"); },
                        [](const StochasticKronecker&) { return std::string("stochastic_kronecker"); },
                    },
                    model);
}

std::size_t model_num_nodes(const ModelParams& model) {
  return std::visit(Overloaded{
                        [](const StochasticBlockModel& p) {
                          std::size_t n = 0;
                          for (auto s : p.block_sizes) n += s;
                          return n;
                        },
                        [](const RMat& p) { return std::size_t{1} << p.scale; },
                        [](const StochasticKronecker& p) { return std::size_t{1} << p.iterations; },
                        [](const auto& p) { return p.n; },
                    },
                    model);
}

void validate(const GeneratorSpec& spec) {
  std::visit(
      Overloaded{
          [](const BarabasiAlbert& p) {
            require(p.m >= 1 && p.m < p.n, "barabasi_albert requires 1 <= m < n (m=" +
                                               std::to_string(p.m) + ", n=" + std::to_string(p.n) + ")");
          },
          [](const PowerlawCluster& p) {
            require(p.m >= 1 && p.m < p.n, "powerlaw_cluster requires 1 <= m < n (m=" +
                                               std::to_string(p.m) + ", n=" + std::to_string(p.n) + ")");
            require_probability(p.p, "powerlaw_cluster p");
          },
          [](const WattsStrogatz& p) {
            require(p.k % 2 == 0 && p.k < p.n, "watts_strogatz requires even k < n (k=" +
                                                   std::to_string(p.k) + ", n=" + std::to_string(p.n) + ")");
            require_probability(p.p, "watts_strogatz p");
          },
          [](const DuplicationDivergence& p) {
            require(p.n >= 2, "duplication_divergence requires n >= 2");
            require_probability(p.p_retain, "duplication_divergence p_retain");
            require(p.p_retain > 0.0, "duplication_divergence requires p_retain > 0");
          },
          [](const RandomGeometric& p) {
            require(std::isfinite(p.radius) && p.radius >= 0.0, "random_geometric radius must be >= 0");
          },
          [](const Waxman& p) {
            require_probability(p.alpha, "waxman alpha");
            require(std::isfinite(p.beta) && p.beta > 0.0, "waxman beta must be > 0");
            require(std::isfinite(p.domain_size) && p.domain_size > 0.0, "waxman domain_size must be > 0");
            require(p.radius >= 0.0, "waxman radius must be >= 0");
          },
          [](const StochasticBlockModel& p) {
            require(!p.block_sizes.empty(), "stochastic_block_model needs at least one block");
            for (auto s : p.block_sizes) require(s >= 1, "stochastic_block_model block sizes must be >= 1");
            require_probability(p.p_in, "stochastic_block_model p_in");
            require_probability(p.p_out, "stochastic_block_model p_out");
          },
          [](const RMat& p) {
            require(p.scale >= 1 && p.scale <= 24, "rmat scale must lie in [1,24]");
            for (double q : {p.a, p.b, p.c, p.d}) require_probability(q, "rmat quadrant probability");
            require(std::abs(p.a + p.b + p.c + p.d - 1.0) <= 1e-9, "rmat requires a+b+c+d = 1");
          },
          [](const RandomHyperbolic& p) {
            require(std::isfinite(p.radius) && p.radius > 0.0, "random_hyperbolic radius must be > 0");
            require(std::isfinite(p.alpha) && p.alpha > 0.0, "random_hyperbolic alpha must be > 0");
          },
          [](const StochasticKronecker& p) {
            for (const auto& row : p.initiator) {
              for (double q : row) require_probability(q, "stochastic_kronecker initiator entry");
            }
            require(p.iterations >= 1 && p.iterations <= 13,
                    "stochastic_kronecker iterations must lie in [1,13]");
          },
      },
      spec.model);
}

Graph generate(const GeneratorSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  return std::visit(Overloaded{
                        [&](const BarabasiAlbert& p) { return generate_ba(p, rng); },
                        [&](const PowerlawCluster& p) { return generate_plc(p, rng); },
                        [&](const WattsStrogatz& p) { return generate_ws(p, rng); },
                        [&](const DuplicationDivergence& p) { return generate_dd(p, rng); },
                        [&](const RandomGeometric& p) { return generate_rgg(p, rng); },
                        [&](const Waxman& p) { return generate_waxman(p, rng); },
                        [&](const StochasticBlockModel& p) { return generate_sbm(p, rng); },
                        [&](const RMat& p) { return generate_rmat(p, rng); },
                        [&](const RandomHyperbolic& p) { return generate_hyperbolic(p, rng); },
                        [&](const StochasticKronecker& p) { return generate_kronecker(p, rng); },
                    },
                    spec.model);
}

Graph isrw_sample(const Graph& graph, std::size_t target_n, std::uint64_t seed) {
  const auto n = graph.num_nodes();
  if (target_n < 1 || target_n > n) {
    throw BoundsError("isrw_sample: target_n=" + std::to_string(target_n) + " outside [1, " +
                      std::to_string(n) + "]");
  }
  if (target_n > 1 && graph.num_edges() == 0) {
    throw ValidationError("isrw_sample: graph has no edges to walk");
  }
  Rng rng(seed);
  std::vector<bool> visited(n, false);
  std::vector<NodeId> order;
  order.reserve(target_n);
  // A walk that finds nothing new for this many steps is treated as stuck.
  const std::size_t stall_limit = 64 + 8 * target_n;

  auto restart = [&]() {
    NodeId s = 0;
    do {
      s = static_cast<NodeId>(rng.below(n));
    } while (visited[s]);
    visited[s] = true;
    order.push_back(s);
    return s;
  };

  NodeId current = restart();
  std::size_t since_new = 0;
  while (order.size() < target_n) {
    const auto nb = graph.neighbors(current);
    if (nb.empty() || since_new > stall_limit) {
      current = restart();
      since_new = 0;
      continue;
    }
    current = nb[rng.below(nb.size())];
    if (!visited[current]) {
      visited[current] = true;
      order.push_back(current);
      since_new = 0;
    } else {
      ++since_new;
    }
  }
  std::sort(order.begin(), order.end());
  return induced_subgraph(graph, order);
}

double kronecker_expected_edges(const StochasticKronecker& model) {
  const auto& t = model.initiator;
  const double sum = t[0][0] + t[0][1] + t[1][0] + t[1][1];
  const double sum_sq = t[0][0] * t[0][0] + t[0][1] * t[0][1] + t[1][0] * t[1][0] + t[1][1] * t[1][1];
  const double diag = t[0][0] + t[1][1];
  const double diag_sq = t[0][0] * t[0][0] + t[1][1] * t[1][1];
  const auto k = static_cast<double>(model.iterations);
  // For a symmetric initiator, cells (i,j) and (j,i) share p, and the OR of two draws is an
  // edge with probability 2p - p^2. Summing over ordered off-diagonal cells counts each pair
  // twice, hence the halving.
  const double off_p = std::pow(sum, k) - std::pow(diag, k);
  const double off_p2 = std::pow(sum_sq, k) - std::pow(diag_sq, k);
  return 0.5 * (2.0 * off_p - off_p2);
}

double geometric_radius_for_edges(std::size_t n, std::size_t edges, std::uint64_t seed) {
  if (edges == 0) return 0.0;
  const std::size_t pairs_total = n * (n - 1) / 2;
  if (edges > pairs_total) {
    throw ValidationError("random_geometric: " + std::to_string(edges) + " edges exceed " +
                          std::to_string(pairs_total) + " node pairs");
  }
  Rng rng(seed);
  const auto pts = draw_points(n, 1.0, rng);
  // Collect distances under a bound that grows until it holds enough pairs.
  double bound = std::sqrt(2.0 * static_cast<double>(edges) / (std::numbers::pi * static_cast<double>(n) *
                                                                 static_cast<double>(n)));
  std::vector<double> close;
  for (;;) {
    bound = std::min(2.0 * bound, std::numbers::sqrt2);
    close.clear();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = distance(pts[i], pts[j]);
        if (d <= bound) close.push_back(d);
      }
    }
    if (close.size() >= edges || bound >= std::numbers::sqrt2) break;
  }
  std::nth_element(close.begin(), close.begin() + static_cast<std::ptrdiff_t>(edges - 1), close.end());
  return close[edges - 1];
}

double waxman_alpha_for_edges(std::size_t n, double beta, double domain_size, std::size_t edges,
                              std::uint64_t seed) {
  Rng rng(seed);
  const auto pts = draw_points(n, domain_size, rng);
  const double scale = beta * max_pairwise_distance(pts);
  double mass = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) mass += std::exp(-distance(pts[i], pts[j]) / scale);
  }
  if (mass <= 0.0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(edges) / mass;
}

double hyperbolic_radius_for_degree(std::size_t n, double alpha, double avg_degree, std::uint64_t seed) {
  Rng rng(seed);
  const auto draw = draw_hyperbolic(n, rng);
  auto degree_at = [&](double radius) {
    std::size_t count = 0;
    for_each_hyperbolic_edge(place_hyperbolic(draw, radius, alpha), radius,
                             [&](NodeId, NodeId) { ++count; });
    return 2.0 * static_cast<double>(count) / static_cast<double>(n);
  };
  // Average degree falls as the disk grows.
  double lo = 1e-3;
  double hi = 4.0 * std::log(static_cast<double>(n)) + 10.0;
  double best = hi;
  double best_gap = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 40; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double deg = degree_at(mid);
    if (std::abs(deg - avg_degree) < best_gap) {
      best_gap = std::abs(deg - avg_degree);
      best = mid;
    }
    if (deg > avg_degree) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return best;
}

}  // namespace gembench::gen
