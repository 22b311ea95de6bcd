#pragma once

// Independent reference implementations used only by tests. They share no code with the
// library beyond the plain data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gembench/graph.hpp"

namespace oracle {

using gembench::DenseMatrix;
using gembench::NodeId;
using gembench::NodePair;

inline bool contains(const std::vector<NodePair>& v, NodePair p) {
  for (const auto& q : v) {
    if (q.first == p.first && q.second == p.second) return true;
  }
  return false;
}

inline double precision_at_k(const std::vector<NodePair>& ranking, const std::vector<NodePair>& hidden, std::size_t k) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < k && i < ranking.size(); ++i) {
    if (contains(hidden, ranking[i])) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

/// AP(i) = sum_k P@k(i) * hit(k) / #hits, evaluated literally.
inline double average_precision(const std::vector<NodePair>& ranking, const std::vector<NodePair>& hidden) {
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t k = 1; k <= ranking.size(); ++k) {
    if (!contains(hidden, ranking[k - 1])) continue;
    ++hits;
    std::size_t upto = 0;
    for (std::size_t j = 0; j < k; ++j) upto += contains(hidden, ranking[j]) ? 1 : 0;
    sum += static_cast<double>(upto) / static_cast<double>(k);
  }
  return hits == 0 ? 0.0 : sum / static_cast<double>(hits);
}

inline double map_all_nodes(const std::vector<std::vector<NodePair>>& per_node, const std::vector<NodePair>& hidden) {
  double total = 0.0;
  for (const auto& r : per_node) total += average_precision(r, hidden);
  return per_node.empty() ? 0.0 : total / static_cast<double>(per_node.size());
}

inline double map_nodes_with_hidden(const std::vector<std::vector<NodePair>>& per_node,
                                    const std::vector<NodePair>& hidden) {
  double total = 0.0;
  std::size_t covered = 0;
  for (std::size_t i = 0; i < per_node.size(); ++i) {
    bool any = false;
    for (const auto& p : hidden) any = any || p.first == i || p.second == i;
    if (any) ++covered;
    total += average_precision(per_node[i], hidden);
  }
  return covered == 0 ? 0.0 : total / static_cast<double>(covered);
}

/// Dense 0/1 adjacency.
inline std::vector<std::vector<int>> adjacency(const gembench::Graph& g) {
  const auto n = g.num_nodes();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

inline double degree(const std::vector<std::vector<int>>& a, std::size_t u) {
  double d = 0;
  for (int x : a[u]) d += x;
  return d;
}

inline double pa(const std::vector<std::vector<int>>& a, std::size_t u, std::size_t v) { return degree(a, u) * degree(a, v); }

inline double cn(const std::vector<std::vector<int>>& a, std::size_t u, std::size_t v) {
  double c = 0;
  for (std::size_t z = 0; z < a.size(); ++z) c += (a[u][z] && a[v][z]) ? 1 : 0;
  return c;
}

inline double aa(const std::vector<std::vector<int>>& a, std::size_t u, std::size_t v) {
  double s = 0;
  for (std::size_t z = 0; z < a.size(); ++z) {
    if (a[u][z] && a[v][z]) s += 1.0 / std::log(degree(a, z));
  }
  return s;
}

inline double jc(const std::vector<std::vector<int>>& a, std::size_t u, std::size_t v) {
  double inter = 0;
  double uni = 0;
  for (std::size_t z = 0; z < a.size(); ++z) {
    inter += (a[u][z] && a[v][z]) ? 1 : 0;
    uni += (a[u][z] || a[v][z]) ? 1 : 0;
  }
  return uni == 0 ? 0.0 : inter / uni;
}

/// Cyclic Jacobi rotations on a symmetric matrix; eigenvalues ascending, vectors in columns.
inline std::pair<Eigen::VectorXd, DenseMatrix> jacobi_eigen(DenseMatrix a) {
  const auto n = a.rows();
  DenseMatrix v = DenseMatrix::Identity(n, n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (off < 1e-30) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) < a(j, j); });
  Eigen::VectorXd values(n);
  DenseMatrix vectors(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    values(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
    vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return {values, vectors};
}

/// Singular values (descending) by one-sided Jacobi orthogonalization of the columns.
inline Eigen::VectorXd jacobi_singular_values(DenseMatrix a) {
  const auto n = a.cols();
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double alpha = a.col(p).squaredNorm();
        const double beta = a.col(q).squaredNorm();
        const double gamma = a.col(p).dot(a.col(q));
        if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta) || gamma == 0.0) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const Eigen::VectorXd cp = a.col(p);
        a.col(p) = c * cp - s * a.col(q);
        a.col(q) = s * cp + c * a.col(q);
      }
    }
    if (!rotated) break;
  }
  Eigen::VectorXd s(n);
  for (Eigen::Index i = 0; i < n; ++i) s(i) = a.col(i).norm();
  std::sort(s.data(), s.data() + n, std::greater<>());
  return s;
}

/// Frobenius error of the best rank-k approximation: sqrt of the tail singular values squared.
inline double eckart_young_error(const Eigen::VectorXd& s, std::size_t k) {
  double tail = 0.0;
  for (Eigen::Index i = static_cast<Eigen::Index>(k); i < s.size(); ++i) tail += s(i) * s(i);
  return std::sqrt(tail);
}

/// Erdos-Renyi G(n, p) from a test-local engine.
inline gembench::Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<gembench::Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (u(rng) < p) edges.push_back({i, j, 1.0});
    }
  }
  return gembench::Graph::from_edges(n, edges);
}

/// Random spanning tree (random recursive tree) plus G(n, p) extra edges: always connected.
inline gembench::Graph random_connected_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  std::vector<gembench::Edge> edges;
  auto add = [&](NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    if (a == b || has[a][b]) return;
    has[a][b] = true;
    edges.push_back({a, b, 1.0});
  };
  for (NodeId i = 1; i < n; ++i) add(static_cast<NodeId>(rng() % i), i);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (u(rng) < p) add(i, j);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) { return x.pair() < y.pair(); });
  return gembench::Graph::from_edges(n, edges);
}

inline gembench::Graph complete_graph(std::size_t n) {
  std::vector<gembench::Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  }
  return gembench::Graph::from_edges(n, edges);
}

inline gembench::Graph ring_graph(std::size_t n) {
  std::vector<gembench::Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    const NodeId j = static_cast<NodeId>((i + 1) % n);
    edges.push_back({std::min(i, j), std::max(i, j), 1.0});
  }
  return gembench::Graph::from_edges(n, edges);
}

inline gembench::Graph path_graph(std::size_t n) {
  std::vector<gembench::Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return gembench::Graph::from_edges(n, edges);
}

}  // namespace oracle
