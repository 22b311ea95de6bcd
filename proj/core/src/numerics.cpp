#include "gembench/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gembench/error.hpp"

namespace gembench::num {
namespace {

constexpr double symmetry_tolerance = 1e-10;

bool is_symmetric(const DenseMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = j + 1; i < a.rows(); ++i) {
      if (std::abs(a(i, j) - a(j, i)) > tol) return false;
    }
  }
  return true;
}

/// Flips `col` (and the matching column of `partner`, if any) so its largest-magnitude
/// component is positive.
void fix_sign(DenseMatrix& m, Eigen::Index col, DenseMatrix* partner = nullptr) {
  Eigen::Index arg = 0;
  m.col(col).cwiseAbs().maxCoeff(&arg);
  if (m(arg, col) < 0.0) {
    m.col(col) *= -1.0;
    if (partner) partner->col(col) *= -1.0;
  }
}

}  // namespace

EigenPairs sym_eig_smallest(const DenseMatrix& a, std::size_t k) {
  if (a.rows() != a.cols()) throw ValidationError("eigensolver needs a square matrix");
  if (!is_symmetric(a, symmetry_tolerance)) throw ValidationError("eigensolver needs a symmetric matrix");
  const auto n = static_cast<std::size_t>(a.rows());
  if (k > n) throw BoundsError("requested " + std::to_string(k) + " eigenpairs of a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");

  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw NumericError("symmetric eigensolver did not converge within its QR iteration cap");
  }
  EigenPairs out;
  const auto kk = static_cast<Eigen::Index>(k);
  out.values = solver.eigenvalues().head(kk);
  out.vectors = solver.eigenvectors().leftCols(kk);
  for (Eigen::Index c = 0; c < kk; ++c) fix_sign(out.vectors, c);
  return out;
}

Svd truncated_svd(const DenseMatrix& a, std::size_t k) {
  const auto limit = static_cast<std::size_t>(std::min(a.rows(), a.cols()));
  if (k > limit) throw BoundsError("rank " + std::to_string(k) + " exceeds matrix size " + std::to_string(limit));
  const auto kk = static_cast<Eigen::Index>(k);
  Svd out;

  if (a.rows() == a.cols() && is_symmetric(a, 0.0)) {
    // For exactly symmetric A = Q diag(l) Q^T: sigma = |l|, U = Q, V = Q sign(l).
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(a);
    if (solver.info() != Eigen::Success) throw NumericError("SVD: eigensolver did not converge");
    const auto& l = solver.eigenvalues();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(l.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return std::abs(l(i)) > std::abs(l(j)); });
    out.u.resize(a.rows(), kk);
    out.v.resize(a.rows(), kk);
    out.singular_values.resize(kk);
    for (Eigen::Index c = 0; c < kk; ++c) {
      const auto src = order[static_cast<std::size_t>(c)];
      out.u.col(c) = solver.eigenvectors().col(src);
      out.singular_values(c) = std::abs(l(src));
      out.v.col(c) = l(src) < 0.0 ? Vector(-out.u.col(c)) : Vector(out.u.col(c));
    }
  } else {
    Eigen::BDCSVD<DenseMatrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (solver.info() != Eigen::Success) throw NumericError("SVD did not converge");
    out.u = solver.matrixU().leftCols(kk);
    out.v = solver.matrixV().leftCols(kk);
    out.singular_values = solver.singularValues().head(kk);
  }
  for (Eigen::Index c = 0; c < kk; ++c) fix_sign(out.u, c, &out.v);
  return out;
}

double spectral_radius(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("spectral radius needs a square matrix");
  if (a.size() == 0 || a.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  if ((a.array() < 0.0).any()) throw ValidationError("spectral radius expects a non-negative matrix");

  // Iterate on A + I: its Perron root rho + 1 strictly dominates, even for bipartite A whose
  // spectrum is symmetric about zero.
  constexpr int max_iterations = 200;
  constexpr double tolerance = 1e-8;
  Vector x = Vector::Ones(a.rows()).normalized();
  double estimate = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    Vector y = a * x + x;
    const double rayleigh = x.dot(y);
    const double norm = y.norm();
    if (norm == 0.0) return 0.0;
    x = y / norm;
    const double next = rayleigh - 1.0;
    const bool done = it > 0 && std::abs(next - estimate) <= tolerance * std::max(1.0, std::abs(next));
    estimate = next;
    if (done) break;
  }
  return estimate;
}

double finite_diff_grad_check(const LossWithGradient& loss, const Vector& params, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1e-2)) throw ValidationError("epsilon must lie in (0, 1e-2]");
  Vector grad(params.size());
  const double f0 = loss(params, &grad);
  if (!std::isfinite(f0)) throw NumericError("loss is not finite at the check point");
  double worst = 0.0;
  Vector x = params;
  for (Eigen::Index i = 0; i < params.size(); ++i) {
    x(i) = params(i) + epsilon;
    const double plus = loss(x, nullptr);
    x(i) = params(i) - epsilon;
    const double minus = loss(x, nullptr);
    x(i) = params(i);
    if (!std::isfinite(plus) || !std::isfinite(minus)) {
      throw NumericError("loss is not finite near coordinate " + std::to_string(i));
    }
    const double fd = (plus - minus) / (2.0 * epsilon);
    const double err = std::abs(grad(i) - fd) / std::max(1e-12, std::abs(grad(i)) + std::abs(fd));
    worst = std::max(worst, err);
  }
  return worst;
}

DenseMatrix normalized_laplacian(const Graph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.num_nodes());
  Vector inv_sqrt(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double d = 0.0;
    for (double w : graph.neighbor_weights(static_cast<NodeId>(i))) d += w;
    inv_sqrt(i) = d > 0.0 ? 1.0 / std::sqrt(d) : 0.0;
  }
  DenseMatrix l = DenseMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (inv_sqrt(i) > 0.0) l(i, i) = 1.0;
  }
  for (const auto& e : graph.edges()) {
    const double v = -e.weight * inv_sqrt(e.u) * inv_sqrt(e.v);
    l(e.u, e.v) = v;
    l(e.v, e.u) = v;
  }
  return l;
}

}  // namespace gembench::num
