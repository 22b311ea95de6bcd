#pragma once

#include <functional>

#include <Eigen/Core>

#include "gembench/graph.hpp"

namespace gembench::num {

using Vector = Eigen::VectorXd;

struct EigenPairs {
  Vector values;       ///< ascending
  DenseMatrix vectors;  ///< one eigenvector per column, unit norm
};

/// The k smallest eigenpairs of a symmetric matrix. Each eigenvector is signed so its
/// largest-magnitude component is positive.
/// Throws ValidationError if |A - A^T| exceeds 1e-10 anywhere, BoundsError if k > n.
EigenPairs sym_eig_smallest(const DenseMatrix& a, std::size_t k);

struct Svd {
  DenseMatrix u;
  Vector singular_values;  ///< descending, non-negative
  DenseMatrix v;
};

/// Best rank-k approximation U diag(s) V^T. Throws BoundsError when k > min(rows, cols).
Svd truncated_svd(const DenseMatrix& a, std::size_t k);

/// Largest-magnitude eigenvalue of a square non-negative matrix by power iteration
/// (200 iterations, tolerance 1e-8). Returns 0 for the zero matrix.
double spectral_radius(const DenseMatrix& a);

/// Value and gradient of a loss at a parameter vector.
using LossWithGradient = std::function<double(const Vector& x, Vector* grad)>;

/// Max over coordinates of |g - g_fd| / max(1e-12, |g| + |g_fd|) with central differences
/// of step epsilon. Throws NumericError when the loss is not finite.
double finite_diff_grad_check(const LossWithGradient& loss, const Vector& params, double epsilon);

/// Normalized Laplacian I - D^{-1/2} W D^{-1/2}; isolated nodes get a zero row and column.
DenseMatrix normalized_laplacian(const Graph& graph);

}  // namespace gembench::num
