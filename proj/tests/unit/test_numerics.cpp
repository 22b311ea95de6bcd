#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "gembench/error.hpp"
#include "gembench/numerics.hpp"
#include "oracles.hpp"

using namespace gembench;
using namespace gembench::num;

namespace {

DenseMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = u(rng);
  }
  return m;
}

DenseMatrix random_symmetric(Eigen::Index n, std::uint64_t seed) {
  const DenseMatrix m = random_matrix(n, n, seed);
  return (m + m.transpose()) / 2;
}

}  // namespace

TEST(SymEig, IdentitySpectrum) {
  const auto e = sym_eig_smallest(DenseMatrix::Identity(3, 3), 2);
  ASSERT_EQ(e.values.size(), 2);
  EXPECT_NEAR(e.values(0), 1.0, 1e-15);
  EXPECT_NEAR(e.values(1), 1.0, 1e-15);
}

TEST(SymEig, CompleteGraphLaplacian) {
  const auto e = sym_eig_smallest(normalized_laplacian(oracle::complete_graph(4)), 4);
  EXPECT_NEAR(e.values(0), 0.0, 1e-12);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(e.values(i), 4.0 / 3.0, 1e-12);
}

TEST(SymEig, MatchesJacobiOracle) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto a = random_symmetric(8, s);
    const auto [values, vectors] = oracle::jacobi_eigen(a);
    const auto e = sym_eig_smallest(a, 8);
    for (int i = 0; i < 8; ++i) {
      EXPECT_NEAR(e.values(i), values(i), 1e-8);
      // Random spectra are simple, so vectors agree up to sign.
      EXPECT_NEAR(std::abs(e.vectors.col(i).dot(vectors.col(i))), 1.0, 1e-8);
    }
  }
}

TEST(SymEig, ResidualOrthonormalityAndSign) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto a = random_symmetric(12, 100 + s);
    const auto e = sym_eig_smallest(a, 5);
    const double fro = a.norm();
    for (int i = 0; i < 5; ++i) {
      const auto v = e.vectors.col(i);
      EXPECT_LE((a * v - e.values(i) * v).norm(), 1e-8 * fro);
      Eigen::Index arg = 0;
      v.cwiseAbs().maxCoeff(&arg);
      EXPECT_GT(v(arg), 0.0);
    }
    EXPECT_LE((e.vectors.transpose() * e.vectors - DenseMatrix::Identity(5, 5)).cwiseAbs().maxCoeff(), 1e-8);
    for (int i = 1; i < 5; ++i) EXPECT_LE(e.values(i - 1), e.values(i));
  }
}

TEST(SymEig, RejectsNonSymmetric) {
  DenseMatrix a = DenseMatrix::Identity(3, 3);
  a(0, 1) = 1e-6;
  EXPECT_THROW(sym_eig_smallest(a, 1), ValidationError);
  EXPECT_THROW(sym_eig_smallest(DenseMatrix::Identity(3, 3), 4), BoundsError);
}

TEST(Svd, ZeroMatrix) {
  const auto s = truncated_svd(DenseMatrix::Zero(4, 3), 3);
  EXPECT_EQ(s.singular_values.size(), 3);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(s.singular_values(i), 0.0);
}

TEST(Svd, RankOneOuterProduct) {
  Eigen::VectorXd x(4), y(3);
  x << 1, -2, 3, 0.5;
  y << 2, 0, -1;
  const DenseMatrix a = x * y.transpose();
  const auto s = truncated_svd(a, 1);
  EXPECT_NEAR(s.singular_values(0), x.norm() * y.norm(), 1e-12);
  EXPECT_LE((a - s.u * s.singular_values.asDiagonal() * s.v.transpose()).norm(), 1e-12);
}

TEST(Svd, FullRankReconstruction) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto a = random_matrix(10, 10, s);
    const auto svd = truncated_svd(a, 10);
    EXPECT_LE((a - svd.u * svd.singular_values.asDiagonal() * svd.v.transpose()).norm(), 1e-8);
  }
}

TEST(Svd, EckartYoungAgainstJacobiOracle) {
  const std::vector<DenseMatrix> inputs{random_matrix(10, 10, 1), random_matrix(12, 7, 2), random_matrix(6, 9, 3),
                                        random_symmetric(10, 4), oracle::complete_graph(6).adjacency_matrix()};
  for (const auto& a : inputs) {
    const Eigen::VectorXd sigma = oracle::jacobi_singular_values(a);
    const auto limit = static_cast<std::size_t>(std::min(a.rows(), a.cols()));
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= limit; ++k) {
      const auto svd = truncated_svd(a, k);
      for (std::size_t i = 0; i < k; ++i) EXPECT_NEAR(svd.singular_values(i), sigma(i), 1e-10 * (1 + sigma(0)));
      const double err = (a - svd.u * svd.singular_values.asDiagonal() * svd.v.transpose()).norm();
      EXPECT_NEAR(err, oracle::eckart_young_error(sigma, k), 1e-6 * a.norm());
      EXPECT_LE(err, previous + 1e-12);
      previous = err;
      EXPECT_LE((svd.u.transpose() * svd.u - DenseMatrix::Identity(k, k)).cwiseAbs().maxCoeff(), 1e-8);
      EXPECT_LE((svd.v.transpose() * svd.v - DenseMatrix::Identity(k, k)).cwiseAbs().maxCoeff(), 1e-8);
      for (std::size_t i = 0; i < k; ++i) EXPECT_GE(svd.singular_values(i), 0.0);
    }
  }
}

TEST(Svd, RankTooLarge) { EXPECT_THROW(truncated_svd(DenseMatrix::Zero(3, 2), 3), BoundsError); }

TEST(SpectralRadius, SmallCompleteGraphs) {
  EXPECT_NEAR(spectral_radius(oracle::complete_graph(2).adjacency_matrix()), 1.0, 1e-8);
  EXPECT_NEAR(spectral_radius(oracle::complete_graph(4).adjacency_matrix()), 3.0, 1e-8);
}

TEST(SpectralRadius, MatchesEigenOracle) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DenseMatrix a = random_symmetric(6, 40 + s).cwiseAbs();
    const auto [values, vectors] = oracle::jacobi_eigen(a);
    const double expected = std::max(std::abs(values(0)), std::abs(values(5)));
    EXPECT_NEAR(spectral_radius(a), expected, 1e-6);
  }
}

TEST(SpectralRadius, ScalesLinearly) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const DenseMatrix a = random_symmetric(7, 70 + s).cwiseAbs();
    for (double c : {0.1, 2.5, 10.0}) EXPECT_NEAR(spectral_radius(c * a), c * spectral_radius(a), 1e-6 * c);
  }
}

TEST(SpectralRadius, BipartiteGraphs) {
  // Spectrum symmetric about 0; the ring of 8 has radius 2.
  EXPECT_NEAR(spectral_radius(oracle::ring_graph(8).adjacency_matrix()), 2.0, 1e-6);
  EXPECT_NEAR(spectral_radius(oracle::path_graph(2).adjacency_matrix()), 1.0, 1e-8);
}

TEST(SpectralRadius, ZeroAndNegative) {
  EXPECT_EQ(spectral_radius(DenseMatrix::Zero(4, 4)), 0.0);
  DenseMatrix a = DenseMatrix::Identity(2, 2);
  a(0, 1) = -1;
  EXPECT_THROW(spectral_radius(a), ValidationError);
}

TEST(GradCheck, Quadratic) {
  const LossWithGradient loss = [](const Vector& x, Vector* g) {
    if (g) *g = 2 * x;
    return x.squaredNorm();
  };
  Vector x(2);
  x << 1, 2;
  EXPECT_LT(finite_diff_grad_check(loss, x, 1e-5), 1e-8);
}

TEST(GradCheck, ConstantLoss) {
  const LossWithGradient loss = [](const Vector& x, Vector* g) {
    if (g) *g = Vector::Zero(x.size());
    return 3.0;
  };
  EXPECT_EQ(finite_diff_grad_check(loss, Vector::Ones(3), 1e-4), 0.0);
}

TEST(GradCheck, DetectsWrongGradient) {
  const LossWithGradient loss = [](const Vector& x, Vector* g) {
    if (g) *g = x;
    return x.squaredNorm();
  };
  EXPECT_GT(finite_diff_grad_check(loss, Vector::Ones(2), 1e-5), 0.3);
}

TEST(GradCheck, NonFiniteAndBadEpsilon) {
  const LossWithGradient bad = [](const Vector& x, Vector* g) {
    if (g) *g = Vector::Zero(x.size());
    return std::numeric_limits<double>::quiet_NaN();
  };
  EXPECT_THROW(finite_diff_grad_check(bad, Vector::Ones(2), 1e-5), NumericError);
  const LossWithGradient ok = [](const Vector& x, Vector* g) {
    if (g) *g = Vector::Zero(x.size());
    return 0.0;
  };
  EXPECT_THROW(finite_diff_grad_check(ok, Vector::Ones(2), 0.0), ValidationError);
  EXPECT_THROW(finite_diff_grad_check(ok, Vector::Ones(2), 0.1), ValidationError);
}

TEST(NormalizedLaplacian, IsolatedNodeIsZero) {
  const auto l = normalized_laplacian(Graph::from_edges(3, {{0, 1, 1.0}}));
  EXPECT_EQ(l.row(2).cwiseAbs().sum(), 0.0);
  EXPECT_EQ(l.col(2).cwiseAbs().sum(), 0.0);
  EXPECT_DOUBLE_EQ(l(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(l(0, 1), -1.0);
}

TEST(NormalizedLaplacian, WeightedEntries) {
  const auto g = Graph::from_edges(3, {{0, 1, 2.0}, {1, 2, 1.0}});
  const auto l = normalized_laplacian(g);
  EXPECT_NEAR(l(0, 1), -2.0 / std::sqrt(2.0 * 3.0), 1e-15);
  EXPECT_NEAR(l(1, 2), -1.0 / std::sqrt(3.0 * 1.0), 1e-15);
  EXPECT_EQ(l(0, 2), 0.0);
}
