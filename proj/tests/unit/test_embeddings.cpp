#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "gembench/embeddings.hpp"
#include "gembench/error.hpp"
#include "gembench/generators.hpp"
#include "gembench/split.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"

using namespace gembench;
using namespace gembench::embed;

namespace {

void expect_eigenpairs(const Graph& g, const EmbeddingResult& r, double tol) {
  const auto l = num::normalized_laplacian(g);
  const double fro = l.norm();
  ASSERT_EQ(r.eigenvalues.size(), static_cast<std::size_t>(r.y.cols()));
  for (Eigen::Index i = 0; i < r.y.cols(); ++i) {
    const auto v = r.y.col(i);
    EXPECT_LE((l * v - r.eigenvalues[static_cast<std::size_t>(i)] * v).norm(), tol * fro);
    EXPECT_GE(r.eigenvalues[static_cast<std::size_t>(i)], -1e-12);
    EXPECT_LE(r.eigenvalues[static_cast<std::size_t>(i)], 2.0 + 1e-12);
  }
  const auto k = r.y.cols();
  EXPECT_LE((r.y.transpose() * r.y - DenseMatrix::Identity(k, k)).cwiseAbs().maxCoeff(), tol);
}

double hope_relative_error(const HopeFactorization& f, std::size_t d) {
  const auto r = hope_from_factorization(f, d);
  return (f.katz - r.y * r.y_target->transpose()).norm() / f.katz.norm();
}

SdneParams small_sdne(std::vector<std::size_t> hidden, double alpha, double nu) {
  SdneParams p;
  p.hidden_layers = std::move(hidden);
  p.alpha = alpha;
  p.reg_nu = nu;
  return p;
}

double sdne_grad_error(const Graph& g, const std::vector<std::size_t>& hidden, std::size_t d, std::uint64_t seed) {
  const SdneNetwork net(g.num_nodes(), hidden, d, seed);
  const auto x = adjacency_sparse(g);
  const auto lap = laplacian_sparse(g);
  const auto params = small_sdne(hidden, 0.2, 0.05);
  const num::LossWithGradient loss = [&](const num::Vector& theta, num::Vector* grad) {
    SdneNetwork copy = net;
    copy.set_parameters(theta);
    return copy.loss_and_gradient(x, lap, params, 1.0, grad);
  };
  return num::finite_diff_grad_check(loss, net.parameters(), 1e-5);
}

/// Scores 1 on the hidden pairs of a split, 0 elsewhere.
class PerfectScorer final : public PairScorer {
 public:
  explicit PerfectScorer(const EdgeSplit& s) : split_(&s) {}
  std::size_t num_nodes() const override { return split_->num_nodes(); }
  double score(NodeId u, NodeId v) const override { return split_->is_hidden(NodePair::of(u, v)) ? 1.0 : 0.0; }

 private:
  const EdgeSplit* split_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Laplacian Eigenmaps

TEST(LaplacianEigenmaps, CompleteGraph) {
  const auto r = embed_laplacian_eigenmaps(oracle::complete_graph(4), 2);
  ASSERT_EQ(r.eigenvalues.size(), 2u);
  EXPECT_NEAR(r.eigenvalues[0], 4.0 / 3.0, 1e-10);
  EXPECT_NEAR(r.eigenvalues[1], 4.0 / 3.0, 1e-10);
  EXPECT_EQ(r.decoder, Decoder::neg_sq_distance);
  EXPECT_FALSE(r.y_target.has_value());
}

TEST(LaplacianEigenmaps, RingOfEight) {
  const auto r = embed_laplacian_eigenmaps(oracle::ring_graph(8), 2);
  const double expected = 1.0 - std::cos(2.0 * std::numbers::pi / 8.0);
  EXPECT_NEAR(r.eigenvalues[0], expected, 1e-10);
  EXPECT_NEAR(r.eigenvalues[1], expected, 1e-10);
}

TEST(LaplacianEigenmaps, EigenpairsOnRandomConnectedGraphs) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const std::size_t n = 8 + (s * 7) % 57;
    const auto g = oracle::random_connected_graph(n, 0.1, s);
    expect_eigenpairs(g, embed_laplacian_eigenmaps(g, std::min<std::size_t>(n - 1, 16)), 1e-8);
  }
}

TEST(LaplacianEigenmaps, WeightedGraph) {
  const auto g = Graph::from_edges(4, {{0, 1, 2.0}, {1, 2, 0.5}, {2, 3, 3.0}, {0, 3, 1.0}, {0, 2, 1.5}});
  expect_eigenpairs(g, embed_laplacian_eigenmaps(g, 3), 1e-8);
}

TEST(LaplacianEigenmaps, Preconditions) {
  EXPECT_THROW(embed_laplacian_eigenmaps(Graph::from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}}), 1), ValidationError);
  EXPECT_THROW(embed_laplacian_eigenmaps(oracle::complete_graph(4), 4), BoundsError);
}

TEST(LaplacianEigenmaps, SpectrumSlicesMatchDirect) {
  const auto g = oracle::random_connected_graph(30, 0.2, 5);
  const auto spectrum = laplacian_spectrum(g, 16);
  for (std::size_t d : {2u, 4u, 16u}) {
    EXPECT_EQ(laplacian_eigenmaps_from_spectrum(spectrum, d).y, embed_laplacian_eigenmaps(g, d).y.leftCols(d));
  }
}

TEST(LaplacianEigenmaps, ComponentEmbeddingZeroRowsOutside) {
  // Triangle plus a separate edge; the edge nodes get zero rows, extra columns are zero.
  const auto g = Graph::from_edges(5, {{0, 3, 1.0}, {1, 2, 1.0}, {1, 4, 1.0}, {2, 4, 1.0}});
  const ComponentEigenmaps ce(g, 4);
  const auto r = ce.embed(4);
  EXPECT_EQ(r.y.rows(), 5);
  EXPECT_EQ(r.y.cols(), 4);
  EXPECT_EQ(r.y.row(0).norm(), 0.0);
  EXPECT_EQ(r.y.row(3).norm(), 0.0);
  EXPECT_GT(r.y.row(1).norm(), 0.0);
  EXPECT_EQ(r.y.rightCols(2).norm(), 0.0);
  EXPECT_NEAR(r.eigenvalues[0], 1.5, 1e-12);
}

TEST(LaplacianEigenmaps, ComponentEmbeddingConnectedMatchesDirect) {
  const auto g = oracle::random_connected_graph(20, 0.2, 8);
  EXPECT_EQ(ComponentEigenmaps(g, 8).embed(8).y, embed_laplacian_eigenmaps(g, 8).y);
}

// ---------------------------------------------------------------------------
// Graph Factorization

TEST(GraphFactorization, SingleEdgeOptimum) {
  const auto g = oracle::path_graph(2);
  GfParams p;
  p.reg_lambda = 0.0;
  p.learning_rate = 0.05;
  p.epochs = 2000;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = embed_graph_factorization(g, 1, p, seed);
    const double dot = r.y(0, 0) * r.y(1, 0);
    EXPECT_GE(dot, 0.99) << seed;
    EXPECT_LE(dot, 1.01) << seed;
  }
}

TEST(GraphFactorization, EdgelessStaysAtInit) {
  GfParams p;
  p.reg_lambda = 0.0;
  p.epochs = 20;
  const auto r = embed_graph_factorization(Graph(5), 4, p, 3);
  ASSERT_EQ(r.training_log.size(), 20u);
  for (double v : r.training_log) EXPECT_EQ(v, 0.0);
  GfParams one = p;
  one.epochs = 1;
  EXPECT_EQ(r.y, embed_graph_factorization(Graph(5), 4, one, 3).y);
  const double bound = p.init_scale / 2.0;
  EXPECT_LE(r.y.cwiseAbs().maxCoeff(), bound);
  EXPECT_GT(r.y.cwiseAbs().maxCoeff(), 0.0);
}

TEST(GraphFactorization, CompleteGraphFits) {
  // Initial entries are below 0.1/sqrt(6), so every initial inner product is at most 0.01
  // and the initial objective is at least 0.5 * 15 * 0.99^2.
  const double initial_lower = 0.5 * 15 * 0.99 * 0.99;
  GfParams p;
  p.reg_lambda = 1e-4;
  const auto r = embed_graph_factorization(oracle::complete_graph(6), 6, p, 1);
  EXPECT_LT(r.training_log.back(), 0.05 * initial_lower);
  EXPECT_NEAR(r.training_log.back(), gf_objective(oracle::complete_graph(6), r.y, 1e-4), 1e-12);
}

TEST(GraphFactorization, ObjectiveNonIncreasingAfterWarmup) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto g = oracle::random_connected_graph(20 + 4 * s, 0.12, 300 + s);
    const auto r = embed_graph_factorization(g, 8, GfParams{}, s);
    for (std::size_t e = 11; e < r.training_log.size(); ++e) {
      ASSERT_LE(r.training_log[e], r.training_log[e - 1] + 1e-9) << "graph " << s << " epoch " << e;
    }
  }
}

TEST(GraphFactorization, DivergenceIsNumericError) {
  GfParams p;
  p.learning_rate = 5.0;
  p.init_scale = 5.0;
  EXPECT_THROW(embed_graph_factorization(oracle::complete_graph(8), 4, p, 1), NumericError);
}

TEST(GraphFactorization, Deterministic) {
  const auto g = oracle::random_connected_graph(25, 0.2, 1);
  const auto a = embed_graph_factorization(g, 8, GfParams{}, 9);
  const auto b = embed_graph_factorization(g, 8, GfParams{}, 9);
  EXPECT_EQ(a.y, b.y);
  EXPECT_EQ(a.training_log, b.training_log);
  EXPECT_NE(a.y, embed_graph_factorization(g, 8, GfParams{}, 10).y);
}

TEST(GraphFactorization, ParamsValidated) {
  GfParams p;
  p.learning_rate = 0.0;
  EXPECT_THROW(embed_graph_factorization(oracle::path_graph(3), 2, p, 1), ValidationError);
}

// ---------------------------------------------------------------------------
// HOPE

TEST(Hope, TwoNodeKatzClosedForm) {
  const auto s = katz_matrix(oracle::path_graph(2), 0.1);
  EXPECT_NEAR(s(0, 1), 0.1 / 0.99, 1e-12);
  EXPECT_NEAR(s(1, 0), 0.1 / 0.99, 1e-12);
  EXPECT_NEAR(s(0, 0), 0.01 / 0.99, 1e-12);
  EXPECT_NEAR(s(1, 1), 0.01 / 0.99, 1e-12);
}

TEST(Hope, TwoNodeLinkScore) {
  HopeParams p;
  p.beta_factor = 0.1;  // spectral radius of K2 is 1
  const auto r = embed_hope(oracle::path_graph(2), 4, p);
  ASSERT_TRUE(r.y_target.has_value());
  EXPECT_NEAR(link_score(r, 0, 1), 0.1 / 0.99, 1e-12);
  EXPECT_NEAR(link_score(r, 1, 0), 0.1 / 0.99, 1e-12);
}

TEST(Hope, EdgelessIsZero) {
  const auto r = embed_hope(Graph(4), 4, HopeParams{});
  EXPECT_EQ(r.y.norm(), 0.0);
  EXPECT_EQ(r.y_target->norm(), 0.0);
  EXPECT_EQ(link_score(r, 0, 3), 0.0);
  EXPECT_EQ(hope_factorize(Graph(4), HopeParams{}, 4).katz.norm(), 0.0);
}

TEST(Hope, FullRankReconstruction) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const std::size_t n = 6 + s;
    const auto g = oracle::random_graph(n, 0.3, 70 + s);
    if (g.num_edges() == 0) continue;
    const auto f = hope_factorize(g, HopeParams{}, 2 * n);
    EXPECT_LT(hope_relative_error(f, 2 * n), 1e-6) << s;
  }
}

TEST(Hope, ReconstructionErrorNonIncreasingInDimension) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto g = oracle::random_connected_graph(24, 0.15, 90 + s);
    const auto f = hope_factorize(g, HopeParams{}, 48);
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t d = 2; d <= 48; d += 2) {
      const double err = hope_relative_error(f, d);
      EXPECT_LE(err, previous + 1e-12) << "graph " << s << " d " << d;
      previous = err;
    }
  }
}

TEST(Hope, KatzNonNegativeAndMatchesSeries) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto g = oracle::random_connected_graph(15, 0.2, s);
    const double beta = 0.5 / num::spectral_radius(g.adjacency_matrix());
    const auto katz = katz_matrix(g, beta);
    EXPECT_GE(katz.minCoeff(), -1e-15);
    // Truncated power series sum_{l>=1} (beta W)^l.
    const DenseMatrix bw = beta * g.adjacency_matrix();
    DenseMatrix term = bw;
    DenseMatrix series = bw;
    for (int l = 2; l < 200; ++l) {
      term = term * bw;
      series += term;
    }
    EXPECT_LE((katz - series).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Hope, SingularSystemIsNumericError) {
  // beta = 1/rho makes I - beta W singular.
  EXPECT_THROW(katz_matrix(oracle::complete_graph(4), 1.0 / 3.0), NumericError);
}

TEST(Hope, DimensionSlicesAgree) {
  const auto g = oracle::random_connected_graph(30, 0.15, 4);
  const auto f = hope_factorize(g, HopeParams{}, 32);
  for (std::size_t d : {4u, 16u, 32u}) {
    const auto a = hope_from_factorization(f, d);
    const auto b = embed_hope(g, d, HopeParams{});
    EXPECT_LE((a.y * a.y_target->transpose() - b.y * b.y_target->transpose()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Hope, IntraBlockHiddenPairsOutrankInterBlock) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = gen::generate({gen::StochasticBlockModel{{64, 64}, 0.5, 0.01}, seed});
    const auto split = split_edges(g, 0.2, seed);
    const auto ranking = rank_candidates_embedding(embed_hope(split.train, 16, HopeParams{}), split);
    double intra_sum = 0, inter_sum = 0;
    std::size_t intra = 0, inter = 0;
    for (std::size_t r = 0; r < ranking.size(); ++r) {
      const auto p = ranking[r].pair;
      const bool same = (p.first < 64) == (p.second < 64);
      if (same && split.is_hidden(p)) {
        intra_sum += static_cast<double>(r);
        ++intra;
      } else if (!same && !split.is_hidden(p)) {
        inter_sum += static_cast<double>(r);
        ++inter;
      }
    }
    ASSERT_GT(intra, 0u);
    EXPECT_LT(intra_sum / static_cast<double>(intra), inter_sum / static_cast<double>(inter)) << seed;
  }
}

// ---------------------------------------------------------------------------
// SDNE

TEST(Sdne, GradientCheckSixNodes) {
  const auto g = Graph::from_edges(6, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}, {4, 5, 1.0}});
  EXPECT_LT(sdne_grad_error(g, {8}, 2, 1), 1e-4);
}

TEST(Sdne, GradientCheckRandomGraphs) {
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto g = oracle::random_connected_graph(6 + 2 * s, 0.3, 500 + s);
    EXPECT_LT(sdne_grad_error(g, {8}, 2, s), 1e-4) << s;
    EXPECT_LT(sdne_grad_error(g, {7, 5}, 3, s), 1e-4) << s;
  }
}

TEST(Sdne, WeightedGradientCheck) {
  const auto g = Graph::from_edges(5, {{0, 1, 2.0}, {1, 2, 0.5}, {2, 3, 1.5}, {3, 4, 1.0}});
  EXPECT_LT(sdne_grad_error(g, {6}, 2, 4), 1e-4);
}

TEST(Sdne, CompleteGraphReconstructionConverges) {
  auto p = small_sdne({4}, 0.0, 0.0);
  p.epochs = 2000;
  const auto r = embed_sdne(oracle::complete_graph(4), 2, p, 1);
  ASSERT_EQ(r.training_log.size(), 2000u);
  EXPECT_LT(r.training_log.back(), 0.1 * r.training_log.front());
  ASSERT_TRUE(r.reconstruction.has_value());
  EXPECT_EQ(r.reconstruction->rows(), 4);
}

TEST(Sdne, Deterministic) {
  const auto g = oracle::random_connected_graph(20, 0.2, 3);
  auto p = small_sdne({16}, 1e-3, 1e-4);
  p.epochs = 20;
  const auto a = embed_sdne(g, 4, p, 7);
  const auto b = embed_sdne(g, 4, p, 7);
  EXPECT_EQ(a.y, b.y);
  EXPECT_EQ(a.training_log, b.training_log);
}

TEST(Sdne, MiniBatchPath) {
  const auto g = oracle::random_connected_graph(40, 0.1, 6);
  auto p = small_sdne({16}, 1e-3, 1e-4);
  p.epochs = 30;
  p.batch_size = 8;
  p.full_batch_max_nodes = 10;
  const auto a = embed_sdne(g, 4, p, 2);
  EXPECT_EQ(a.y.rows(), 40);
  EXPECT_TRUE(a.y.allFinite());
  EXPECT_LT(a.training_log.back(), a.training_log.front());
  EXPECT_EQ(a.y, embed_sdne(g, 4, p, 2).y);
}

TEST(Sdne, DimensionAboveHiddenRejected) {
  EXPECT_THROW(embed_sdne(oracle::complete_graph(6), 8, small_sdne({4}, 0.0, 0.0), 1), ValidationError);
}

TEST(Sdne, ParameterRoundTrip) {
  SdneNetwork net(7, {5, 4}, 3, 2);
  const auto theta = net.parameters();
  EXPECT_EQ(static_cast<std::size_t>(theta.size()), net.num_parameters());
  SdneNetwork other(7, {5, 4}, 3, 99);
  other.set_parameters(theta);
  EXPECT_EQ(other.parameters(), theta);
}

// ---------------------------------------------------------------------------
// Decoders and ranking

TEST(Decoders, CoincidentPointsScoreZero) {
  EmbeddingResult r;
  r.decoder = Decoder::neg_sq_distance;
  r.y = DenseMatrix::Ones(3, 2);
  r.y(2, 0) = 4.0;
  EXPECT_EQ(link_score(r, 0, 1), 0.0);
  EXPECT_LT(link_score(r, 0, 2), 0.0);
  EXPECT_EQ(link_score(r, 0, 2), -9.0);
}

TEST(Decoders, OrthogonalInnerProductIsZero) {
  EmbeddingResult r;
  r.decoder = Decoder::inner_product;
  r.y = DenseMatrix::Identity(2, 2);
  EXPECT_EQ(link_score(r, 0, 1), 0.0);
}

TEST(Decoders, ReconstructionIsSymmetrized) {
  EmbeddingResult r;
  r.method = Method::sdne;
  r.decoder = Decoder::reconstruction;
  r.y = DenseMatrix::Zero(3, 1);
  r.reconstruction = DenseMatrix::Zero(3, 3);
  (*r.reconstruction)(0, 2) = 0.8;
  (*r.reconstruction)(2, 0) = 0.2;
  EXPECT_DOUBLE_EQ(link_score(r, 0, 2), 0.5);
  EXPECT_DOUBLE_EQ(link_score(r, 2, 0), 0.5);
  EXPECT_THROW(EmbeddingScorer(EmbeddingResult{}, Decoder::reconstruction), ValidationError);
}

TEST(Decoders, ScoreRowMatchesScore) {
  const auto g = oracle::random_connected_graph(15, 0.2, 2);
  const std::vector<EmbeddingResult> results{embed_laplacian_eigenmaps(g, 4), embed_hope(g, 6, HopeParams{}),
                                             embed_graph_factorization(g, 4, GfParams{}, 1)};
  for (const auto& r : results) {
    const EmbeddingScorer scorer(r);
    std::vector<double> row(15);
    for (NodeId u = 0; u < 15; ++u) {
      scorer.score_row(u, row);
      for (NodeId v = 0; v < 15; ++v) {
        if (u == v) continue;
        EXPECT_NEAR(row[v], scorer.score(u, v), 1e-12);
        EXPECT_NEAR(scorer.score(u, v), scorer.score(v, u), 1e-12);
      }
    }
  }
}

TEST(Ranking, PerfectScorerPutsHiddenFirst) {
  const auto g = oracle::random_connected_graph(30, 0.15, 12);
  const auto split = split_edges(g, 0.2, 3);
  const auto ranking = rank_candidates(PerfectScorer(split), split);
  for (std::size_t i = 0; i < ranking.size(); ++i) EXPECT_EQ(split.is_hidden(ranking[i].pair), i < split.hidden.size());
}

TEST(Ranking, PerfectReconstructionPutsHiddenFirst) {
  const auto g = oracle::random_connected_graph(20, 0.2, 13);
  const auto split = split_edges(g, 0.2, 4);
  EmbeddingResult r;
  r.method = Method::sdne;
  r.decoder = Decoder::reconstruction;
  r.y = DenseMatrix::Zero(20, 2);
  r.reconstruction = DenseMatrix::Zero(20, 20);
  for (const auto& h : split.hidden) (*r.reconstruction)(h.first, h.second) = (*r.reconstruction)(h.second, h.first) = 1.0;
  const auto ranking = rank_candidates_embedding(r, split);
  for (std::size_t i = 0; i < ranking.size(); ++i) EXPECT_EQ(split.is_hidden(ranking[i].pair), i < split.hidden.size());
}

TEST(Ranking, ConstantEmbeddingIsLexicographic) {
  const auto g = oracle::random_connected_graph(12, 0.2, 14);
  const auto split = split_edges(g, 0.2, 5);
  EmbeddingResult r;
  r.decoder = Decoder::neg_sq_distance;
  r.y = DenseMatrix::Constant(12, 3, 0.7);
  const auto ranking = rank_candidates_embedding(r, split);
  EXPECT_EQ(ranking.size(), split.num_candidates());
  for (std::size_t i = 1; i < ranking.size(); ++i) EXPECT_LT(ranking[i - 1].pair, ranking[i].pair);
}

TEST(Ranking, NonFiniteScoreRejected) {
  const auto split = split_edges(oracle::path_graph(4), 0.0, 1);
  EmbeddingResult r;
  r.decoder = Decoder::inner_product;
  r.y = DenseMatrix::Ones(4, 1);
  r.y(2, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(rank_candidates_embedding(r, split), NumericError);
}

TEST(Embedding, SavedMatrixHeader) {
  testing_support::TempDir dir;
  const auto r = embed_hope(oracle::complete_graph(4), 2, HopeParams{});
  save_embedding(r, dir / "e.txt");
  std::istringstream in(testing_support::read_file(dir / "e.txt"));
  std::string n, d, method;
  in >> n >> d >> method;
  EXPECT_EQ(n, "4");
  EXPECT_EQ(d, "1");
  EXPECT_EQ(method, "hope");
  EXPECT_NE(testing_support::read_file(dir / "e.txt").find("# target"), std::string::npos);
}

TEST(Embedding, MethodIds) {
  for (auto m : {Method::laplacian_eigenmaps, Method::graph_factorization, Method::hope, Method::sdne}) {
    EXPECT_EQ(parse_method(method_id(m)), m);
  }
  EXPECT_EQ(default_decoder(Method::laplacian_eigenmaps), Decoder::neg_sq_distance);
  EXPECT_EQ(default_decoder(Method::hope), Decoder::inner_product);
  EXPECT_EQ(default_decoder(Method::sdne), Decoder::reconstruction);
}
