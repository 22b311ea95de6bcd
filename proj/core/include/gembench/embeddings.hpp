#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "gembench/graph.hpp"
#include "gembench/numerics.hpp"
#include "gembench/ranking.hpp"
#include "gembench/split.hpp"

namespace gembench::embed {

enum class Method { laplacian_eigenmaps, graph_factorization, hope, sdne };
enum class Decoder { inner_product, neg_sq_distance, reconstruction };

/// "lap_eigen", "gf", "hope", "sdne".
std::string method_id(Method method);
std::optional<Method> parse_method(const std::string& id);
std::string decoder_name(Decoder decoder);
std::optional<Decoder> parse_decoder(const std::string& name);
Decoder default_decoder(Method method);

struct GfParams {
  double learning_rate = 0.01;
  std::size_t epochs = 500;
  double reg_lambda = 1e-4;
  /// Initial entries are uniform in +-init_scale / sqrt(d).
  double init_scale = 0.1;
  /// The learning rate halves every this many epochs; 0 keeps it constant.
  std::size_t lr_halving_period = 100;
};

struct HopeParams {
  /// beta = beta_factor / spectral_radius(W).
  double beta_factor = 0.5;
};

struct SdneParams {
  std::vector<std::size_t> hidden_layers{128};
  double alpha = 1e-5;         ///< first-order (neighbor distance) weight
  double beta_penalty = 5.0;   ///< reconstruction weight on observed entries
  double reg_nu = 1e-4;        ///< L2 weight on connection matrices
  double learning_rate = 0.01;  ///< Adam step size
  std::size_t epochs = 200;
  std::size_t batch_size = 64;
  /// Graphs up to this many nodes train on the full batch every step.
  std::size_t full_batch_max_nodes = 1024;
};

void validate(const GfParams& p);
void validate(const HopeParams& p);
void validate(const SdneParams& p);

struct EmbeddingResult {
  DenseMatrix y;                        ///< |V| x d (HOPE: |V| x d/2 source side)
  std::optional<DenseMatrix> y_target;  ///< HOPE only
  /// SDNE decoder output, |V| x |V|.
  std::optional<DenseMatrix> reconstruction;
  Method method = Method::laplacian_eigenmaps;
  Decoder decoder = Decoder::neg_sq_distance;
  std::size_t dimension = 0;
  std::vector<double> training_log;
  /// LE: eigenvalues of the columns of y.
  std::vector<double> eigenvalues;
};

// ---------------------------------------------------------------------------
// Laplacian Eigenmaps

/// Columns are the eigenvectors of lambda_2..lambda_{d+1} of the normalized Laplacian.
/// Throws ValidationError on a disconnected graph, BoundsError when d >= n.
EmbeddingResult embed_laplacian_eigenmaps(const Graph& train, std::size_t d);

/// Eigenpairs 1..max_d+1 of the normalized Laplacian of a connected graph, shared across
/// dimensions.
struct LaplacianSpectrum {
  num::EigenPairs pairs;
};
LaplacianSpectrum laplacian_spectrum(const Graph& train, std::size_t max_d);
EmbeddingResult laplacian_eigenmaps_from_spectrum(const LaplacianSpectrum& spectrum, std::size_t d);

/// Embeds the largest component of a possibly disconnected graph. Nodes outside it get zero
/// rows; when d exceeds the component size - 1 the extra columns are zero.
class ComponentEigenmaps {
 public:
  ComponentEigenmaps(const Graph& train, std::size_t max_d);
  EmbeddingResult embed(std::size_t d) const;

 private:
  std::size_t n_ = 0;
  std::vector<NodeId> original_ids_;
  std::optional<LaplacianSpectrum> spectrum_;
};

// ---------------------------------------------------------------------------
// Graph Factorization

/// SGD on 1/2 sum_E (W_ij - <Y_i,Y_j>)^2 + lambda/2 sum_i |Y_i|^2. The log holds the full
/// objective after every epoch. Throws NumericError on divergence.
EmbeddingResult embed_graph_factorization(const Graph& train, std::size_t d, const GfParams& params,
                                          std::uint64_t seed);

double gf_objective(const Graph& train, const DenseMatrix& y, double reg_lambda);

// ---------------------------------------------------------------------------
// HOPE

/// Katz proximity (I - beta W)^{-1} beta W. Throws NumericError when I - beta W is singular.
DenseMatrix katz_matrix(const Graph& train, double beta);

/// Katz matrix and its leading singular triplets, shared across dimensions.
struct HopeFactorization {
  DenseMatrix katz;
  num::Svd svd;
  double beta = 0.0;
};
HopeFactorization hope_factorize(const Graph& train, const HopeParams& params, std::size_t max_d);
/// Uses d/2 singular triplets (at least 1, at most what the factorization holds).
EmbeddingResult hope_from_factorization(const HopeFactorization& f, std::size_t d);

EmbeddingResult embed_hope(const Graph& train, std::size_t d, const HopeParams& params);

// ---------------------------------------------------------------------------
// SDNE

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Autoencoder n -> hidden... -> d -> ...hidden -> n with sigmoid units.
class SdneNetwork {
 public:
  SdneNetwork(std::size_t n, const std::vector<std::size_t>& hidden, std::size_t d, std::uint64_t seed);

  std::size_t num_parameters() const;
  num::Vector parameters() const;
  void set_parameters(const num::Vector& flat);

  /// Loss over the batch rows `x` (adjacency rows of the batch nodes) with `laplacian` the
  /// batch-local D - W. reg_scale multiplies the weight penalty. Fills grad (flat layout of
  /// parameters()) when non-null.
  double loss_and_gradient(const SparseMatrix& x, const SparseMatrix& laplacian, const SdneParams& params,
                           double reg_scale, num::Vector* grad) const;

  /// Embedding-layer activations and reconstruction for the given input rows.
  void forward(const SparseMatrix& x, DenseMatrix* embedding, DenseMatrix* reconstruction) const;

  std::size_t num_layers() const { return weights_.size(); }
  DenseMatrix& weight(std::size_t l) { return weights_[l]; }
  num::Vector& bias(std::size_t l) { return biases_[l]; }

 private:
  std::vector<DenseMatrix> weights_;  ///< out x in
  std::vector<num::Vector> biases_;
  std::size_t embedding_layer_ = 0;

  void forward_all(const SparseMatrix& x, std::vector<DenseMatrix>& acts) const;
  double loss_impl(const SparseMatrix& x, const SparseMatrix& laplacian, const SdneParams& params,
                   double reg_scale, std::vector<DenseMatrix>* grad_w, std::vector<num::Vector>* grad_b) const;
  friend class SdneTrainer;
};

/// Adjacency rows and D - W of a graph as sparse matrices.
SparseMatrix adjacency_sparse(const Graph& graph);
SparseMatrix laplacian_sparse(const Graph& graph);

/// Throws ValidationError when d exceeds the smallest hidden layer, NumericError on a
/// non-finite loss.
EmbeddingResult embed_sdne(const Graph& train, std::size_t d, const SdneParams& params, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Decoding

/// Decoder-dispatched score; symmetric in (u, v).
double link_score(const EmbeddingResult& embedding, NodeId u, NodeId v);

class EmbeddingScorer final : public PairScorer {
 public:
  explicit EmbeddingScorer(const EmbeddingResult& embedding) : EmbeddingScorer(embedding, embedding.decoder) {}
  /// Throws ValidationError when the decoder needs data the embedding lacks.
  EmbeddingScorer(const EmbeddingResult& embedding, Decoder decoder);

  std::size_t num_nodes() const override { return static_cast<std::size_t>(e_->y.rows()); }
  double score(NodeId u, NodeId v) const override;
  void score_row(NodeId u, std::span<double> out) const override;

 private:
  const EmbeddingResult* e_;
  Decoder decoder_;
  DenseMatrix yt_;  ///< d x |V| copy for the distance decoder; each node's coordinates contiguous
};

std::vector<ScoredPair> rank_candidates_embedding(const EmbeddingResult& embedding, const EdgeSplit& split,
                                                  std::optional<std::size_t> top_k = std::nullopt);

/// Text matrix: header "n d method", then one row per node (HOPE appends the target block).
void save_embedding(const EmbeddingResult& embedding, const std::filesystem::path& path);

}  // namespace gembench::embed
