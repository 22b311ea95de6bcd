#include "gembench/embeddings.hpp"

#include <cmath>
#include <fstream>

#include <Eigen/LU>
#include <fmt/format.h>

#include "gembench/error.hpp"
#include "gembench/rng.hpp"

namespace gembench::embed {

std::string method_id(Method method) {
  switch (method) {
    case Method::laplacian_eigenmaps: return "lap_eigen";
    case Method::graph_factorization: return "gf";
    case Method::hope: return "hope";
    case Method::sdne: return "sdne";
  }
  return "unknown";
}

std::optional<Method> parse_method(const std::string& id) {
  for (auto m : {Method::laplacian_eigenmaps, Method::graph_factorization, Method::hope, Method::sdne}) {
    if (method_id(m) == id) return m;
  }
  return std::nullopt;
}

std::string decoder_name(Decoder decoder) {
  switch (decoder) {
    case Decoder::inner_product: return "inner_product";
    case Decoder::neg_sq_distance: return "neg_sq_distance";
    case Decoder::reconstruction: return "reconstruction";
  }
  return "unknown";
}

std::optional<Decoder> parse_decoder(const std::string& name) {
  for (auto d : {Decoder::inner_product, Decoder::neg_sq_distance, Decoder::reconstruction}) {
    if (decoder_name(d) == name) return d;
  }
  return std::nullopt;
}

Decoder default_decoder(Method method) {
  switch (method) {
    case Method::laplacian_eigenmaps: return Decoder::neg_sq_distance;
    case Method::sdne: return Decoder::reconstruction;
    default: return Decoder::inner_product;
  }
}

void validate(const GfParams& p) {
  if (!(p.learning_rate > 0.0)) throw ValidationError("gf: learning_rate must be positive");
  if (p.epochs == 0) throw ValidationError("gf: epochs must be positive");
  if (!(p.reg_lambda >= 0.0)) throw ValidationError("gf: reg_lambda must be non-negative");
  if (!(p.init_scale > 0.0)) throw ValidationError("gf: init_scale must be positive");
}

void validate(const HopeParams& p) {
  if (!(p.beta_factor > 0.0 && p.beta_factor < 1.0)) throw ValidationError("hope: beta_factor must lie in (0, 1)");
}

// ---------------------------------------------------------------------------
// Laplacian Eigenmaps

LaplacianSpectrum laplacian_spectrum(const Graph& train, std::size_t max_d) {
  const std::size_t n = train.num_nodes();
  if (max_d >= n) {
    throw BoundsError(fmt::format("Laplacian Eigenmaps: dimension {} needs more than {} nodes", max_d, n));
  }
  if (!is_connected(train)) {
    throw ValidationError("Laplacian Eigenmaps needs a connected graph; embed its largest connected component");
  }
  return {num::sym_eig_smallest(num::normalized_laplacian(train), max_d + 1)};
}

EmbeddingResult laplacian_eigenmaps_from_spectrum(const LaplacianSpectrum& spectrum, std::size_t d) {
  const auto available = static_cast<std::size_t>(spectrum.pairs.values.size());
  if (d + 1 > available) throw BoundsError(fmt::format("spectrum holds {} eigenpairs, dimension {} needs {}", available, d, d + 1));
  EmbeddingResult r;
  r.method = Method::laplacian_eigenmaps;
  r.decoder = Decoder::neg_sq_distance;
  r.dimension = d;
  const auto dd = static_cast<Eigen::Index>(d);
  r.y = spectrum.pairs.vectors.middleCols(1, dd);
  for (Eigen::Index i = 1; i <= dd; ++i) r.eigenvalues.push_back(spectrum.pairs.values(i));
  return r;
}

EmbeddingResult embed_laplacian_eigenmaps(const Graph& train, std::size_t d) {
  if (d == 0) throw ValidationError("embedding dimension must be positive");
  return laplacian_eigenmaps_from_spectrum(laplacian_spectrum(train, d), d);
}

ComponentEigenmaps::ComponentEigenmaps(const Graph& train, std::size_t max_d) : n_(train.num_nodes()) {
  auto lcc = largest_connected_component(train);
  original_ids_ = std::move(lcc.original_ids);
  const std::size_t k = lcc.graph.num_nodes();
  if (k >= 2) spectrum_ = laplacian_spectrum(lcc.graph, std::min(max_d, k - 1));
}

EmbeddingResult ComponentEigenmaps::embed(std::size_t d) const {
  if (d == 0) throw ValidationError("embedding dimension must be positive");
  EmbeddingResult r;
  r.method = Method::laplacian_eigenmaps;
  r.decoder = Decoder::neg_sq_distance;
  r.dimension = d;
  r.y = DenseMatrix::Zero(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(d));
  if (!spectrum_) return r;
  const auto avail = static_cast<std::size_t>(spectrum_->pairs.values.size()) - 1;
  const auto part = laplacian_eigenmaps_from_spectrum(*spectrum_, std::min(d, avail));
  for (std::size_t i = 0; i < original_ids_.size(); ++i) {
    r.y.row(original_ids_[i]).head(part.y.cols()) = part.y.row(static_cast<Eigen::Index>(i));
  }
  r.eigenvalues = part.eigenvalues;
  return r;
}

// ---------------------------------------------------------------------------
// Graph Factorization

double gf_objective(const Graph& train, const DenseMatrix& y, double reg_lambda) {
  double data = 0.0;
  for (const auto& e : train.edges()) {
    const double r = e.weight - y.row(e.u).dot(y.row(e.v));
    data += r * r;
  }
  return 0.5 * data + 0.5 * reg_lambda * y.squaredNorm();
}

EmbeddingResult embed_graph_factorization(const Graph& train, std::size_t d, const GfParams& params,
                                          std::uint64_t seed) {
  validate(params);
  if (d == 0) throw ValidationError("embedding dimension must be positive");
  const auto n = static_cast<Eigen::Index>(train.num_nodes());
  const auto dd = static_cast<Eigen::Index>(d);
  Rng rng(seed);
  const double bound = params.init_scale / std::sqrt(static_cast<double>(d));
  EmbeddingResult r;
  r.method = Method::graph_factorization;
  r.decoder = Decoder::inner_product;
  r.dimension = d;
  r.y.resize(n, dd);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < dd; ++j) r.y(i, j) = rng.uniform(-bound, bound);
  }

  // Row-major copy keeps each node's coordinates contiguous during SGD.
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> y = r.y;
  const auto& edges = train.edges();
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  num::Vector yu(dd);
  double lr = params.learning_rate;
  r.training_log.reserve(params.epochs);
  for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
    if (params.lr_halving_period > 0 && epoch > 0 && epoch % params.lr_halving_period == 0) lr *= 0.5;
    rng.shuffle(order);
    for (auto idx : order) {
      const auto& e = edges[idx];
      auto a = y.row(e.u);
      auto b = y.row(e.v);
      const double err = e.weight - a.dot(b);
      yu = a.transpose();
      a += (lr * err) * b;
      b += (lr * err) * yu.transpose();
    }
    if (params.reg_lambda > 0.0) y *= 1.0 - lr * params.reg_lambda;
    const double objective = gf_objective(train, y, params.reg_lambda);
    if (!std::isfinite(objective) || objective > 1e12) {
      throw NumericError(fmt::format("graph factorization diverged at epoch {} (objective {}); use a smaller learning rate",
                                     epoch, objective));
    }
    r.training_log.push_back(objective);
  }
  r.y = y;
  return r;
}

// ---------------------------------------------------------------------------
// HOPE

DenseMatrix katz_matrix(const Graph& train, double beta) {
  const auto n = static_cast<Eigen::Index>(train.num_nodes());
  const DenseMatrix bw = beta * train.adjacency_matrix();
  const DenseMatrix m = DenseMatrix::Identity(n, n) - bw;
  Eigen::PartialPivLU<DenseMatrix> lu(m);
  if (!(lu.rcond() > 1e-14)) throw NumericError("Katz system I - beta W is singular");
  DenseMatrix s = lu.solve(bw);
  // S is a power series in W, hence exactly symmetric; remove solver round-off asymmetry.
  DenseMatrix sym = 0.5 * (s + s.transpose());
  return sym;
}

HopeFactorization hope_factorize(const Graph& train, const HopeParams& params, std::size_t max_d) {
  validate(params);
  const std::size_t n = train.num_nodes();
  const std::size_t half = std::clamp<std::size_t>(max_d / 2, 1, std::max<std::size_t>(n, 1));
  HopeFactorization f;
  if (train.num_edges() == 0) {
    const auto nn = static_cast<Eigen::Index>(n);
    const auto k = static_cast<Eigen::Index>(std::min(half, n));
    f.katz = DenseMatrix::Zero(nn, nn);
    f.svd.u = DenseMatrix::Zero(nn, k);
    f.svd.v = DenseMatrix::Zero(nn, k);
    f.svd.singular_values = num::Vector::Zero(k);
    return f;
  }
  const double rho = num::spectral_radius(train.adjacency_matrix());
  f.beta = params.beta_factor / rho;
  f.katz = katz_matrix(train, f.beta);
  f.svd = num::truncated_svd(f.katz, std::min(half, n));
  return f;
}

EmbeddingResult hope_from_factorization(const HopeFactorization& f, std::size_t d) {
  if (d == 0) throw ValidationError("embedding dimension must be positive");
  const auto k = std::min<Eigen::Index>(static_cast<Eigen::Index>(std::max<std::size_t>(d / 2, 1)),
                                        f.svd.singular_values.size());
  EmbeddingResult r;
  r.method = Method::hope;
  r.decoder = Decoder::inner_product;
  r.dimension = d;
  const num::Vector root = f.svd.singular_values.head(k).cwiseSqrt();
  r.y = f.svd.u.leftCols(k) * root.asDiagonal();
  r.y_target = f.svd.v.leftCols(k) * root.asDiagonal();
  return r;
}

EmbeddingResult embed_hope(const Graph& train, std::size_t d, const HopeParams& params) {
  return hope_from_factorization(hope_factorize(train, params, d), d);
}

// ---------------------------------------------------------------------------
// Decoding

EmbeddingScorer::EmbeddingScorer(const EmbeddingResult& embedding, Decoder decoder) : e_(&embedding), decoder_(decoder) {
  if (decoder == Decoder::reconstruction && !embedding.reconstruction) {
    throw ValidationError("reconstruction decoder needs an autoencoder embedding");
  }
  if (decoder == Decoder::neg_sq_distance) yt_ = embedding.y.transpose();
}

double EmbeddingScorer::score(NodeId u, NodeId v) const {
  const auto n = e_->y.rows();
  if (u >= n || v >= n) throw BoundsError(fmt::format("pair ({}, {}) out of range for {} nodes", u, v, n));
  switch (decoder_) {
    case Decoder::neg_sq_distance: return -(yt_.col(u) - yt_.col(v)).squaredNorm();
    case Decoder::reconstruction: return 0.5 * ((*e_->reconstruction)(u, v) + (*e_->reconstruction)(v, u));
    case Decoder::inner_product:
      if (e_->y_target) {
        return 0.5 * (e_->y.row(u).dot(e_->y_target->row(v)) + e_->y.row(v).dot(e_->y_target->row(u)));
      }
      return e_->y.row(u).dot(e_->y.row(v));
  }
  return 0.0;
}

void EmbeddingScorer::score_row(NodeId u, std::span<double> out) const {
  const auto n = e_->y.rows();
  if (u >= n) throw BoundsError(fmt::format("node {} out of range", u));
  if (static_cast<Eigen::Index>(out.size()) != n) throw ValidationError("score row has wrong length");
  Eigen::Map<num::Vector> row(out.data(), n);
  switch (decoder_) {
    case Decoder::neg_sq_distance:
      for (Eigen::Index v = 0; v < n; ++v) row(v) = -(yt_.col(u) - yt_.col(v)).squaredNorm();
      break;
    case Decoder::reconstruction:
      row = 0.5 * (e_->reconstruction->row(u).transpose() + e_->reconstruction->col(u));
      break;
    case Decoder::inner_product:
      if (e_->y_target) {
        row = 0.5 * (e_->y_target.value() * e_->y.row(u).transpose() + e_->y * e_->y_target->row(u).transpose());
      } else {
        row = e_->y * e_->y.row(u).transpose();
      }
      break;
  }
}

double link_score(const EmbeddingResult& embedding, NodeId u, NodeId v) {
  if (u == v) throw ValidationError("link score needs two distinct nodes");
  return EmbeddingScorer(embedding).score(u, v);
}

std::vector<ScoredPair> rank_candidates_embedding(const EmbeddingResult& embedding, const EdgeSplit& split,
                                                  std::optional<std::size_t> top_k) {
  return rank_candidates(EmbeddingScorer(embedding), split, top_k);
}

void save_embedding(const EmbeddingResult& embedding, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  auto write_block = [&](const DenseMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << fmt::format("{}", m(i, j));
      out << '\n';
    }
  };
  out << embedding.y.rows() << ' ' << embedding.y.cols() << ' ' << method_id(embedding.method) << '\n';
  write_block(embedding.y);
  if (embedding.y_target) {
    out << "# target\n";
    write_block(*embedding.y_target);
  }
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace gembench::embed
