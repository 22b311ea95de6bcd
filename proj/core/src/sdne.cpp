#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "gembench/embeddings.hpp"
#include "gembench/error.hpp"
#include "gembench/rng.hpp"

namespace gembench::embed {
namespace {

/// z <- sigmoid(z + 1 b^T). Two passes: a fused broadcast defeats vectorization of the logistic.
void add_bias_sigmoid(DenseMatrix& z, const num::Vector& b) {
  z.rowwise() += b.transpose();
  z.array() = z.array().logistic();
}

}  // namespace

void validate(const SdneParams& p) {
  if (p.hidden_layers.empty()) throw ValidationError("sdne: at least one hidden layer is required");
  for (auto h : p.hidden_layers) {
    if (h == 0) throw ValidationError("sdne: hidden layer sizes must be positive");
  }
  if (!(p.alpha >= 0.0)) throw ValidationError("sdne: alpha must be non-negative");
  if (!(p.beta_penalty > 1.0)) throw ValidationError("sdne: beta_penalty must exceed 1");
  if (!(p.reg_nu >= 0.0)) throw ValidationError("sdne: reg_nu must be non-negative");
  if (!(p.learning_rate > 0.0)) throw ValidationError("sdne: learning_rate must be positive");
  if (p.epochs == 0) throw ValidationError("sdne: epochs must be positive");
  if (p.batch_size == 0) throw ValidationError("sdne: batch_size must be positive");
}

SparseMatrix adjacency_sparse(const Graph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.num_nodes());
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(2 * graph.num_edges());
  for (const auto& e : graph.edges()) {
    t.emplace_back(e.u, e.v, e.weight);
    t.emplace_back(e.v, e.u, e.weight);
  }
  SparseMatrix m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

SparseMatrix laplacian_sparse(const Graph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.num_nodes());
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(4 * graph.num_edges());
  for (const auto& e : graph.edges()) {
    t.emplace_back(e.u, e.v, -e.weight);
    t.emplace_back(e.v, e.u, -e.weight);
    t.emplace_back(e.u, e.u, e.weight);
    t.emplace_back(e.v, e.v, e.weight);
  }
  SparseMatrix m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

SdneNetwork::SdneNetwork(std::size_t n, const std::vector<std::size_t>& hidden, std::size_t d, std::uint64_t seed) {
  std::vector<std::size_t> sizes{n};
  sizes.insert(sizes.end(), hidden.begin(), hidden.end());
  sizes.push_back(d);
  embedding_layer_ = sizes.size() - 2;
  for (auto it = hidden.rbegin(); it != hidden.rend(); ++it) sizes.push_back(*it);
  sizes.push_back(n);

  Rng rng(seed);
  for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
    const auto in = static_cast<Eigen::Index>(sizes[l]);
    const auto out = static_cast<Eigen::Index>(sizes[l + 1]);
    const double limit = std::sqrt(6.0 / static_cast<double>(in + out));
    DenseMatrix w(out, in);
    for (Eigen::Index j = 0; j < in; ++j) {
      for (Eigen::Index i = 0; i < out; ++i) w(i, j) = rng.uniform(-limit, limit);
    }
    weights_.push_back(std::move(w));
    biases_.push_back(num::Vector::Zero(out));
  }
}

std::size_t SdneNetwork::num_parameters() const {
  std::size_t total = 0;
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    total += static_cast<std::size_t>(weights_[l].size() + biases_[l].size());
  }
  return total;
}

num::Vector SdneNetwork::parameters() const {
  num::Vector flat(static_cast<Eigen::Index>(num_parameters()));
  Eigen::Index pos = 0;
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    flat.segment(pos, weights_[l].size()) = weights_[l].reshaped();
    pos += weights_[l].size();
    flat.segment(pos, biases_[l].size()) = biases_[l];
    pos += biases_[l].size();
  }
  return flat;
}

void SdneNetwork::set_parameters(const num::Vector& flat) {
  if (flat.size() != static_cast<Eigen::Index>(num_parameters())) throw ValidationError("parameter vector has wrong length");
  Eigen::Index pos = 0;
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    weights_[l].reshaped() = flat.segment(pos, weights_[l].size());
    pos += weights_[l].size();
    biases_[l] = flat.segment(pos, biases_[l].size());
    pos += biases_[l].size();
  }
}

void SdneNetwork::forward_all(const SparseMatrix& x, std::vector<DenseMatrix>& acts) const {
  acts.resize(weights_.size());
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    if (l == 0) {
      // Sparse times a contiguous dense operand is much faster than against a transposed view.
      const DenseMatrix w0t = weights_[0].transpose();
      acts[0] = x * w0t;
    } else {
      acts[l].noalias() = acts[l - 1] * weights_[l].transpose();
    }
    add_bias_sigmoid(acts[l], biases_[l]);
  }
}

void SdneNetwork::forward(const SparseMatrix& x, DenseMatrix* embedding, DenseMatrix* reconstruction) const {
  std::vector<DenseMatrix> acts;
  forward_all(x, acts);
  if (embedding) *embedding = acts[embedding_layer_];
  if (reconstruction) *reconstruction = std::move(acts.back());
}

double SdneNetwork::loss_impl(const SparseMatrix& x, const SparseMatrix& laplacian, const SdneParams& params,
                              double reg_scale, std::vector<DenseMatrix>* grad_w,
                              std::vector<num::Vector>* grad_b) const {
  std::vector<DenseMatrix> acts;
  forward_all(x, acts);

  // Weighted reconstruction: entries with x_ij > 0 carry weight beta^2 in the squared error.
  // delta is the gradient with respect to the output pre-activation: 2 b^2 (xhat - x) xhat (1 - xhat).
  const DenseMatrix& out = acts.back();
  const double b2 = params.beta_penalty * params.beta_penalty;
  double loss = out.squaredNorm();
  DenseMatrix delta;
  if (grad_w) delta = (2.0 * out.array().square() * (1.0 - out.array())).matrix();
  for (Eigen::Index i = 0; i < x.outerSize(); ++i) {
    for (SparseMatrix::InnerIterator it(x, i); it; ++it) {
      const double pred = out(i, it.col());
      const double r = pred - it.value();
      loss += b2 * r * r - pred * pred;
      if (grad_w) delta(i, it.col()) = 2.0 * b2 * r * pred * (1.0 - pred);
    }
  }

  const DenseMatrix& y = acts[embedding_layer_];
  DenseMatrix ly;
  if (params.alpha != 0.0) {
    ly = laplacian * y;
    loss += params.alpha * (y.array() * ly.array()).sum();
  }
  if (params.reg_nu != 0.0) {
    double sq = 0.0;
    for (const auto& w : weights_) sq += w.squaredNorm();
    loss += 0.5 * params.reg_nu * reg_scale * sq;
  }
  if (!grad_w) return loss;

  grad_w->resize(weights_.size());
  grad_b->resize(weights_.size());
  for (std::size_t l = weights_.size(); l-- > 0;) {
    (*grad_b)[l] = delta.colwise().sum().transpose();
    if (l == 0) {
      const DenseMatrix xt_delta = x.transpose() * delta;
      (*grad_w)[l] = xt_delta.transpose();
    } else {
      (*grad_w)[l].noalias() = delta.transpose() * acts[l - 1];
      DenseMatrix g;
      g.noalias() = delta * weights_[l];
      if (l - 1 == embedding_layer_ && params.alpha != 0.0) g += (2.0 * params.alpha) * ly;
      delta = g.array() * acts[l - 1].array() * (1.0 - acts[l - 1].array());
    }
    if (params.reg_nu != 0.0) (*grad_w)[l] += (params.reg_nu * reg_scale) * weights_[l];
  }
  return loss;
}

double SdneNetwork::loss_and_gradient(const SparseMatrix& x, const SparseMatrix& laplacian, const SdneParams& params,
                                      double reg_scale, num::Vector* grad) const {
  if (!grad) return loss_impl(x, laplacian, params, reg_scale, nullptr, nullptr);
  std::vector<DenseMatrix> gw;
  std::vector<num::Vector> gb;
  const double loss = loss_impl(x, laplacian, params, reg_scale, &gw, &gb);
  grad->resize(static_cast<Eigen::Index>(num_parameters()));
  Eigen::Index pos = 0;
  for (std::size_t l = 0; l < gw.size(); ++l) {
    grad->segment(pos, gw[l].size()) = gw[l].reshaped();
    pos += gw[l].size();
    grad->segment(pos, gb[l].size()) = gb[l];
    pos += gb[l].size();
  }
  return loss;
}

/// Adam over the network's per-layer parameters.
class SdneTrainer {
 public:
  SdneTrainer(SdneNetwork& net, double lr) : net_(net), lr_(lr) {
    for (std::size_t l = 0; l < net.weights_.size(); ++l) {
      mw_.push_back(DenseMatrix::Zero(net.weights_[l].rows(), net.weights_[l].cols()));
      vw_.push_back(mw_.back());
      mb_.push_back(num::Vector::Zero(net.biases_[l].size()));
      vb_.push_back(mb_.back());
    }
  }

  double step(const SparseMatrix& x, const SparseMatrix& laplacian, const SdneParams& params, double reg_scale) {
    std::vector<DenseMatrix> gw;
    std::vector<num::Vector> gb;
    const double loss = net_.loss_impl(x, laplacian, params, reg_scale, &gw, &gb);
    if (!std::isfinite(loss)) return loss;
    ++t_;
    const double c1 = 1.0 - std::pow(beta1, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(beta2, static_cast<double>(t_));
    const double step = lr_ * std::sqrt(c2) / c1;
    for (std::size_t l = 0; l < gw.size(); ++l) {
      update(net_.weights_[l], mw_[l], vw_[l], gw[l], step);
      update(net_.biases_[l], mb_[l], vb_[l], gb[l], step);
    }
    return loss;
  }

 private:
  static constexpr double beta1 = 0.9;
  static constexpr double beta2 = 0.999;
  static constexpr double eps = 1e-8;

  template <typename M>
  static void update(M& p, M& m, M& v, const M& g, double step) {
    m = beta1 * m + (1.0 - beta1) * g;
    v = beta2 * v + (1.0 - beta2) * g.cwiseAbs2();
    p.array() -= step * m.array() / (v.array().sqrt() + eps);
  }

  SdneNetwork& net_;
  double lr_;
  std::size_t t_ = 0;
  std::vector<DenseMatrix> mw_, vw_;
  std::vector<num::Vector> mb_, vb_;
};

EmbeddingResult embed_sdne(const Graph& train, std::size_t d, const SdneParams& params, std::uint64_t seed) {
  validate(params);
  const std::size_t n = train.num_nodes();
  if (d == 0) throw ValidationError("embedding dimension must be positive");
  const auto smallest = *std::min_element(params.hidden_layers.begin(), params.hidden_layers.end());
  if (d > smallest) {
    throw ValidationError(fmt::format("sdne: dimension {} exceeds the smallest hidden layer ({})", d, smallest));
  }
  if (d > n) throw BoundsError(fmt::format("sdne: dimension {} exceeds node count {}", d, n));

  SdneNetwork net(n, params.hidden_layers, d, stable_hash(seed, 1));
  SdneTrainer trainer(net, params.learning_rate);
  const SparseMatrix x = adjacency_sparse(train);
  const SparseMatrix lap = laplacian_sparse(train);

  EmbeddingResult r;
  r.method = Method::sdne;
  r.decoder = Decoder::reconstruction;
  r.dimension = d;
  r.training_log.reserve(params.epochs);
  auto check = [&](double loss, std::size_t epoch) {
    if (!std::isfinite(loss)) throw NumericError(fmt::format("sdne: loss is not finite at epoch {}", epoch));
  };

  if (n <= params.full_batch_max_nodes) {
    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
      const double loss = trainer.step(x, lap, params, 1.0);
      check(loss, epoch);
      r.training_log.push_back(loss);
    }
  } else {
    Rng rng(stable_hash(seed, 2));
    std::vector<NodeId> order(n);
    for (NodeId i = 0; i < n; ++i) order[i] = i;
    std::vector<Eigen::Index> local(n, -1);
    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
      rng.shuffle(order);
      double total = 0.0;
      for (std::size_t start = 0; start < n; start += params.batch_size) {
        const std::size_t end = std::min(n, start + params.batch_size);
        const auto b = static_cast<Eigen::Index>(end - start);
        std::vector<Eigen::Triplet<double>> xt;
        std::vector<Eigen::Triplet<double>> lt;
        for (std::size_t i = start; i < end; ++i) local[order[i]] = static_cast<Eigen::Index>(i - start);
        for (std::size_t i = start; i < end; ++i) {
          const NodeId u = order[i];
          const auto row = static_cast<Eigen::Index>(i - start);
          const auto nbrs = train.neighbors(u);
          const auto ws = train.neighbor_weights(u);
          for (std::size_t k = 0; k < nbrs.size(); ++k) {
            xt.emplace_back(row, nbrs[k], ws[k]);
            if (local[nbrs[k]] >= 0) {
              lt.emplace_back(row, local[nbrs[k]], -ws[k]);
              lt.emplace_back(row, row, ws[k]);
            }
          }
        }
        for (std::size_t i = start; i < end; ++i) local[order[i]] = -1;
        SparseMatrix xb(b, static_cast<Eigen::Index>(n));
        xb.setFromTriplets(xt.begin(), xt.end());
        SparseMatrix lb(b, b);
        lb.setFromTriplets(lt.begin(), lt.end());
        const double loss =
            trainer.step(xb, lb, params, static_cast<double>(b) / static_cast<double>(n));
        check(loss, epoch);
        total += loss;
      }
      r.training_log.push_back(total);
    }
  }

  DenseMatrix recon;
  net.forward(x, &r.y, &recon);
  if (!recon.allFinite() || !r.y.allFinite()) throw NumericError("sdne: non-finite embedding");
  r.reconstruction = std::move(recon);
  return r;
}

}  // namespace gembench::embed
