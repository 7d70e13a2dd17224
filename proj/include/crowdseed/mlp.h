// Copyright 2026 The Crowdseed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CROWDSEED_MLP_H_
#define CROWDSEED_MLP_H_

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "crowdseed/dataset.h"
#include "crowdseed/error.h"
#include "crowdseed/metrics.h"
#include "crowdseed/random.h"
#include "crowdseed/train_config.h"

namespace crowdseed {

enum class Activation { kRelu, kSigmoid, kIdentity };

inline std::string ActivationName(Activation a) {
  switch (a) {
    case Activation::kRelu:
      return "relu";
    case Activation::kSigmoid:
      return "sigmoid";
    case Activation::kIdentity:
      break;
  }
  return "identity";
}

inline Activation ParseActivation(const std::string& name) {
  if (name == "relu") return Activation::kRelu;
  if (name == "sigmoid") return Activation::kSigmoid;
  if (name == "identity") return Activation::kIdentity;
  throw Error("unknown activation '" + name + "'");
}

template <typename Scalar>
Scalar Activate(Activation a, Scalar z) {
  switch (a) {
    case Activation::kRelu:
      return z > Scalar(0) ? z : Scalar(0);
    case Activation::kSigmoid:
      return Scalar(1) / (Scalar(1) + std::exp(-z));
    case Activation::kIdentity:
      break;
  }
  return z;
}

// Derivative with respect to the pre-activation. The rectifier's derivative
// at exactly 0 is 0.
template <typename Scalar>
Scalar ActivateDerivative(Activation a, Scalar z) {
  switch (a) {
    case Activation::kRelu:
      return z > Scalar(0) ? Scalar(1) : Scalar(0);
    case Activation::kSigmoid: {
      const Scalar s = Activate(a, z);
      return s * (Scalar(1) - s);
    }
    case Activation::kIdentity:
      break;
  }
  return Scalar(1);
}

// Fully connected feed-forward network. Layer l maps layer_sizes[l] inputs
// to layer_sizes[l+1] outputs through weights[l] (out x in) and biases[l].
// Hidden layers use `hidden`, the single output unit uses `output`.
template <typename Scalar>
struct Mlp {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  std::vector<Matrix> weights;
  std::vector<Vector> biases;
  Activation hidden = Activation::kRelu;
  Activation output = Activation::kSigmoid;

  // All-zero parameters.
  static Mlp Zeros(const std::vector<int>& layer_sizes) {
    CROWDSEED_CHECK(layer_sizes.size() >= 2, "a network needs at least two layers");
    CROWDSEED_CHECK(layer_sizes.back() == 1, "the output layer must have one unit");
    Mlp m;
    for (size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
      CROWDSEED_CHECK(layer_sizes[l] >= 1 && layer_sizes[l + 1] >= 1,
                      "layer sizes must be positive");
      m.weights.push_back(Matrix::Zero(layer_sizes[l + 1], layer_sizes[l]));
      m.biases.push_back(Vector::Zero(layer_sizes[l + 1]));
    }
    return m;
  }

  int num_inputs() const { return static_cast<int>(weights.front().cols()); }
  int num_layers() const { return static_cast<int>(weights.size()); }
  int num_hidden_layers() const { return num_layers() - 1; }
  int layer_width(int l) const {
    return l == 0 ? num_inputs() : static_cast<int>(weights[l - 1].rows());
  }
  std::vector<int> layer_sizes() const {
    std::vector<int> sizes = {num_inputs()};
    for (const auto& w : weights) sizes.push_back(static_cast<int>(w.rows()));
    return sizes;
  }
  Activation activation_of(int l) const { return l + 1 == num_layers() ? output : hidden; }

  bool AllFinite() const {
    for (int l = 0; l < num_layers(); ++l) {
      if (!weights[l].allFinite() || !biases[l].allFinite()) return false;
    }
    return true;
  }

  template <typename NewScalar>
  Mlp<NewScalar> cast() const {
    Mlp<NewScalar> m;
    for (int l = 0; l < num_layers(); ++l) {
      m.weights.push_back(weights[l].template cast<NewScalar>());
      m.biases.push_back(biases[l].template cast<NewScalar>());
    }
    m.hidden = hidden;
    m.output = output;
    return m;
  }
};

// {inputs, hidden..., 1}.
inline std::vector<int> LayerSizes(int num_inputs, const std::vector<int>& hidden_sizes) {
  std::vector<int> sizes = {num_inputs};
  sizes.insert(sizes.end(), hidden_sizes.begin(), hidden_sizes.end());
  sizes.push_back(1);
  return sizes;
}

// Column-per-sample activations: pre[l] and post[l] belong to layer l + 1,
// post[-1] is the network output, `input` holds the samples as columns.
template <typename Scalar>
struct ForwardCache {
  typename Mlp<Scalar>::Matrix input;
  std::vector<typename Mlp<Scalar>::Matrix> pre;
  std::vector<typename Mlp<Scalar>::Matrix> post;
};

template <typename Scalar>
ForwardCache<Scalar> ForwardWithCache(const Mlp<Scalar>& m,
                                      const typename Mlp<Scalar>::Matrix& columns) {
  CROWDSEED_CHECK(columns.rows() == m.num_inputs(),
                  "network expects " + std::to_string(m.num_inputs()) + " inputs, got " +
                      std::to_string(columns.rows()));
  ForwardCache<Scalar> cache;
  cache.input = columns;
  const typename Mlp<Scalar>::Matrix* in = &cache.input;
  for (int l = 0; l < m.num_layers(); ++l) {
    typename Mlp<Scalar>::Matrix z = m.weights[l] * (*in);
    z.colwise() += m.biases[l];
    const Activation a = m.activation_of(l);
    cache.post.push_back(z.unaryExpr([a](Scalar v) { return Activate(a, v); }));
    cache.pre.push_back(std::move(z));
    in = &cache.post.back();
  }
  return cache;
}

// Output for every row of `rows` (samples x inputs).
template <typename Scalar>
typename Mlp<Scalar>::Vector ForwardBatch(const Mlp<Scalar>& m,
                                          const typename Mlp<Scalar>::Matrix& rows) {
  return ForwardWithCache(m, typename Mlp<Scalar>::Matrix(rows.transpose())).post.back().row(0).transpose();
}

template <typename Scalar>
Scalar Forward(const Mlp<Scalar>& m, const typename Mlp<Scalar>::Vector& x) {
  CROWDSEED_CHECK(x.allFinite(), "network input must be finite");
  return ForwardWithCache(m, typename Mlp<Scalar>::Matrix(x)).post.back()(0, 0);
}

// Mean binary cross-entropy of the sigmoid output against real targets in
// [0, 1]. Computed from the logits.
template <typename Scalar>
Scalar BinaryCrossEntropy(const Mlp<Scalar>& m, const typename Mlp<Scalar>::Matrix& rows,
                          const typename Mlp<Scalar>::Vector& targets) {
  CROWDSEED_CHECK(m.output == Activation::kSigmoid, "cross-entropy needs a sigmoid output");
  const auto cache = ForwardWithCache(m, typename Mlp<Scalar>::Matrix(rows.transpose()));
  const auto& logits = cache.pre.back();
  Scalar total(0);
  for (Eigen::Index i = 0; i < logits.cols(); ++i) {
    const Scalar z = logits(0, i);
    total += std::max(z, Scalar(0)) - targets[i] * z + std::log1p(std::exp(-std::abs(z)));
  }
  return total / static_cast<Scalar>(logits.cols());
}

template <typename Scalar>
struct MlpGradients {
  std::vector<typename Mlp<Scalar>::Matrix> weights;
  std::vector<typename Mlp<Scalar>::Vector> biases;
};

// Analytic gradients of BinaryCrossEntropy.
template <typename Scalar>
MlpGradients<Scalar> BackpropGradients(const Mlp<Scalar>& m,
                                       const typename Mlp<Scalar>::Matrix& rows,
                                       const typename Mlp<Scalar>::Vector& targets) {
  using Matrix = typename Mlp<Scalar>::Matrix;
  CROWDSEED_CHECK(m.output == Activation::kSigmoid, "cross-entropy needs a sigmoid output");
  CROWDSEED_CHECK(rows.rows() > 0 && rows.rows() == targets.size(), "empty or mismatched batch");
  const auto cache = ForwardWithCache(m, Matrix(rows.transpose()));
  const Scalar inv = Scalar(1) / static_cast<Scalar>(rows.rows());
  // dL/dz at the output: (p - y) / n.
  Matrix delta = (cache.post.back() - targets.transpose()) * inv;
  MlpGradients<Scalar> grads;
  grads.weights.resize(m.num_layers());
  grads.biases.resize(m.num_layers());
  for (int l = m.num_layers() - 1; l >= 0; --l) {
    const Matrix& in = l == 0 ? cache.input : cache.post[l - 1];
    grads.weights[l].noalias() = delta * in.transpose();
    grads.biases[l] = delta.rowwise().sum();
    if (l > 0) {
      const Activation a = m.activation_of(l - 1);
      Matrix back = m.weights[l].transpose() * delta;
      delta = back.cwiseProduct(
          cache.pre[l - 1].unaryExpr([a](Scalar v) { return ActivateDerivative(a, v); }));
    }
  }
  return grads;
}

// Gradient of the network output with respect to its input at `x`.
template <typename Scalar>
typename Mlp<Scalar>::Vector InputGradient(const Mlp<Scalar>& m,
                                           const typename Mlp<Scalar>::Vector& x) {
  using Matrix = typename Mlp<Scalar>::Matrix;
  const auto cache = ForwardWithCache(m, Matrix(x));
  Matrix delta(1, 1);
  delta(0, 0) = ActivateDerivative(m.output, cache.pre.back()(0, 0));
  for (int l = m.num_layers() - 1; l >= 0; --l) {
    Matrix back = m.weights[l].transpose() * delta;
    if (l == 0) return back.col(0);
    const Activation a = m.activation_of(l - 1);
    delta = back.cwiseProduct(
        cache.pre[l - 1].unaryExpr([a](Scalar v) { return ActivateDerivative(a, v); }));
  }
  return {};
}

// Random mode: every weight uniform in [-1/sqrt(fan_in), 1/sqrt(fan_in)],
// biases 0. Seeded mode: the first layer comes from cfg.seeder (default
// ReplicateSeedRows), the remaining layers are random.
template <typename Scalar = double>
Mlp<Scalar> MlpInit(int num_inputs, const TrainConfig& cfg) {
  cfg.Validate(num_inputs);
  Mlp<double> m = Mlp<double>::Zeros(LayerSizes(num_inputs, cfg.hidden_sizes));
  Rng rng(DeriveSeed(cfg.rng_seed, {0x1417}));
  for (int l = 0; l < m.num_layers(); ++l) {
    const double limit = 1.0 / std::sqrt(static_cast<double>(m.weights[l].cols()));
    std::uniform_real_distribution<double> u(-limit, limit);
    for (Eigen::Index j = 0; j < m.weights[l].rows(); ++j) {
      for (Eigen::Index i = 0; i < m.weights[l].cols(); ++i) m.weights[l](j, i) = u(rng);
    }
  }
  if (cfg.init_mode == InitMode::kSeeded) {
    Rng jitter_rng(DeriveSeed(cfg.rng_seed, {0x7177}));
    const FirstLayerSeeder& seeder = cfg.seeder ? cfg.seeder : FirstLayerSeeder(ReplicateSeedRows);
    seeder(cfg.seed->values, cfg.seed_jitter, jitter_rng, &m.weights[0]);
  }
  return m.template cast<Scalar>();
}

// Mini-batch SGD on mean binary cross-entropy. Rows are reshuffled every
// epoch from a stream derived from cfg.rng_seed. When `epoch_losses` is
// given it receives the full-data loss before training and after each epoch.
template <typename Scalar = double>
Mlp<Scalar> MlpTrain(const Dataset& data, const TrainConfig& cfg,
                     std::vector<double>* epoch_losses = nullptr) {
  using Matrix = typename Mlp<Scalar>::Matrix;
  using Vector = typename Mlp<Scalar>::Vector;
  const int pos = data.CountPositives();
  CROWDSEED_CHECK(pos > 0 && pos < data.rows(), "training data must contain both classes");
  Mlp<Scalar> m = MlpInit<Scalar>(data.num_features(), cfg);
  const Matrix x = data.features.cast<Scalar>();
  const Vector y = data.labels.cast<Scalar>();
  if (epoch_losses) epoch_losses->push_back(static_cast<double>(BinaryCrossEntropy(m, x, y)));

  Rng rng(DeriveSeed(cfg.rng_seed, {0x5b7c}));
  std::vector<int> order(data.rows());
  std::iota(order.begin(), order.end(), 0);
  const Scalar lr = static_cast<Scalar>(cfg.learning_rate);
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (size_t start = 0; start < order.size(); start += cfg.batch_size) {
      const size_t end = std::min(order.size(), start + cfg.batch_size);
      Matrix batch(static_cast<Eigen::Index>(end - start), x.cols());
      Vector targets(static_cast<Eigen::Index>(end - start));
      for (size_t k = start; k < end; ++k) {
        batch.row(k - start) = x.row(order[k]);
        targets[k - start] = y[order[k]];
      }
      const MlpGradients<Scalar> g = BackpropGradients(m, batch, targets);
      for (int l = 0; l < m.num_layers(); ++l) {
        m.weights[l].noalias() -= lr * g.weights[l];
        m.biases[l].noalias() -= lr * g.biases[l];
      }
      if (!m.AllFinite()) {
        throw Error("network training diverged in epoch " + std::to_string(epoch) +
                    " at row offset " + std::to_string(start) +
                    "; lower the learning rate");
      }
    }
    if (epoch_losses) epoch_losses->push_back(static_cast<double>(BinaryCrossEntropy(m, x, y)));
  }
  return m;
}

// Labels at threshold 0.5.
template <typename Scalar>
Eigen::VectorXi MlpPredict(const Mlp<Scalar>& m, const Eigen::MatrixXd& features) {
  const auto p = ForwardBatch(m, typename Mlp<Scalar>::Matrix(features.cast<Scalar>()));
  return (p.array() >= Scalar(0.5)).template cast<int>();
}

template <typename Scalar>
Metrics Evaluate(const Mlp<Scalar>& m, const Dataset& test) {
  CROWDSEED_CHECK(test.rows() > 0, "cannot evaluate on an empty dataset");
  return ComputeMetrics(MlpPredict(m, test.features), test.labels);
}

}  // namespace crowdseed

#endif  // CROWDSEED_MLP_H_
