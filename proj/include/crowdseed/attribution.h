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

#ifndef CROWDSEED_ATTRIBUTION_H_
#define CROWDSEED_ATTRIBUTION_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "crowdseed/dataset.h"
#include "crowdseed/error.h"
#include "crowdseed/mlp.h"

namespace crowdseed {

// Straight-line path from `baseline` to the input, integrated with the
// midpoint rule: alpha_k = (k + 1/2) / steps.
struct AttributionConfig {
  // Empty means the zero vector.
  Eigen::VectorXd baseline;
  int steps = 50;
};

// Attributions of one input (or a dataset mean) for one hidden layer.
// Layers are numbered from 1 (first hidden layer).
struct AttributionResult {
  // Integrated gradients per input feature.
  Eigen::VectorXd ig;
  // Total conductance per neuron of `layer`.
  Eigen::VectorXd conductance;
  // Sum over neurons i of conductance[i] * neuron_ig(i, w).
  Eigen::VectorXd combined;
  // Per-neuron integrated gradients, neurons x features.
  Eigen::MatrixXd neuron_ig;
  // sum(ig) - (F(x) - F(baseline)).
  double completeness_gap = 0.0;
  // sum(conductance) - (F(x) - F(baseline)).
  double conservation_gap = 0.0;
  int layer = 1;
  int steps = 0;
};

namespace internal {

template <typename Scalar>
typename Mlp<Scalar>::Vector Baseline(const Mlp<Scalar>& m, const AttributionConfig& cfg) {
  if (cfg.baseline.size() == 0) return Mlp<Scalar>::Vector::Zero(m.num_inputs());
  CROWDSEED_CHECK(cfg.baseline.size() == m.num_inputs(), "baseline arity mismatch");
  return cfg.baseline.cast<Scalar>();
}

template <typename Scalar>
void CheckLayer(const Mlp<Scalar>& m, int layer) {
  CROWDSEED_CHECK(layer >= 1 && layer <= m.num_hidden_layers(),
                  "layer must be a hidden layer in [1, " +
                      std::to_string(m.num_hidden_layers()) + "], got " +
                      std::to_string(layer));
}

// Jacobian of the layer's activations with respect to the input
// (neurons x features) and gradient of the output with respect to those
// activations, at input `x`.
template <typename Scalar>
void LayerDerivatives(const Mlp<Scalar>& m, int layer, const typename Mlp<Scalar>::Vector& x,
                      typename Mlp<Scalar>::Matrix* jacobian,
                      typename Mlp<Scalar>::Vector* output_grad) {
  using Matrix = typename Mlp<Scalar>::Matrix;
  using Vector = typename Mlp<Scalar>::Vector;
  const auto cache = ForwardWithCache(m, Matrix(x));
  auto derivative = [&](int l) -> Vector {
    const Activation a = m.activation_of(l);
    return cache.pre[l].col(0).unaryExpr([a](Scalar v) { return ActivateDerivative(a, v); });
  };
  Matrix jac = Matrix::Identity(m.num_inputs(), m.num_inputs());
  for (int l = 0; l < layer; ++l) {
    jac = derivative(l).asDiagonal() * (m.weights[l] * jac);
  }
  *jacobian = std::move(jac);
  Matrix delta = derivative(m.num_layers() - 1);
  for (int l = m.num_layers() - 1; l >= layer; --l) {
    Matrix back = m.weights[l].transpose() * delta;
    if (l == layer) {
      *output_grad = back.col(0);
      return;
    }
    delta = back.cwiseProduct(derivative(l - 1));
  }
}

}  // namespace internal

// (x_i - x'_i) times the path-averaged gradient of the output along x_i.
template <typename Scalar>
typename Mlp<Scalar>::Vector IntegratedGradients(const Mlp<Scalar>& m,
                                                 const typename Mlp<Scalar>::Vector& x,
                                                 const AttributionConfig& cfg = {}) {
  using Vector = typename Mlp<Scalar>::Vector;
  CROWDSEED_CHECK(cfg.steps >= 1, "attribution needs at least one step");
  CROWDSEED_CHECK(x.size() == m.num_inputs(), "input arity mismatch");
  const Vector base = internal::Baseline(m, cfg);
  const Vector diff = x - base;
  Vector sum = Vector::Zero(x.size());
  for (int k = 0; k < cfg.steps; ++k) {
    const Scalar alpha = (Scalar(k) + Scalar(0.5)) / Scalar(cfg.steps);
    sum += InputGradient(m, Vector(base + alpha * diff));
  }
  return diff.cwiseProduct(sum) / Scalar(cfg.steps);
}

// Conductance of every neuron in `layer`, split by input feature
// (neurons x features): (x_i - x'_i) times the path average of
// dF/dy * dy/dx_i. Row sums give each neuron's total conductance.
template <typename Scalar>
typename Mlp<Scalar>::Matrix ConductanceByFeature(const Mlp<Scalar>& m, int layer,
                                                  const typename Mlp<Scalar>::Vector& x,
                                                  const AttributionConfig& cfg = {}) {
  using Matrix = typename Mlp<Scalar>::Matrix;
  using Vector = typename Mlp<Scalar>::Vector;
  internal::CheckLayer(m, layer);
  CROWDSEED_CHECK(cfg.steps >= 1, "attribution needs at least one step");
  CROWDSEED_CHECK(x.size() == m.num_inputs(), "input arity mismatch");
  const Vector base = internal::Baseline(m, cfg);
  const Vector diff = x - base;
  Matrix sum = Matrix::Zero(m.layer_width(layer), m.num_inputs());
  Matrix jac;
  Vector grad;
  for (int k = 0; k < cfg.steps; ++k) {
    const Scalar alpha = (Scalar(k) + Scalar(0.5)) / Scalar(cfg.steps);
    internal::LayerDerivatives(m, layer, Vector(base + alpha * diff), &jac, &grad);
    sum += grad.asDiagonal() * jac;
  }
  return (sum * diff.asDiagonal()) / Scalar(cfg.steps);
}

template <typename Scalar>
Scalar NeuronConductance(const Mlp<Scalar>& m, int layer, int neuron,
                         const typename Mlp<Scalar>::Vector& x,
                         const AttributionConfig& cfg = {}) {
  internal::CheckLayer(m, layer);
  CROWDSEED_CHECK(neuron >= 0 && neuron < m.layer_width(layer),
                  "neuron index " + std::to_string(neuron) + " out of range for layer " +
                      std::to_string(layer));
  return ConductanceByFeature(m, layer, x, cfg).row(neuron).sum();
}

// Integrated gradients of each neuron's activation in `layer` with respect
// to the input (neurons x features).
template <typename Scalar>
typename Mlp<Scalar>::Matrix NeuronIntegratedGradients(const Mlp<Scalar>& m, int layer,
                                                       const typename Mlp<Scalar>::Vector& x,
                                                       const AttributionConfig& cfg = {}) {
  using Matrix = typename Mlp<Scalar>::Matrix;
  using Vector = typename Mlp<Scalar>::Vector;
  internal::CheckLayer(m, layer);
  CROWDSEED_CHECK(cfg.steps >= 1, "attribution needs at least one step");
  const Vector base = internal::Baseline(m, cfg);
  const Vector diff = x - base;
  Matrix sum = Matrix::Zero(m.layer_width(layer), m.num_inputs());
  Matrix jac;
  Vector grad;
  for (int k = 0; k < cfg.steps; ++k) {
    const Scalar alpha = (Scalar(k) + Scalar(0.5)) / Scalar(cfg.steps);
    internal::LayerDerivatives(m, layer, Vector(base + alpha * diff), &jac, &grad);
    sum += jac;
  }
  return (sum * diff.asDiagonal()) / Scalar(cfg.steps);
}

// feature_imp(w) = sum over neurons i of Cond[i] * IG[i][w].
template <typename Scalar>
typename Mlp<Scalar>::Vector LayerFeatureImportance(const Mlp<Scalar>& m, int layer,
                                                    const typename Mlp<Scalar>::Vector& x,
                                                    const AttributionConfig& cfg = {}) {
  const typename Mlp<Scalar>::Vector conductance =
      ConductanceByFeature(m, layer, x, cfg).rowwise().sum();
  return NeuronIntegratedGradients(m, layer, x, cfg).transpose() * conductance;
}

template <typename Scalar>
AttributionResult Attribute(const Mlp<Scalar>& m, int layer,
                            const typename Mlp<Scalar>::Vector& x,
                            const AttributionConfig& cfg = {}) {
  AttributionResult r;
  r.layer = layer;
  r.steps = cfg.steps;
  r.ig = IntegratedGradients(m, x, cfg).template cast<double>();
  const auto by_feature = ConductanceByFeature(m, layer, x, cfg);
  r.conductance = by_feature.rowwise().sum().template cast<double>();
  r.neuron_ig = NeuronIntegratedGradients(m, layer, x, cfg).template cast<double>();
  r.combined = r.neuron_ig.transpose() * r.conductance;
  const double delta = static_cast<double>(
      Forward(m, x) - Forward(m, typename Mlp<Scalar>::Vector(internal::Baseline(m, cfg))));
  r.completeness_gap = r.ig.sum() - delta;
  r.conservation_gap = r.conductance.sum() - delta;
  return r;
}

// Arithmetic mean of the per-row results over `ds` (features already in the
// model's input space).
template <typename Scalar>
AttributionResult DatasetAverageAttributions(const Mlp<Scalar>& m, int layer, const Dataset& ds,
                                             const AttributionConfig& cfg = {}) {
  CROWDSEED_CHECK(ds.rows() > 0, "cannot attribute an empty dataset");
  AttributionResult mean;
  for (int r = 0; r < ds.rows(); ++r) {
    const AttributionResult one = Attribute(
        m, layer, typename Mlp<Scalar>::Vector(ds.features.row(r).transpose().cast<Scalar>()),
        cfg);
    if (r == 0) {
      mean = one;
      continue;
    }
    mean.ig += one.ig;
    mean.conductance += one.conductance;
    mean.combined += one.combined;
    mean.neuron_ig += one.neuron_ig;
    mean.completeness_gap += one.completeness_gap;
    mean.conservation_gap += one.conservation_gap;
  }
  const double n = ds.rows();
  mean.ig /= n;
  mean.conductance /= n;
  mean.combined /= n;
  mean.neuron_ig /= n;
  mean.completeness_gap /= n;
  mean.conservation_gap /= n;
  return mean;
}

enum class AttributionTable { kIntegratedGradients, kConductance, kLayerImportance, kAll };

AttributionTable ParseAttributionTable(const std::string& name);

// Plot-ready CSV with columns entity,value,method,layer,steps. Feature rows
// are named after `feature_names`, neuron rows "neuron_<index>".
void WriteAttributionTable(const AttributionResult& result,
                           const std::vector<std::string>& feature_names,
                           AttributionTable which, const std::string& path);

}  // namespace crowdseed

#endif  // CROWDSEED_ATTRIBUTION_H_
