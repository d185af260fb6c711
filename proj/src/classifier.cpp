// Copyright 2026 The covertraj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "covertraj/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "covertraj/rng.hpp"

namespace covertraj {

FeatureVector state_features(const AgentState& state) {
  return {state.speed, state.accel, state.yaw_rate, 1.0};
}

SoftmaxModel::SoftmaxModel(std::shared_ptr<const TrajectorySet> set, std::size_t feature_dim)
    : set_(std::move(set)), feature_dim_(feature_dim) {
  if (!set_ || set_->modes.empty()) throw EmptySet("model needs a non-empty trajectory set");
  if (feature_dim_ < 1) throw InvalidRange("feature dimension must be positive");
  weights_.assign(set_->modes.size() * feature_dim_, 0.0);
}

SoftmaxModel::SoftmaxModel(std::shared_ptr<const TrajectorySet> set, std::size_t feature_dim,
                           std::vector<double> weights)
    : SoftmaxModel(std::move(set), feature_dim) {
  if (weights.size() != weights_.size()) {
    throw DimensionMismatch("expected " + std::to_string(weights_.size()) +
                            " weights, got " + std::to_string(weights.size()));
  }
  weights_ = std::move(weights);
}

std::vector<double> SoftmaxModel::logits(const FeatureVector& features) const {
  if (features.size() != feature_dim_) {
    throw DimensionMismatch("feature length " + std::to_string(features.size()) +
                            " does not match model dimension " + std::to_string(feature_dim_));
  }
  std::vector<double> z(num_modes(), 0.0);
  for (std::size_t m = 0; m < num_modes(); ++m) {
    double acc = 0.0;
    for (std::size_t j = 0; j < feature_dim_; ++j) acc += weights_[m * feature_dim_ + j] * features[j];
    z[m] = acc;
  }
  return z;
}

std::vector<double> softmax(std::span<const double> logits) {
  const double top = *std::max_element(logits.begin(), logits.end());
  std::vector<double> p(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - top);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return p;
}

PredictionResult predict(const SoftmaxModel& model, const FeatureVector& features) {
  return PredictionResult{model.set(), softmax(model.logits(features))};
}

std::size_t label(const Trajectory& truth, const TrajectorySet& set) {
  return closest_index(truth, set.modes, DistanceKind::AvgL2);
}

namespace {

// Cross-entropy via log-sum-exp, avoiding log(0) for saturated logits.
double cross_entropy(std::span<const double> logits, std::size_t target) {
  const double top = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double z : logits) sum += std::exp(z - top);
  return std::log(sum) + top - logits[target];
}

}  // namespace

double mean_cross_entropy(const SoftmaxModel& model, std::span<const FeatureVector> features,
                          std::span<const std::size_t> labels) {
  double total = 0.0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    total += cross_entropy(model.logits(features[i]), labels[i]);
  }
  return total / static_cast<double>(features.size());
}

TrainResult train(std::span<const FeatureVector> features, std::span<const Trajectory> truths,
                  std::shared_ptr<const TrajectorySet> set, const TrainConfig& config) {
  if (features.empty()) throw EmptyDataset("training needs at least one example");
  if (features.size() != truths.size()) {
    throw LengthMismatch("features and ground truths must be parallel");
  }
  if (!(config.lr > 0.0)) throw InvalidRange("learning rate must be positive");
  if (config.batch_size < 1) throw InvalidRange("batch size must be positive");

  const std::size_t dim = features.front().size();
  for (const FeatureVector& f : features) {
    if (f.size() != dim) throw DimensionMismatch("inconsistent feature lengths");
  }

  SoftmaxModel model(std::move(set), dim);
  const std::size_t num_modes = model.num_modes();

  std::vector<std::size_t> labels(features.size());
  for (std::size_t i = 0; i < truths.size(); ++i) labels[i] = label(truths[i], *model.set());

  TrainResult result{model, {}};
  result.loss_curve.reserve(config.epochs + 1);
  result.loss_curve.push_back(mean_cross_entropy(result.model, features, labels));

  std::vector<std::size_t> order(features.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> grad(num_modes * dim);

  Rng rng(config.rng_seed);
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    // Fisher-Yates with the pinned generator
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.below(i)]);
    }
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t end = std::min(start + config.batch_size, order.size());
      std::fill(grad.begin(), grad.end(), 0.0);
      for (std::size_t b = start; b < end; ++b) {
        const std::size_t i = order[b];
        const std::vector<double> p = softmax(result.model.logits(features[i]));
        for (std::size_t m = 0; m < num_modes; ++m) {
          const double coeff = p[m] - (m == labels[i] ? 1.0 : 0.0);
          for (std::size_t j = 0; j < dim; ++j) grad[m * dim + j] += coeff * features[i][j];
        }
      }
      const double scale = config.lr / static_cast<double>(end - start);
      for (std::size_t m = 0; m < num_modes; ++m) {
        for (std::size_t j = 0; j < dim; ++j) {
          result.model.set_weight(m, j, result.model.weight(m, j) - scale * grad[m * dim + j]);
        }
      }
    }
    result.loss_curve.push_back(mean_cross_entropy(result.model, features, labels));
  }
  return result;
}

double gradient_check(const SoftmaxModel& model, const FeatureVector& features,
                      std::size_t target) {
  if (target >= model.num_modes()) throw KOutOfRange("label outside the mode range");
  const std::vector<double> p = softmax(model.logits(features));

  constexpr double h = 1e-5;
  // below this magnitude a relative comparison just amplifies rounding noise
  constexpr double kRelativeFloor = 1e-4;
  SoftmaxModel probe = model;
  double worst = 0.0;
  for (std::size_t m = 0; m < model.num_modes(); ++m) {
    for (std::size_t j = 0; j < model.feature_dim(); ++j) {
      const double analytic = (p[m] - (m == target ? 1.0 : 0.0)) * features[j];
      const double w = model.weight(m, j);
      probe.set_weight(m, j, w + h);
      const double up = cross_entropy(probe.logits(features), target);
      probe.set_weight(m, j, w - h);
      const double down = cross_entropy(probe.logits(features), target);
      probe.set_weight(m, j, w);
      const double numeric = (up - down) / (2.0 * h);

      const double magnitude = std::max(std::abs(analytic), std::abs(numeric));
      const double diff = std::abs(analytic - numeric);
      worst = std::max(worst, magnitude >= kRelativeFloor ? diff / magnitude : diff);
    }
  }
  return worst;
}

}  // namespace covertraj
