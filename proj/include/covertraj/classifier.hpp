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

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "covertraj/cover.hpp"
#include "covertraj/metrics.hpp"
#include "covertraj/trajectory.hpp"

namespace covertraj {

using FeatureVector = std::vector<double>;

/// Default agent-state features: speed, longitudinal acceleration, yaw
/// rate, and a constant bias term.
FeatureVector state_features(const AgentState& state);

/// Linear softmax head over a trajectory set: one logit row per mode.
class SoftmaxModel {
 public:
  /// Zero-weight model: predicts the uniform distribution.
  SoftmaxModel(std::shared_ptr<const TrajectorySet> set, std::size_t feature_dim);
  /// Model with explicit weights, row-major (num_modes x feature_dim).
  SoftmaxModel(std::shared_ptr<const TrajectorySet> set, std::size_t feature_dim,
               std::vector<double> weights);

  [[nodiscard]] std::size_t num_modes() const noexcept { return set_->modes.size(); }
  [[nodiscard]] std::size_t feature_dim() const noexcept { return feature_dim_; }
  [[nodiscard]] const std::shared_ptr<const TrajectorySet>& set() const noexcept { return set_; }
  [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }

  [[nodiscard]] double weight(std::size_t mode, std::size_t feature) const {
    return weights_[mode * feature_dim_ + feature];
  }
  void set_weight(std::size_t mode, std::size_t feature, double value) {
    weights_[mode * feature_dim_ + feature] = value;
  }

  /// W * x. Throws DimensionMismatch on a wrong feature length.
  [[nodiscard]] std::vector<double> logits(const FeatureVector& features) const;

 private:
  std::shared_ptr<const TrajectorySet> set_;
  std::size_t feature_dim_;
  std::vector<double> weights_;
};

/// Numerically stable softmax (max logit subtracted before exponentiation).
std::vector<double> softmax(std::span<const double> logits);

/// Probabilities over the model's modes for one feature vector.
PredictionResult predict(const SoftmaxModel& model, const FeatureVector& features);

/// Training label for a ground-truth trajectory: the AvgL2-closest mode.
std::size_t label(const Trajectory& truth, const TrajectorySet& set);

/// Mean cross-entropy of the model on a labeled dataset.
double mean_cross_entropy(const SoftmaxModel& model, std::span<const FeatureVector> features,
                          std::span<const std::size_t> labels);

struct TrainConfig {
  std::size_t epochs{50};
  double lr{1e-2};
  std::uint64_t rng_seed{0};
  std::size_t batch_size{32};
};

struct TrainResult {
  SoftmaxModel model;
  /// Mean cross-entropy on the full dataset: entry 0 before training, then
  /// one entry per epoch.
  std::vector<double> loss_curve;
};

/// Mini-batch gradient descent on cross-entropy against nearest-mode labels,
/// starting from zero weights. Deterministic for a given seed.
TrainResult train(std::span<const FeatureVector> features, std::span<const Trajectory> truths,
                  std::shared_ptr<const TrajectorySet> set, const TrainConfig& config);

/// Max discrepancy between the analytic cross-entropy gradient and central
/// finite differences (step 1e-5); relative where the gradient is
/// meaningfully large, absolute otherwise.
double gradient_check(const SoftmaxModel& model, const FeatureVector& features,
                      std::size_t label);

}  // namespace covertraj
