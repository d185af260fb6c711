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

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "covertraj/cover.hpp"
#include "covertraj/trajectory.hpp"

namespace covertraj {

/// A trajectory set with one probability per mode.
struct PredictionResult {
  std::shared_ptr<const TrajectorySet> set;
  std::vector<double> probs;
};

/// Throws unless probs parallels the modes, is non-negative, and sums to 1
/// within 1e-6.
void validate(const PredictionResult& pred);

/// Mode indices by descending probability; ties go to the smaller index.
std::vector<std::size_t> rank_modes(std::span<const double> probs);

/// Minimum AvgL2 to the truth over the k most likely modes.
double min_ade(const PredictionResult& pred, const Trajectory& truth, std::size_t k);

/// Final-point displacement of the single most likely mode.
double fde(const PredictionResult& pred, const Trajectory& truth);

/// 1 when the best of the k most likely modes stays within d of the truth
/// at every step (MaxL2), else 0.
int hit_indicator(const PredictionResult& pred, const Trajectory& truth, std::size_t k,
                  double d);

/// Mean of per-instance hit indicators.
double hit_rate(std::span<const int> hits);

/// Per-instance metric values. minADE is keyed by the requested k, clamped
/// to the mode count when the set is smaller (single-mode baselines report
/// the same value in every column).
struct EvalRecord {
  std::map<std::size_t, double> min_ade;
  double fde{0.0};
  std::map<std::pair<std::size_t, double>, int> hits;  // keyed by (k, d)
};

EvalRecord evaluate_instance(const PredictionResult& pred, const Trajectory& truth,
                             std::span<const std::size_t> ade_ks,
                             std::span<const std::size_t> hit_ks,
                             std::span<const double> hit_ds);

/// Unweighted means over instances.
struct EvalTable {
  std::map<std::size_t, double> mean_min_ade;
  double mean_fde{0.0};
  std::map<std::pair<std::size_t, double>, double> hit_rates;
  std::size_t num_instances{0};
};

using Predictor = std::function<PredictionResult(std::size_t instance)>;

EvalTable evaluate_dataset(const Predictor& predictor, std::span<const Trajectory> truths,
                           std::span<const std::size_t> ade_ks,
                           std::span<const std::size_t> hit_ks,
                           std::span<const double> hit_ds);

}  // namespace covertraj
