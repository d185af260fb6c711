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

#include "covertraj/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace covertraj {

void validate(const PredictionResult& pred) {
  if (!pred.set || pred.set->modes.empty()) {
    throw EmptySet("prediction carries no modes");
  }
  if (pred.probs.size() != pred.set->modes.size()) {
    throw DimensionMismatch("one probability per mode required");
  }
  double sum = 0.0;
  for (double p : pred.probs) {
    if (!(p >= 0.0)) throw InvalidRange("mode probabilities must be non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw InvalidRange("mode probabilities must sum to 1, got " + std::to_string(sum));
  }
}

std::vector<std::size_t> rank_modes(std::span<const double> probs) {
  std::vector<std::size_t> order(probs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&probs](std::size_t a, std::size_t b) { return probs[a] > probs[b]; });
  return order;
}

namespace {

void check_k(std::size_t k, std::size_t num_modes) {
  if (k < 1 || k > num_modes) {
    throw KOutOfRange("k = " + std::to_string(k) + " outside [1, " +
                      std::to_string(num_modes) + "]");
  }
}

double min_distance_top_k(const PredictionResult& pred, const Trajectory& truth,
                          std::size_t k, DistanceKind kind) {
  const std::vector<std::size_t> order = rank_modes(pred.probs);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < k; ++r) {
    best = std::min(best, distance(truth, pred.set->modes[order[r]], kind));
  }
  return best;
}

}  // namespace

double min_ade(const PredictionResult& pred, const Trajectory& truth, std::size_t k) {
  validate(pred);
  check_k(k, pred.set->modes.size());
  return min_distance_top_k(pred, truth, k, DistanceKind::AvgL2);
}

double fde(const PredictionResult& pred, const Trajectory& truth) {
  validate(pred);
  const std::size_t top = rank_modes(pred.probs).front();
  const Trajectory& mode = pred.set->modes[top];
  if (mode.size() != truth.size()) throw LengthMismatch("trajectory lengths differ");
  return norm(truth.back() - mode.back());
}

int hit_indicator(const PredictionResult& pred, const Trajectory& truth, std::size_t k,
                  double d) {
  validate(pred);
  check_k(k, pred.set->modes.size());
  return min_distance_top_k(pred, truth, k, DistanceKind::MaxL2) <= d ? 1 : 0;
}

double hit_rate(std::span<const int> hits) {
  if (hits.empty()) throw EmptyRecords("hit_rate over zero instances");
  const double sum = std::accumulate(hits.begin(), hits.end(), 0.0);
  return sum / static_cast<double>(hits.size());
}

EvalRecord evaluate_instance(const PredictionResult& pred, const Trajectory& truth,
                             std::span<const std::size_t> ade_ks,
                             std::span<const std::size_t> hit_ks,
                             std::span<const double> hit_ds) {
  validate(pred);
  const std::size_t num_modes = pred.set->modes.size();
  EvalRecord record;
  for (std::size_t k : ade_ks) {
    record.min_ade[k] = min_ade(pred, truth, std::min(k, num_modes));
  }
  record.fde = fde(pred, truth);
  for (std::size_t k : hit_ks) {
    for (double d : hit_ds) {
      record.hits[{k, d}] = hit_indicator(pred, truth, std::min(k, num_modes), d);
    }
  }
  return record;
}

EvalTable evaluate_dataset(const Predictor& predictor, std::span<const Trajectory> truths,
                           std::span<const std::size_t> ade_ks,
                           std::span<const std::size_t> hit_ks,
                           std::span<const double> hit_ds) {
  if (truths.empty()) throw EmptyDataset("evaluate_dataset over zero instances");

  EvalTable table;
  table.num_instances = truths.size();
  std::map<std::pair<std::size_t, double>, double> hit_sums;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    EvalRecord record;
    try {
      record = evaluate_instance(predictor(i), truths[i], ade_ks, hit_ks, hit_ds);
    } catch (const Error& e) {
      throw DataError("instance " + std::to_string(i) + ": " + e.what());
    }
    for (const auto& [k, v] : record.min_ade) table.mean_min_ade[k] += v;
    table.mean_fde += record.fde;
    for (const auto& [key, h] : record.hits) hit_sums[key] += h;
  }

  const double n = static_cast<double>(truths.size());
  for (auto& [k, v] : table.mean_min_ade) v /= n;
  table.mean_fde /= n;
  for (const auto& [key, sum] : hit_sums) table.hit_rates[key] = sum / n;
  return table;
}

}  // namespace covertraj
