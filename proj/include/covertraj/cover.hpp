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
#include <optional>
#include <vector>

#include "covertraj/trajectory.hpp"

namespace covertraj {

/// How a trajectory set was built.
enum class Provenance { Fixed, Dynamic, Hybrid };

const char* to_string(Provenance p);
Provenance provenance_from_string(const std::string& name);

struct CoverConfig {
  double epsilon{2.0};                        // m, > 0
  DistanceKind kind{DistanceKind::MaxL2};     // coverage metric
  std::optional<std::size_t> max_set_size{};  // optional cap on cover growth
};

/// An ordered set of candidate future trajectories (the label space a
/// classifier scores over). All modes share one horizon and dt and live in
/// the agent frame.
///
/// `profiles` is non-empty only for Dynamic/Hybrid sets and parallels the
/// dynamic modes, which occupy the front of `modes`. `source_indices` is
/// non-empty only for covers drawn from a corpus and parallels the fixed
/// modes (the tail of `modes` for Hybrid sets).
struct TrajectorySet {
  std::vector<Trajectory> modes;
  Provenance provenance{Provenance::Fixed};
  std::vector<ControlProfile> profiles;
  std::vector<std::size_t> source_indices;

  [[nodiscard]] std::size_t size() const noexcept { return modes.size(); }
  [[nodiscard]] std::size_t num_dynamic_modes() const noexcept { return profiles.size(); }
};

/// Per-element distances from a corpus to its nearest set mode.
struct CoverageReport {
  double fraction_covered{0.0};  // share of residuals <= epsilon
  double max_residual{0.0};      // m
  std::vector<double> residuals;
};

struct CoverResult {
  TrajectorySet set;
  /// False when max_set_size stopped the greedy loop before full coverage.
  bool complete{true};
};

/// Greedy bagging cover: repeatedly pick, among the not-yet-covered corpus
/// elements, the one whose epsilon-ball covers the most uncovered elements
/// (ties to the smallest corpus index) until everything is covered or the
/// cap binds. Exact duplicates in the corpus are collapsed first.
CoverResult greedy_cover(const TrajectoryCorpus& corpus, const CoverConfig& config);

/// Randomized bagging: each step samples the next element with probability
/// proportional to how many uncovered elements it covers. Runs `trials`
/// independent bags and keeps the smallest (ties to the earliest trial).
/// Deterministic for a given seed.
CoverResult random_cover(const TrajectoryCorpus& corpus, const CoverConfig& config,
                         std::size_t trials, std::uint64_t rng_seed);

/// Minimum-cardinality cover by exhaustive subset search, smallest index set
/// among optima. Guarded to corpora of at most 20 elements.
TrajectorySet brute_force_cover(const TrajectoryCorpus& corpus, const CoverConfig& config);

CoverageReport coverage_report(const TrajectorySet& set, const TrajectoryCorpus& corpus,
                               const CoverConfig& config);

}  // namespace covertraj
