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

#include <vector>

#include "covertraj/cover.hpp"
#include "covertraj/trajectory.hpp"

namespace covertraj {

struct VehicleParams {
  double wheelbase_b{3.0};  // m, > 0
};

/// Cartesian grid of candidate control profiles. Lateral values must be
/// strictly increasing and symmetric about zero, longitudinal values
/// strictly increasing.
struct ControlGrid {
  std::vector<double> lat_values;
  std::vector<double> lon_values;

  [[nodiscard]] std::size_t size() const noexcept {
    return lat_values.size() * lon_values.size();
  }
  /// Profiles in grid order: lateral outer, longitudinal inner.
  [[nodiscard]] std::vector<ControlProfile> profiles() const;
};

void validate(const ControlGrid& grid);
ControlGrid default_control_grid();

struct IntegrationConfig {
  double dt{0.5};         // s, output sampling interval
  int substeps{10};       // Euler substeps per output sample, >= 1
  int horizon_steps{12};  // N, >= 1
};

void validate(const IntegrationConfig& cfg);

/// Steering angle realizing lateral acceleration a_lat at the given speed,
/// assuming instantaneous circular motion a_lat = v^2 * kappa with
/// kappa = tan(u_steer) / b. Speeds below 1 m/s are clamped to 1 to keep the
/// conversion well defined near standstill.
double lat_to_steer(double state_speed, double a_lat, const VehicleParams& params);

/// Advance a state by `duration` seconds of constant-profile driving using
/// explicit Euler with the given number of substeps. Steering is recomputed
/// from a_lat at every substep as speed changes; speed is clamped at zero.
AgentState advance(const AgentState& state, const ControlProfile& profile,
                   const VehicleParams& params, double duration, int substeps);

/// World-frame rollout of a constant control profile: N output points, one
/// per cfg.dt, excluding the initial position.
Trajectory integrate(const AgentState& s0, const ControlProfile& profile,
                     const VehicleParams& params, const IntegrationConfig& cfg);

/// Dynamically feasible trajectory set: every grid profile rolled out from
/// s0 and normalized to its agent frame. Rollouts closer than 1e-6 m MaxL2
/// to an earlier one are dropped as duplicates.
TrajectorySet dynamic_set(const AgentState& s0, const ControlGrid& grid,
                          const VehicleParams& params, const IntegrationConfig& cfg);

struct ProfileCoverResult {
  std::vector<ControlProfile> profiles;
  /// Corpus indices no chosen profile covers.
  std::vector<std::size_t> uncovered;
  /// Per-sample distance to the nearest chosen profile's rollout from that
  /// sample's own seed state (infinity where no profile was chosen).
  std::vector<double> residuals;
};

/// Greedy cover of a corpus by control profiles: profile p covers sample i
/// when p rolled out from sample i's seed state stays within epsilon of the
/// sample. Stops once no candidate profile covers any remaining sample, so
/// full coverage is not guaranteed.
ProfileCoverResult profile_cover(const TrajectoryCorpus& corpus, const ControlGrid& candidate_grid,
                                 const VehicleParams& params, const IntegrationConfig& cfg,
                                 const CoverConfig& config);

/// Hybrid set: control profiles chosen by profile_cover, materialized from
/// s0, plus a fixed greedy cover of the samples the profiles missed. Every
/// corpus element is within epsilon of its own-state rollout of a chosen
/// profile or of a fixed mode.
TrajectorySet hybrid_set(const TrajectoryCorpus& corpus, const AgentState& s0,
                         const ControlGrid& candidate_grid, const VehicleParams& params,
                         const IntegrationConfig& cfg, const CoverConfig& config);

}  // namespace covertraj
