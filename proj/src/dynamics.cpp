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

#include "covertraj/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace covertraj {

namespace {

constexpr double kDuplicateModeTol = 1e-6;  // m, MaxL2

AgentState canonical_state(double speed) {
  AgentState s;
  s.heading = 0.5 * std::numbers::pi;
  s.speed = speed;
  return s;
}

}  // namespace

std::vector<ControlProfile> ControlGrid::profiles() const {
  std::vector<ControlProfile> out;
  out.reserve(size());
  for (double lat : lat_values) {
    for (double lon : lon_values) out.push_back({lat, lon});
  }
  return out;
}

void validate(const ControlGrid& grid) {
  if (grid.lat_values.empty() || grid.lon_values.empty()) {
    throw InvalidRange("control grid axes must be non-empty");
  }
  for (const auto* axis : {&grid.lat_values, &grid.lon_values}) {
    for (std::size_t i = 1; i < axis->size(); ++i) {
      if (!((*axis)[i] > (*axis)[i - 1])) {
        throw InvalidRange("control grid axes must be strictly increasing");
      }
    }
  }
  const auto& lat = grid.lat_values;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat[i] != -lat[lat.size() - 1 - i]) {
      throw InvalidRange("lateral acceleration values must be symmetric about 0");
    }
  }
}

ControlGrid default_control_grid() {
  return ControlGrid{{-6.0, -4.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 4.0, 6.0},
                     {-4.0, -2.0, -1.0, 0.0, 1.0, 2.0}};
}

void validate(const IntegrationConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw InvalidRange("integration dt must be positive");
  if (cfg.substeps < 1) throw InvalidRange("integration needs at least one substep");
  if (cfg.horizon_steps < 1) throw InvalidRange("horizon must be at least one step");
}

double lat_to_steer(double state_speed, double a_lat, const VehicleParams& params) {
  const double v_eff = std::max(state_speed, 1.0);
  const double curvature = a_lat / (v_eff * v_eff);
  return std::atan(curvature * params.wheelbase_b);
}

AgentState advance(const AgentState& state, const ControlProfile& profile,
                   const VehicleParams& params, double duration, int substeps) {
  const double h = duration / substeps;
  double x = state.x;
  double y = state.y;
  double theta = state.heading;
  double v = state.speed;
  for (int i = 0; i < substeps; ++i) {
    const double steer = lat_to_steer(v, profile.a_lat, params);
    const double dtheta = (v / params.wheelbase_b) * std::tan(steer);
    x += h * v * std::cos(theta);
    y += h * v * std::sin(theta);
    theta += h * dtheta;
    v = std::max(0.0, v + h * profile.a_lon);  // no reverse gear
  }
  AgentState out;
  out.x = x;
  out.y = y;
  out.heading = wrap_angle(theta);
  out.speed = v;
  out.accel = profile.a_lon;
  out.yaw_rate = (v / params.wheelbase_b) * std::tan(lat_to_steer(v, profile.a_lat, params));
  return out;
}

Trajectory integrate(const AgentState& s0, const ControlProfile& profile,
                     const VehicleParams& params, const IntegrationConfig& cfg) {
  validate(cfg);
  if (!(params.wheelbase_b > 0.0)) throw InvalidRange("wheelbase must be positive");
  if (s0.speed < 0.0) throw InvalidRange("initial speed must be non-negative");

  std::vector<Vec2> points;
  points.reserve(static_cast<std::size_t>(cfg.horizon_steps));
  AgentState state = s0;
  for (int step = 0; step < cfg.horizon_steps; ++step) {
    state = advance(state, profile, params, cfg.dt, cfg.substeps);
    points.push_back({state.x, state.y});
  }
  return Trajectory(std::move(points), cfg.dt);
}

TrajectorySet dynamic_set(const AgentState& s0, const ControlGrid& grid,
                          const VehicleParams& params, const IntegrationConfig& cfg) {
  validate(grid);
  TrajectorySet set;
  set.provenance = Provenance::Dynamic;
  for (const ControlProfile& profile : grid.profiles()) {
    Trajectory rollout = normalize_frame(integrate(s0, profile, params, cfg), s0);
    bool duplicate = false;
    for (const Trajectory& kept : set.modes) {
      if (distance(rollout, kept, DistanceKind::MaxL2) < kDuplicateModeTol) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    set.modes.push_back(std::move(rollout));
    set.profiles.push_back(profile);
  }
  return set;
}

ProfileCoverResult profile_cover(const TrajectoryCorpus& corpus, const ControlGrid& candidate_grid,
                                 const VehicleParams& params, const IntegrationConfig& cfg,
                                 const CoverConfig& config) {
  if (corpus.empty()) throw EmptyCorpus("cannot cover an empty corpus");
  if (!corpus.has_seed_states()) {
    throw MissingSeedStates("profile_cover needs per-sample seed states");
  }
  validate(candidate_grid);
  validate(cfg);
  if (!(config.epsilon > 0.0)) throw InvalidRange("epsilon must be positive");
  if (static_cast<std::size_t>(cfg.horizon_steps) != corpus.horizon_steps()) {
    throw LengthMismatch("integration horizon must match the corpus");
  }
  if (cfg.dt != corpus.dt()) throw RateMismatch("integration dt must match the corpus");

  const std::vector<ControlProfile> candidates = candidate_grid.profiles();
  const std::size_t num_profiles = candidates.size();
  const std::size_t n = corpus.size();

  // Corpus items live in their own agent frames, so a profile rolled out
  // from the canonical pose at the sample's speed is exactly the rollout
  // from the sample's seed state after normalization.
  std::vector<double> dist(num_profiles * n);
  for (std::size_t p = 0; p < num_profiles; ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      const Trajectory rollout =
          integrate(canonical_state(corpus.seed_states()[i].speed), candidates[p], params, cfg);
      dist[p * n + i] = distance(rollout, corpus[i], config.kind);
    }
  }

  const double eps = config.epsilon;
  std::vector<char> covered(n, 0);
  std::vector<std::size_t> count(num_profiles, 0);
  for (std::size_t p = 0; p < num_profiles; ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      if (dist[p * n + i] <= eps) ++count[p];
    }
  }

  ProfileCoverResult result;
  std::vector<std::size_t> chosen;
  while (true) {
    std::size_t best = 0;
    std::size_t best_count = 0;
    for (std::size_t p = 0; p < num_profiles; ++p) {
      if (count[p] > best_count) {
        best_count = count[p];
        best = p;
      }
    }
    if (best_count == 0) break;  // nothing reachable remains
    chosen.push_back(best);
    result.profiles.push_back(candidates[best]);
    for (std::size_t i = 0; i < n; ++i) {
      if (covered[i] || dist[best * n + i] > eps) continue;
      covered[i] = 1;
      for (std::size_t p = 0; p < num_profiles; ++p) {
        if (dist[p * n + i] <= eps) --count[p];
      }
    }
  }

  result.residuals.assign(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p : chosen) {
      result.residuals[i] = std::min(result.residuals[i], dist[p * n + i]);
    }
    if (!(result.residuals[i] <= eps)) result.uncovered.push_back(i);
  }
  return result;
}

TrajectorySet hybrid_set(const TrajectoryCorpus& corpus, const AgentState& s0,
                         const ControlGrid& candidate_grid, const VehicleParams& params,
                         const IntegrationConfig& cfg, const CoverConfig& config) {
  const ProfileCoverResult pc = profile_cover(corpus, candidate_grid, params, cfg, config);

  TrajectorySet set;
  set.provenance = Provenance::Hybrid;
  for (const ControlProfile& profile : pc.profiles) {
    Trajectory rollout = normalize_frame(integrate(s0, profile, params, cfg), s0);
    bool duplicate = false;
    for (const Trajectory& kept : set.modes) {
      if (distance(rollout, kept, DistanceKind::MaxL2) < kDuplicateModeTol) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    set.modes.push_back(std::move(rollout));
    set.profiles.push_back(profile);
  }

  if (!pc.uncovered.empty()) {
    std::vector<Trajectory> residual_items;
    residual_items.reserve(pc.uncovered.size());
    for (std::size_t idx : pc.uncovered) residual_items.push_back(corpus[idx]);

    // Full coverage of the residual is the point of the fixed part; never cap it.
    CoverConfig residual_config = config;
    residual_config.max_set_size.reset();
    const CoverResult fixed = greedy_cover(TrajectoryCorpus(std::move(residual_items)),
                                           residual_config);
    for (std::size_t k = 0; k < fixed.set.modes.size(); ++k) {
      const Trajectory& mode = fixed.set.modes[k];
      // Only exact duplicates may be dropped here: an exact twin keeps the
      // residual sample at distance zero, a merely-near twin would not.
      bool duplicate = false;
      for (const Trajectory& kept : set.modes) {
        if (mode == kept) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      set.modes.push_back(mode);
      set.source_indices.push_back(pc.uncovered[fixed.set.source_indices[k]]);
    }
  }
  return set;
}

}  // namespace covertraj
