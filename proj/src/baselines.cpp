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

#include "covertraj/baselines.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace covertraj {

const char* to_string(PhysicsModelKind kind) {
  switch (kind) {
    case PhysicsModelKind::ConstVelYaw:
      return "const_vel_yaw";
    case PhysicsModelKind::ConstVelYawRate:
      return "const_vel_yaw_rate";
    case PhysicsModelKind::ConstAccelYaw:
      return "const_accel_yaw";
    case PhysicsModelKind::ConstAccelYawRate:
      return "const_accel_yaw_rate";
  }
  return "?";
}

Trajectory physics_rollout(const AgentState& s0, PhysicsModelKind kind,
                           const IntegrationConfig& cfg) {
  validate(cfg);
  if (s0.speed < 0.0) throw InvalidRange("initial speed must be non-negative");

  const bool use_accel = kind == PhysicsModelKind::ConstAccelYaw ||
                         kind == PhysicsModelKind::ConstAccelYawRate;
  const bool use_yaw_rate = kind == PhysicsModelKind::ConstVelYawRate ||
                            kind == PhysicsModelKind::ConstAccelYawRate;
  const double accel = use_accel ? s0.accel : 0.0;
  const double yaw_rate = use_yaw_rate ? s0.yaw_rate : 0.0;

  const double h = cfg.dt / cfg.substeps;
  double x = s0.x;
  double y = s0.y;
  double theta = s0.heading;
  double v = s0.speed;
  std::vector<Vec2> points;
  points.reserve(static_cast<std::size_t>(cfg.horizon_steps));
  for (int step = 0; step < cfg.horizon_steps; ++step) {
    for (int i = 0; i < cfg.substeps; ++i) {
      x += h * v * std::cos(theta);
      y += h * v * std::sin(theta);
      theta += h * yaw_rate;
      v = std::max(0.0, v + h * accel);
    }
    points.push_back({x, y});
  }
  return normalize_frame(Trajectory(std::move(points), cfg.dt), s0);
}

OracleResult physics_oracle(const AgentState& s0, const Trajectory& ground_truth,
                            const IntegrationConfig& cfg) {
  if (ground_truth.size() != static_cast<std::size_t>(cfg.horizon_steps)) {
    throw LengthMismatch("ground truth length must match the horizon");
  }
  OracleResult best{PhysicsModelKind::ConstVelYaw,
                    std::numeric_limits<double>::infinity()};
  for (PhysicsModelKind kind : kAllPhysicsModels) {
    const double err =
        distance(ground_truth, physics_rollout(s0, kind, cfg), DistanceKind::AvgL2);
    if (err < best.error) {
      best.error = err;
      best.best_kind = kind;
    }
  }
  return best;
}

}  // namespace covertraj
