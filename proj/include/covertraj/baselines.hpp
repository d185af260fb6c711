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

#include <array>

#include "covertraj/dynamics.hpp"
#include "covertraj/trajectory.hpp"

namespace covertraj {

/// Classic single-mode extrapolation models built from the track's current
/// speed, acceleration, and yaw rate.
enum class PhysicsModelKind {
  ConstVelYaw,
  ConstVelYawRate,
  ConstAccelYaw,
  ConstAccelYawRate,
};

inline constexpr std::array<PhysicsModelKind, 4> kAllPhysicsModels{
    PhysicsModelKind::ConstVelYaw,
    PhysicsModelKind::ConstVelYawRate,
    PhysicsModelKind::ConstAccelYaw,
    PhysicsModelKind::ConstAccelYawRate,
};

const char* to_string(PhysicsModelKind kind);

/// Extrapolate s0 under the given model, agent frame output. Uses the same
/// substep Euler scheme as integrate(); decelerating models clamp speed at
/// zero.
Trajectory physics_rollout(const AgentState& s0, PhysicsModelKind kind,
                           const IntegrationConfig& cfg);

struct OracleResult {
  PhysicsModelKind best_kind;
  double error;  // m, AvgL2 of the best model
};

/// Best of the four physics models against the ground truth under AvgL2;
/// ties go to enumeration order.
OracleResult physics_oracle(const AgentState& s0, const Trajectory& ground_truth,
                            const IntegrationConfig& cfg);

}  // namespace covertraj
