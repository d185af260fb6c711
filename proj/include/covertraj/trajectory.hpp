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

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "covertraj/errors.hpp"

namespace covertraj {

struct Vec2 {
  double x{0.0};
  double y{0.0};

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline double squared_norm(Vec2 v) { return v.x * v.x + v.y * v.y; }
inline double norm(Vec2 v) { return std::sqrt(squared_norm(v)); }

/// Wrap an angle to [-pi, pi).
double wrap_angle(double a);

/// Instantaneous kinematic state of an agent. Heading follows the
/// mathematical convention: radians, counter-clockwise positive, 0 along +x.
struct AgentState {
  double x{0.0};         // m
  double y{0.0};         // m
  double heading{0.0};   // rad, in [-pi, pi)
  double speed{0.0};     // m/s, non-negative
  double accel{0.0};     // m/s^2, signed longitudinal
  double yaw_rate{0.0};  // rad/s, signed
};

/// Constant control template: lateral and longitudinal acceleration held
/// over the whole prediction horizon.
struct ControlProfile {
  double a_lat{0.0};  // m/s^2
  double a_lon{0.0};  // m/s^2

  friend bool operator==(const ControlProfile&, const ControlProfile&) = default;
};

/// Point-wise trajectory distance variants.
enum class DistanceKind { MaxL2, AvgL2, RmsL2 };

const char* to_string(DistanceKind kind);
DistanceKind distance_kind_from_string(const std::string& name);

/// Uniformly sampled sequence of 2-D positions. The points are the N future
/// positions only; the pose the trajectory was emitted from is not stored.
class Trajectory {
 public:
  Trajectory(std::vector<Vec2> points, double dt);

  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] double dt() const noexcept { return dt_; }
  [[nodiscard]] std::span<const Vec2> points() const noexcept { return points_; }
  [[nodiscard]] const Vec2& operator[](std::size_t i) const noexcept { return points_[i]; }
  [[nodiscard]] const Vec2& back() const noexcept { return points_.back(); }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  std::vector<Vec2> points_;
  double dt_;
};

/// A pool of trajectories sharing one horizon and sampling rate, optionally
/// paired with the initial state each sample was observed from.
class TrajectoryCorpus {
 public:
  TrajectoryCorpus() = default;
  explicit TrajectoryCorpus(std::vector<Trajectory> items,
                            std::vector<AgentState> seed_states = {});

  [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
  [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
  [[nodiscard]] std::span<const Trajectory> items() const noexcept { return items_; }
  [[nodiscard]] const Trajectory& operator[](std::size_t i) const noexcept { return items_[i]; }

  [[nodiscard]] bool has_seed_states() const noexcept { return !seed_states_.empty(); }
  [[nodiscard]] std::span<const AgentState> seed_states() const noexcept { return seed_states_; }

  /// Number of future steps per item. Corpus must be non-empty.
  [[nodiscard]] std::size_t horizon_steps() const;
  /// Shared sampling interval. Corpus must be non-empty.
  [[nodiscard]] double dt() const;

 private:
  std::vector<Trajectory> items_;
  std::vector<AgentState> seed_states_;
};

/// Rigid transform of a world-frame trajectory into the agent frame of
/// `origin`: the origin pose maps to (0, 0) and its heading to the +y axis
/// (translate by (-x, -y), then rotate by pi/2 - heading).
Trajectory normalize_frame(const Trajectory& raw, const AgentState& origin);

/// Point-wise L2 distance between two equal-length, equal-rate trajectories.
/// MaxL2 takes the maximum point-wise norm, AvgL2 the mean, RmsL2 the root
/// of the mean square.
double distance(const Trajectory& a, const Trajectory& b, DistanceKind kind);

/// Index of the candidate minimizing distance to `target`; ties go to the
/// smallest index.
std::size_t closest_index(const Trajectory& target,
                          std::span<const Trajectory> candidates,
                          DistanceKind kind);

}  // namespace covertraj
