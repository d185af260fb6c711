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

#include "covertraj/trajectory.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>

namespace covertraj {

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(a + std::numbers::pi, two_pi);
  if (w < 0.0) w += two_pi;
  return w - std::numbers::pi;
}

const char* to_string(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::MaxL2:
      return "max";
    case DistanceKind::AvgL2:
      return "avg";
    case DistanceKind::RmsL2:
      return "rms";
  }
  return "?";
}

DistanceKind distance_kind_from_string(const std::string& name) {
  if (name == "max") return DistanceKind::MaxL2;
  if (name == "avg") return DistanceKind::AvgL2;
  if (name == "rms") return DistanceKind::RmsL2;
  throw InvalidRange("unknown distance kind: " + name);
}

Trajectory::Trajectory(std::vector<Vec2> points, double dt)
    : points_(std::move(points)), dt_(dt) {
  if (points_.empty()) throw InvalidRange("trajectory needs at least one point");
  if (!(dt_ > 0.0)) throw InvalidRange("trajectory dt must be positive");
}

TrajectoryCorpus::TrajectoryCorpus(std::vector<Trajectory> items,
                                   std::vector<AgentState> seed_states)
    : items_(std::move(items)), seed_states_(std::move(seed_states)) {
  if (!items_.empty()) {
    const std::size_t n = items_.front().size();
    const double dt = items_.front().dt();
    for (const Trajectory& t : items_) {
      if (t.size() != n) throw LengthMismatch("corpus items must share one horizon");
      if (t.dt() != dt) throw RateMismatch("corpus items must share one dt");
    }
  }
  if (!seed_states_.empty() && seed_states_.size() != items_.size()) {
    throw LengthMismatch("seed_states must parallel corpus items");
  }
}

std::size_t TrajectoryCorpus::horizon_steps() const {
  if (items_.empty()) throw EmptyCorpus("horizon of an empty corpus");
  return items_.front().size();
}

double TrajectoryCorpus::dt() const {
  if (items_.empty()) throw EmptyCorpus("dt of an empty corpus");
  return items_.front().dt();
}

Trajectory normalize_frame(const Trajectory& raw, const AgentState& origin) {
  const double rot = 0.5 * std::numbers::pi - origin.heading;
  const double c = std::cos(rot);
  const double s = std::sin(rot);
  std::vector<Vec2> out;
  out.reserve(raw.size());
  for (const Vec2& p : raw.points()) {
    const double tx = p.x - origin.x;
    const double ty = p.y - origin.y;
    out.push_back({c * tx - s * ty, s * tx + c * ty});
  }
  return Trajectory(std::move(out), raw.dt());
}

double distance(const Trajectory& a, const Trajectory& b, DistanceKind kind) {
  if (a.size() != b.size()) throw LengthMismatch("trajectory lengths differ");
  if (a.dt() != b.dt()) throw RateMismatch("trajectory sampling intervals differ");

  const std::size_t n = a.size();
  switch (kind) {
    case DistanceKind::MaxL2: {
      double worst_sq = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        worst_sq = std::max(worst_sq, squared_norm(a[i] - b[i]));
      }
      return std::sqrt(worst_sq);
    }
    case DistanceKind::AvgL2: {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += norm(a[i] - b[i]);
      return sum / static_cast<double>(n);
    }
    case DistanceKind::RmsL2: {
      double sum_sq = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum_sq += squared_norm(a[i] - b[i]);
      return std::sqrt(sum_sq / static_cast<double>(n));
    }
  }
  return 0.0;  // unreachable
}

std::size_t closest_index(const Trajectory& target,
                          std::span<const Trajectory> candidates,
                          DistanceKind kind) {
  if (candidates.empty()) throw EmptySet("closest_index over an empty set");
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double d = distance(target, candidates[i], kind);
    if (d < best_dist) {
      best_dist = d;
      best = i;
    }
  }
  return best;
}

}  // namespace covertraj
