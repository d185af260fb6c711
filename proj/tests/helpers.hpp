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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "covertraj/rng.hpp"
#include "covertraj/trajectory.hpp"

namespace covertraj::testing {

/// Straight line from the origin: points (k+1)*dt*speed along `heading`.
inline Trajectory straight_line(double speed, double heading, std::size_t steps, double dt) {
  std::vector<Vec2> points;
  points.reserve(steps);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double s = static_cast<double>(k) * dt * speed;
    points.push_back({s * std::cos(heading), s * std::sin(heading)});
  }
  return Trajectory(std::move(points), dt);
}

/// Jittered straight line; with jitter > 0 no two draws collide.
inline Trajectory random_trajectory(Rng& rng, std::size_t steps = 4, double dt = 0.5,
                                    double jitter = 0.3) {
  const double heading = rng.uniform(-std::numbers::pi, std::numbers::pi);
  const double speed = rng.uniform(0.0, 10.0);
  std::vector<Vec2> points;
  points.reserve(steps);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double s = static_cast<double>(k) * dt * speed;
    points.push_back({s * std::cos(heading) + rng.normal(0.0, jitter),
                      s * std::sin(heading) + rng.normal(0.0, jitter)});
  }
  return Trajectory(std::move(points), dt);
}

inline TrajectoryCorpus random_corpus(Rng& rng, std::size_t n, std::size_t steps = 4,
                                      double dt = 0.5) {
  std::vector<Trajectory> items;
  items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) items.push_back(random_trajectory(rng, steps, dt));
  return TrajectoryCorpus(std::move(items));
}

/// Epsilon at roughly the q-quantile of the pairwise distances, so random
/// cover instances are neither trivial nor degenerate.
inline double epsilon_quantile(const TrajectoryCorpus& corpus, DistanceKind kind, double q) {
  std::vector<double> dists;
  for (std::size_t a = 0; a < corpus.size(); ++a) {
    for (std::size_t b = a + 1; b < corpus.size(); ++b) {
      dists.push_back(distance(corpus[a], corpus[b], kind));
    }
  }
  std::sort(dists.begin(), dists.end());
  const std::size_t idx = static_cast<std::size_t>(q * static_cast<double>(dists.size() - 1));
  return std::max(dists[idx], 1e-6);
}

inline AgentState random_state(Rng& rng) {
  AgentState s;
  s.x = rng.uniform(-50.0, 50.0);
  s.y = rng.uniform(-50.0, 50.0);
  s.heading = rng.uniform(-std::numbers::pi, std::numbers::pi);
  s.speed = rng.uniform(0.0, 14.0);
  s.accel = rng.uniform(-3.0, 3.0);
  s.yaw_rate = rng.uniform(-0.6, 0.6);
  return s;
}

}  // namespace covertraj::testing
