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

#include <cmath>
#include <numbers>
#include <vector>

#include "covertraj/trajectory.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace covertraj;
using covertraj::testing::random_trajectory;

namespace {
constexpr double kPi = std::numbers::pi;

Trajectory make(std::vector<Vec2> pts, double dt = 1.0) {
  return Trajectory(std::move(pts), dt);
}
}  // namespace

TEST_CASE("distance: identical trajectories are at zero for every kind") {
  const Trajectory a = make({{1.0, 2.0}, {3.0, 4.0}});
  for (DistanceKind kind : {DistanceKind::MaxL2, DistanceKind::AvgL2, DistanceKind::RmsL2}) {
    CHECK(distance(a, a, kind) == 0.0);
  }
}

TEST_CASE("distance: hand-computed point-wise values") {
  // point-wise norms 1, 1, sqrt(2)
  const Trajectory a = make({{0.0, 0.0}, {0.0, 1.0}, {0.0, 2.0}});
  const Trajectory b = make({{1.0, 0.0}, {1.0, 1.0}, {1.0, 1.0}});
  CHECK(distance(a, b, DistanceKind::MaxL2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(distance(a, b, DistanceKind::AvgL2) ==
        doctest::Approx((2.0 + std::sqrt(2.0)) / 3.0).epsilon(1e-12));
  CHECK(distance(a, b, DistanceKind::RmsL2) ==
        doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("distance: power-mean ordering MaxL2 >= RmsL2 >= AvgL2") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Trajectory a = random_trajectory(rng, 6);
    const Trajectory b = random_trajectory(rng, 6);
    const double mx = distance(a, b, DistanceKind::MaxL2);
    const double avg = distance(a, b, DistanceKind::AvgL2);
    const double rms = distance(a, b, DistanceKind::RmsL2);
    CHECK(rms >= avg - 1e-12);
    CHECK(mx >= rms - 1e-12);
  }
}

TEST_CASE("distance: symmetry, positivity, and the triangle inequality") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Trajectory a = random_trajectory(rng, 5);
    const Trajectory b = random_trajectory(rng, 5);
    const Trajectory c = random_trajectory(rng, 5);
    for (DistanceKind kind :
         {DistanceKind::MaxL2, DistanceKind::AvgL2, DistanceKind::RmsL2}) {
      const double ab = distance(a, b, kind);
      CHECK(ab == distance(b, a, kind));
      CHECK(ab > 0.0);  // jittered draws never coincide
      CHECK(ab <= distance(a, c, kind) + distance(c, b, kind) + 1e-9);
    }
  }
}

TEST_CASE("distance: mismatched inputs are rejected") {
  const Trajectory a = make({{0.0, 0.0}, {1.0, 0.0}});
  const Trajectory short_b = make({{0.0, 0.0}});
  const Trajectory slow_b = Trajectory({{0.0, 0.0}, {1.0, 0.0}}, 0.5);
  CHECK_THROWS_AS(distance(a, short_b, DistanceKind::MaxL2), LengthMismatch);
  CHECK_THROWS_AS(distance(a, slow_b, DistanceKind::MaxL2), RateMismatch);
}

TEST_CASE("normalize_frame: identity when already at origin heading up") {
  const Trajectory t = make({{0.0, 1.0}, {0.5, 2.0}});
  const AgentState origin{0.0, 0.0, kPi / 2.0, 5.0, 0.0, 0.0};
  const Trajectory n = normalize_frame(t, origin);
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(n[i].x == doctest::Approx(t[i].x).epsilon(1e-12));
    CHECK(n[i].y == doctest::Approx(t[i].y).epsilon(1e-12));
  }
}

TEST_CASE("normalize_frame: translates the origin pose to (0,0)") {
  const Trajectory t = make({{3.0, 4.0}});
  const AgentState origin{3.0, 4.0, kPi / 2.0, 0.0, 0.0, 0.0};
  const Trajectory n = normalize_frame(t, origin);
  CHECK(n[0].x == doctest::Approx(0.0));
  CHECK(n[0].y == doctest::Approx(0.0));
}

TEST_CASE("normalize_frame: heading maps to +y") {
  // agent at (1,2) facing +x; one meter ahead must land on (0,1)
  const Trajectory t = make({{2.0, 2.0}});
  const AgentState origin{1.0, 2.0, 0.0, 0.0, 0.0, 0.0};
  const Trajectory n = normalize_frame(t, origin);
  CHECK(n[0].x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(n[0].y == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normalize_frame: rigid transform preserves every distance kind") {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const Trajectory a = random_trajectory(rng, 6);
    const Trajectory b = random_trajectory(rng, 6);
    const AgentState origin = covertraj::testing::random_state(rng);
    for (DistanceKind kind :
         {DistanceKind::MaxL2, DistanceKind::AvgL2, DistanceKind::RmsL2}) {
      const double before = distance(a, b, kind);
      const double after =
          distance(normalize_frame(a, origin), normalize_frame(b, origin), kind);
      CHECK(after == doctest::Approx(before).epsilon(1e-9));
    }
  }
}

TEST_CASE("closest_index: exact member wins with distance zero") {
  Rng rng(14);
  std::vector<Trajectory> set;
  for (int i = 0; i < 6; ++i) set.push_back(random_trajectory(rng));
  const std::size_t idx = closest_index(set[3], set, DistanceKind::AvgL2);
  CHECK(idx == 3);
  CHECK(distance(set[3], set[idx], DistanceKind::AvgL2) == 0.0);
}

TEST_CASE("closest_index: ties break to the smallest index") {
  Rng rng(15);
  const Trajectory t = random_trajectory(rng);
  const std::vector<Trajectory> set{t, t};
  CHECK(closest_index(random_trajectory(rng), set, DistanceKind::MaxL2) == 0);
}

TEST_CASE("closest_index: matches an exhaustive scan") {
  Rng rng(16);
  for (int rep = 0; rep < 20; ++rep) {
    const Trajectory target = random_trajectory(rng);
    std::vector<Trajectory> set;
    for (int i = 0; i < 10; ++i) set.push_back(random_trajectory(rng));
    for (DistanceKind kind :
         {DistanceKind::MaxL2, DistanceKind::AvgL2, DistanceKind::RmsL2}) {
      std::size_t expect = 0;
      double best = distance(target, set[0], kind);
      for (std::size_t i = 1; i < set.size(); ++i) {
        const double d = distance(target, set[i], kind);
        if (d < best) {
          best = d;
          expect = i;
        }
      }
      CHECK(closest_index(target, set, kind) == expect);
    }
  }
}

TEST_CASE("closest_index: unaffected by appending a strictly farther element") {
  Rng rng(17);
  const Trajectory target = random_trajectory(rng);
  std::vector<Trajectory> set;
  for (int i = 0; i < 5; ++i) set.push_back(random_trajectory(rng));
  const std::size_t before = closest_index(target, set, DistanceKind::AvgL2);

  std::vector<Vec2> far(target.points().begin(), target.points().end());
  for (Vec2& p : far) p.x += 1e4;
  set.emplace_back(std::move(far), target.dt());
  CHECK(closest_index(target, set, DistanceKind::AvgL2) == before);
}

TEST_CASE("closest_index: empty set is rejected") {
  Rng rng(18);
  const Trajectory t = random_trajectory(rng);
  CHECK_THROWS_AS(closest_index(t, {}, DistanceKind::AvgL2), EmptySet);
}

TEST_CASE("trajectory and corpus construction enforce their invariants") {
  CHECK_THROWS_AS(Trajectory({}, 0.5), InvalidRange);
  CHECK_THROWS_AS(Trajectory({{0.0, 0.0}}, 0.0), InvalidRange);

  Rng rng(19);
  std::vector<Trajectory> mixed{random_trajectory(rng, 4), random_trajectory(rng, 5)};
  CHECK_THROWS_AS(TrajectoryCorpus(std::move(mixed)), LengthMismatch);

  std::vector<Trajectory> items{random_trajectory(rng, 4)};
  CHECK_THROWS_AS(TrajectoryCorpus(std::move(items), std::vector<AgentState>(2)),
                  LengthMismatch);

  CHECK_THROWS_AS(static_cast<void>(TrajectoryCorpus().horizon_steps()), EmptyCorpus);
}

TEST_CASE("wrap_angle lands in [-pi, pi)") {
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(kPi) == doctest::Approx(-kPi));
  CHECK(wrap_angle(3.0 * kPi / 2.0) == doctest::Approx(-kPi / 2.0));
  CHECK(wrap_angle(-5.0 * kPi) == doctest::Approx(-kPi));
  Rng rng(20);
  for (int i = 0; i < 100; ++i) {
    const double w = wrap_angle(rng.uniform(-50.0, 50.0));
    CHECK(w >= -kPi);
    CHECK(w < kPi);
  }
}
