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

#include "covertraj/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "covertraj/rng.hpp"

namespace covertraj {

namespace {

void check(const SynthConfig& c) {
  if (c.count < 1) throw InvalidRange("corpus needs at least one record");
  if (!(c.dt > 0.0)) throw InvalidRange("dt must be positive");
  if (!(c.horizon_s >= c.dt)) throw InvalidRange("horizon must be at least one step");
  if (c.speed_min < 0.0 || c.speed_max < c.speed_min) {
    throw InvalidRange("speed range must satisfy 0 <= min <= max");
  }
  if (c.noise_std < 0.0) throw InvalidRange("noise std must be non-negative");
  if (c.piecewise_prob < 0.0 || c.piecewise_prob > 1.0) {
    throw InvalidRange("piecewise probability must lie in [0, 1]");
  }
  if (c.lat_accel_max < 0.0 || c.lon_accel_max < 0.0) {
    throw InvalidRange("acceleration clip bounds must be non-negative");
  }
  if (c.substeps < 1) throw InvalidRange("substeps must be positive");
}

double clipped_normal(Rng& rng, double std, double bound) {
  return std::clamp(rng.normal(0.0, std), -bound, bound);
}

}  // namespace

CorpusFile gen_corpus(const SynthConfig& config) {
  check(config);
  const int horizon_steps = static_cast<int>(std::llround(config.horizon_s / config.dt));
  if (horizon_steps < 1) throw InvalidRange("horizon must be at least one step");

  CorpusFile corpus;
  corpus.horizon_steps = horizon_steps;
  corpus.dt = config.dt;
  corpus.records.reserve(config.count);

  Rng rng(config.rng_seed);
  for (std::size_t idx = 0; idx < config.count; ++idx) {
    CorpusRecord record;
    record.id = static_cast<std::int64_t>(idx);

    AgentState seed;
    seed.x = rng.uniform(-100.0, 100.0);
    seed.y = rng.uniform(-100.0, 100.0);
    seed.heading = wrap_angle(rng.uniform(-std::numbers::pi, std::numbers::pi));
    seed.speed = rng.uniform(config.speed_min, config.speed_max);

    const ControlProfile first{clipped_normal(rng, config.lat_accel_std, config.lat_accel_max),
                               clipped_normal(rng, config.lon_accel_std, config.lon_accel_max)};
    ControlProfile second = first;
    int switch_step = horizon_steps;  // no switch by default
    if (horizon_steps > 1 && rng.uniform01() < config.piecewise_prob) {
      second = {clipped_normal(rng, config.lat_accel_std, config.lat_accel_max),
                clipped_normal(rng, config.lon_accel_std, config.lon_accel_max)};
      switch_step = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(horizon_steps - 1)));
    }

    seed.accel = first.a_lon;
    seed.yaw_rate = (seed.speed / config.vehicle.wheelbase_b) *
                    std::tan(lat_to_steer(seed.speed, first.a_lat, config.vehicle));
    record.seed_state = seed;

    AgentState state = seed;
    record.future.reserve(static_cast<std::size_t>(horizon_steps));
    for (int step = 0; step < horizon_steps; ++step) {
      const ControlProfile& profile = step < switch_step ? first : second;
      state = advance(state, profile, config.vehicle, config.dt, config.substeps);
      Vec2 p{state.x, state.y};
      if (config.noise_std > 0.0) {
        p.x += rng.normal(0.0, config.noise_std);
        p.y += rng.normal(0.0, config.noise_std);
      }
      record.future.push_back(p);
    }
    corpus.records.push_back(std::move(record));
  }
  return corpus;
}

}  // namespace covertraj
