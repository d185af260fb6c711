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

#include "covertraj/dynamics.hpp"
#include "covertraj/io.hpp"

namespace covertraj {

/// Synthetic corpus parameters. Seed poses are sampled uniformly, controls
/// from clipped normals concentrated near straight driving, and each sample
/// optionally switches to a second control profile at a random midpoint.
struct SynthConfig {
  std::size_t count{2000};
  double horizon_s{6.0};
  double dt{0.5};
  double speed_min{0.0};
  double speed_max{13.0};
  double noise_std{0.25};      // m, per-coordinate Gaussian position noise
  double piecewise_prob{0.5};  // chance of a mid-horizon control change
  double lat_accel_std{1.2};   // m/s^2
  double lat_accel_max{4.0};   // m/s^2, clip bound
  double lon_accel_std{1.0};   // m/s^2
  double lon_accel_max{2.5};   // m/s^2, clip bound
  VehicleParams vehicle{};
  int substeps{10};
  std::uint64_t rng_seed{0};
};

/// Roll out `count` noisy kinematic futures; deterministic per seed.
CorpusFile gen_corpus(const SynthConfig& config);

}  // namespace covertraj
