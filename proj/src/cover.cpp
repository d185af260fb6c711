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

#include "covertraj/cover.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "covertraj/rng.hpp"

namespace covertraj {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Fixed:
      return "fixed";
    case Provenance::Dynamic:
      return "dynamic";
    case Provenance::Hybrid:
      return "hybrid";
  }
  return "?";
}

Provenance provenance_from_string(const std::string& name) {
  if (name == "fixed") return Provenance::Fixed;
  if (name == "dynamic") return Provenance::Dynamic;
  if (name == "hybrid") return Provenance::Hybrid;
  throw InvalidRange("unknown provenance: " + name);
}

namespace {

void check_config(const CoverConfig& config) {
  if (!(config.epsilon > 0.0)) throw InvalidRange("epsilon must be positive");
}

// Distinct corpus elements in first-occurrence order. Duplicates add no
// information and would distort coverage counts.
std::vector<std::size_t> distinct_indices(const TrajectoryCorpus& corpus) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    bool duplicate = false;
    for (std::size_t r : reps) {
      if (corpus[i] == corpus[r]) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) reps.push_back(i);
  }
  return reps;
}

// Flat symmetric pairwise distance matrix over the representatives.
std::vector<double> pairwise_distances(const TrajectoryCorpus& corpus,
                                       const std::vector<std::size_t>& reps,
                                       DistanceKind kind) {
  const std::size_t m = reps.size();
  std::vector<double> d(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const double v = distance(corpus[reps[a]], corpus[reps[b]], kind);
      d[a * m + b] = v;
      d[b * m + a] = v;
    }
  }
  return d;
}

struct GreedyState {
  std::vector<std::size_t> reps;  // representative corpus indices
  std::vector<double> dist;       // m x m distances between representatives
  std::size_t m{0};
};

GreedyState prepare(const TrajectoryCorpus& corpus, const CoverConfig& config) {
  if (corpus.empty()) throw EmptyCorpus("cannot cover an empty corpus");
  check_config(config);
  GreedyState st;
  st.reps = distinct_indices(corpus);
  st.m = st.reps.size();
  st.dist = pairwise_distances(corpus, st.reps, config.kind);
  return st;
}

TrajectorySet make_fixed_set(const TrajectoryCorpus& corpus,
                             const std::vector<std::size_t>& chosen) {
  TrajectorySet set;
  set.provenance = Provenance::Fixed;
  set.modes.reserve(chosen.size());
  set.source_indices = chosen;
  for (std::size_t idx : chosen) set.modes.push_back(corpus[idx]);
  return set;
}

// One bagging run. `pick` selects the next element among the uncovered
// candidates given their uncovered-coverage counts.
template <typename Pick>
CoverResult run_bagging(const TrajectoryCorpus& corpus, const CoverConfig& config,
                        const GreedyState& st, Pick&& pick) {
  const std::size_t m = st.m;
  const double eps = config.epsilon;
  std::vector<char> covered(m, 0);
  std::vector<std::size_t> count(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (st.dist[j * m + i] <= eps) ++count[j];
    }
  }

  std::vector<std::size_t> chosen;
  std::size_t num_covered = 0;
  while (num_covered < m) {
    if (config.max_set_size && chosen.size() >= *config.max_set_size) break;
    const std::size_t j = pick(covered, count);
    chosen.push_back(st.reps[j]);
    for (std::size_t i = 0; i < m; ++i) {
      if (covered[i] || st.dist[j * m + i] > eps) continue;
      covered[i] = 1;
      ++num_covered;
      // element i leaves the uncovered pool; everything that could cover it
      // loses one potential gain
      for (std::size_t k = 0; k < m; ++k) {
        if (st.dist[i * m + k] <= eps) --count[k];
      }
    }
  }

  return CoverResult{make_fixed_set(corpus, chosen), num_covered == m};
}

}  // namespace

CoverResult greedy_cover(const TrajectoryCorpus& corpus, const CoverConfig& config) {
  const GreedyState st = prepare(corpus, config);
  auto pick_best = [](const std::vector<char>& covered,
                      const std::vector<std::size_t>& count) {
    std::size_t best = 0;
    std::size_t best_count = 0;
    for (std::size_t j = 0; j < covered.size(); ++j) {
      if (covered[j]) continue;  // candidates are the uncovered elements
      if (count[j] > best_count) {
        best_count = count[j];
        best = j;
      }
    }
    return best;  // count >= 1 always: an uncovered element covers itself
  };
  return run_bagging(corpus, config, st, pick_best);
}

CoverResult random_cover(const TrajectoryCorpus& corpus, const CoverConfig& config,
                         std::size_t trials, std::uint64_t rng_seed) {
  if (trials < 1) throw InvalidRange("random_cover needs at least one trial");
  const GreedyState st = prepare(corpus, config);

  std::optional<CoverResult> best;
  Rng master(rng_seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = master.split();
    auto pick_weighted = [&rng](const std::vector<char>& covered,
                                const std::vector<std::size_t>& count) {
      std::uint64_t total = 0;
      for (std::size_t j = 0; j < covered.size(); ++j) {
        if (!covered[j]) total += count[j];
      }
      std::uint64_t r = rng.below(total);
      for (std::size_t j = 0; j < covered.size(); ++j) {
        if (covered[j]) continue;
        if (r < count[j]) return j;
        r -= count[j];
      }
      return covered.size() - 1;  // unreachable
    };
    CoverResult result = run_bagging(corpus, config, st, pick_weighted);
    if (!best || result.set.size() < best->set.size()) best = std::move(result);
  }
  return *best;
}

TrajectorySet brute_force_cover(const TrajectoryCorpus& corpus, const CoverConfig& config) {
  constexpr std::size_t kMaxExhaustive = 20;
  if (corpus.size() > kMaxExhaustive) {
    throw TooLarge("brute_force_cover limited to " + std::to_string(kMaxExhaustive) +
                   " trajectories, got " + std::to_string(corpus.size()));
  }
  const GreedyState st = prepare(corpus, config);
  const std::size_t m = st.m;
  const std::uint32_t full = (m == 32) ? 0xFFFFFFFFu : ((1u << m) - 1u);

  std::vector<std::uint32_t> ball(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (st.dist[j * m + i] <= config.epsilon) ball[j] |= (1u << i);
    }
  }

  // Increasing size, lexicographic combinations: the first full cover found
  // is the minimum with the smallest index set.
  std::vector<std::size_t> combo;
  for (std::size_t k = 1; k <= m; ++k) {
    combo.resize(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < k; ++i) mask |= ball[combo[i]];
      if (mask == full) {
        std::vector<std::size_t> chosen(k);
        for (std::size_t i = 0; i < k; ++i) chosen[i] = st.reps[combo[i]];
        return make_fixed_set(corpus, chosen);
      }
      // next combination
      std::size_t pos = k;
      while (pos > 0 && combo[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++combo[pos - 1];
      for (std::size_t i = pos; i < k; ++i) combo[i] = combo[i - 1] + 1;
    }
  }
  throw Error("no cover found");  // unreachable: the full corpus covers itself
}

CoverageReport coverage_report(const TrajectorySet& set, const TrajectoryCorpus& corpus,
                               const CoverConfig& config) {
  if (set.modes.empty()) throw EmptySet("coverage_report needs a non-empty set");
  if (corpus.empty()) throw EmptyCorpus("coverage_report needs a non-empty corpus");
  check_config(config);

  CoverageReport report;
  report.residuals.reserve(corpus.size());
  std::size_t hits = 0;
  for (const Trajectory& item : corpus.items()) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const Trajectory& mode : set.modes) {
      nearest = std::min(nearest, distance(item, mode, config.kind));
    }
    if (nearest <= config.epsilon) ++hits;
    report.max_residual = std::max(report.max_residual, nearest);
    report.residuals.push_back(nearest);
  }
  report.fraction_covered = static_cast<double>(hits) / static_cast<double>(corpus.size());
  return report;
}

}  // namespace covertraj
