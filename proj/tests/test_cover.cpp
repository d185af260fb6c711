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

#include "covertraj/cover.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace covertraj;
using covertraj::testing::epsilon_quantile;
using covertraj::testing::random_corpus;
using covertraj::testing::straight_line;

namespace {

// Every corpus element must sit within epsilon of some mode.
bool covers(const TrajectorySet& set, const TrajectoryCorpus& corpus,
            const CoverConfig& config) {
  for (const Trajectory& item : corpus.items()) {
    bool ok = false;
    for (const Trajectory& mode : set.modes) {
      if (distance(item, mode, config.kind) <= config.epsilon) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

// Three well-separated speed clusters of straight lines; one ball per
// cluster suffices and no ball spans two clusters, so the optimum is 3.
TrajectoryCorpus three_cluster_corpus() {
  std::vector<Trajectory> items;
  const double heading = std::numbers::pi / 2.0;
  for (double v : {1.0, 1.1, 1.2, 5.0, 5.1, 5.15, 9.0, 9.05}) {
    items.push_back(straight_line(v, heading, 3, 1.0));
  }
  return TrajectoryCorpus(std::move(items));
}

}  // namespace

TEST_CASE("greedy_cover: a singleton corpus covers itself") {
  Rng rng(21);
  const TrajectoryCorpus corpus = random_corpus(rng, 1);
  const CoverResult result = greedy_cover(corpus, {.epsilon = 1.0});
  CHECK(result.complete);
  REQUIRE(result.set.size() == 1);
  CHECK(result.set.modes[0] == corpus[0]);
  CHECK(result.set.source_indices == std::vector<std::size_t>{0});
  CHECK(result.set.provenance == Provenance::Fixed);
}

TEST_CASE("greedy_cover: two mutually close trajectories need one mode") {
  std::vector<Trajectory> items{straight_line(2.0, 1.0, 4, 0.5),
                                straight_line(2.1, 1.0, 4, 0.5)};
  const double gap = distance(items[0], items[1], DistanceKind::MaxL2);
  const TrajectoryCorpus corpus(std::move(items));
  const CoverResult result = greedy_cover(corpus, {.epsilon = gap + 0.01});
  CHECK(result.complete);
  CHECK(result.set.size() == 1);
}

TEST_CASE("greedy_cover: three-cluster instance, optimum found by brute force") {
  const TrajectoryCorpus corpus = three_cluster_corpus();
  const CoverConfig config{.epsilon = 1.0};

  const CoverResult greedy = greedy_cover(corpus, config);
  const TrajectorySet optimum = brute_force_cover(corpus, config);
  CHECK(optimum.size() == 3);
  CHECK(greedy.set.size() == 3);
  CHECK(covers(greedy.set, corpus, config));
  CHECK(covers(optimum, corpus, config));
  CHECK(static_cast<double>(greedy.set.size()) <= 3.0 * std::log(8.0));
}

TEST_CASE("greedy_cover: postcondition holds on random instances") {
  Rng rng(22);
  for (int rep = 0; rep < 20; ++rep) {
    const TrajectoryCorpus corpus = random_corpus(rng, 30);
    const CoverConfig config{.epsilon =
                                 epsilon_quantile(corpus, DistanceKind::MaxL2, 0.25)};
    const CoverResult result = greedy_cover(corpus, config);
    CHECK(result.complete);
    CHECK(covers(result.set, corpus, config));
  }
}

TEST_CASE("greedy_cover: brute force is never larger on small instances") {
  Rng rng(23);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 4 + rng.below(9);  // 4..12
    const TrajectoryCorpus corpus = random_corpus(rng, n);
    const CoverConfig config{.epsilon =
                                 epsilon_quantile(corpus, DistanceKind::MaxL2, 0.3)};
    const CoverResult greedy = greedy_cover(corpus, config);
    const TrajectorySet optimum = brute_force_cover(corpus, config);
    CHECK(optimum.size() <= greedy.set.size());
    CHECK(covers(optimum, corpus, config));
  }
}

TEST_CASE("greedy_cover: set size is non-increasing in epsilon") {
  Rng rng(24);
  const TrajectoryCorpus corpus = random_corpus(rng, 40);
  std::size_t previous = corpus.size() + 1;
  for (double eps : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
    const std::size_t size = greedy_cover(corpus, {.epsilon = eps}).set.size();
    CHECK(size <= previous);
    previous = size;
  }
}

TEST_CASE("greedy_cover: deterministic in corpus order and config") {
  Rng rng(25);
  const TrajectoryCorpus corpus = random_corpus(rng, 25);
  const CoverConfig config{.epsilon = epsilon_quantile(corpus, DistanceKind::MaxL2, 0.3)};
  const CoverResult a = greedy_cover(corpus, config);
  const CoverResult b = greedy_cover(corpus, config);
  CHECK(a.set.modes == b.set.modes);
  CHECK(a.set.source_indices == b.set.source_indices);
}

TEST_CASE("greedy_cover: duplicates collapse to one mode") {
  Rng rng(26);
  const Trajectory t = covertraj::testing::random_trajectory(rng);
  const TrajectoryCorpus corpus(std::vector<Trajectory>{t, t, t});
  const CoverResult result = greedy_cover(corpus, {.epsilon = 0.001});
  CHECK(result.set.size() == 1);
  CHECK(result.set.source_indices == std::vector<std::size_t>{0});
}

TEST_CASE("greedy_cover: cap yields a flagged partial cover") {
  std::vector<Trajectory> items;
  for (double v : {1.0, 5.0, 9.0}) items.push_back(straight_line(v, 1.0, 3, 1.0));
  const TrajectoryCorpus corpus(std::move(items));
  const CoverResult result =
      greedy_cover(corpus, {.epsilon = 0.5, .max_set_size = 1});
  CHECK_FALSE(result.complete);
  CHECK(result.set.size() == 1);
}

TEST_CASE("greedy_cover: empty corpus and bad epsilon are rejected") {
  CHECK_THROWS_AS(greedy_cover(TrajectoryCorpus(), {.epsilon = 1.0}), EmptyCorpus);
  Rng rng(27);
  const TrajectoryCorpus corpus = random_corpus(rng, 2);
  CHECK_THROWS_AS(greedy_cover(corpus, {.epsilon = 0.0}), InvalidRange);
}

TEST_CASE("random_cover: singleton corpus, any seed") {
  Rng rng(28);
  const TrajectoryCorpus corpus = random_corpus(rng, 1);
  for (std::uint64_t seed : {0ULL, 7ULL, 12345ULL}) {
    const CoverResult result = random_cover(corpus, {.epsilon = 1.0}, 5, seed);
    CHECK(result.set.size() == 1);
    CHECK(result.complete);
  }
}

TEST_CASE("random_cover: same seed, same cover") {
  Rng rng(29);
  const TrajectoryCorpus corpus = random_corpus(rng, 20);
  const CoverConfig config{.epsilon = epsilon_quantile(corpus, DistanceKind::MaxL2, 0.3)};
  const CoverResult a = random_cover(corpus, config, 10, 99);
  const CoverResult b = random_cover(corpus, config, 10, 99);
  CHECK(a.set.modes == b.set.modes);
  CHECK(a.set.source_indices == b.set.source_indices);
}

TEST_CASE("random_cover: covers and rarely loses to deterministic greedy") {
  Rng rng(30);
  int no_worse = 0;
  const int instances = 100;
  for (int rep = 0; rep < instances; ++rep) {
    const TrajectoryCorpus corpus = random_corpus(rng, 8);
    const CoverConfig config{.epsilon =
                                 epsilon_quantile(corpus, DistanceKind::MaxL2, 0.35)};
    const CoverResult randomized = random_cover(corpus, config, 50, 1000 + rep);
    CHECK(covers(randomized.set, corpus, config));
    if (randomized.set.size() <= greedy_cover(corpus, config).set.size()) ++no_worse;
  }
  CHECK(no_worse >= 90);
}

TEST_CASE("random_cover: rejects zero trials") {
  Rng rng(31);
  const TrajectoryCorpus corpus = random_corpus(rng, 3);
  CHECK_THROWS_AS(random_cover(corpus, {.epsilon = 1.0}, 0, 0), InvalidRange);
}

TEST_CASE("brute_force_cover: singleton and mutual-cover instances") {
  Rng rng(32);
  CHECK(brute_force_cover(random_corpus(rng, 1), {.epsilon = 1.0}).size() == 1);

  std::vector<Trajectory> items{straight_line(2.0, 1.0, 4, 0.5),
                                straight_line(2.05, 1.0, 4, 0.5)};
  const double gap = distance(items[0], items[1], DistanceKind::MaxL2);
  CHECK(brute_force_cover(TrajectoryCorpus(std::move(items)), {.epsilon = gap + 0.01})
            .size() == 1);
}

TEST_CASE("brute_force_cover: guards against exponential corpora") {
  Rng rng(33);
  CHECK_THROWS_AS(brute_force_cover(random_corpus(rng, 21), {.epsilon = 1.0}), TooLarge);
}

TEST_CASE("coverage_report: the corpus covers itself perfectly") {
  Rng rng(34);
  const TrajectoryCorpus corpus = random_corpus(rng, 12);
  TrajectorySet self;
  self.modes.assign(corpus.items().begin(), corpus.items().end());
  const CoverageReport report = coverage_report(self, corpus, {.epsilon = 0.1});
  CHECK(report.fraction_covered == 1.0);
  CHECK(report.max_residual == 0.0);
}

TEST_CASE("coverage_report: greedy output reaches full coverage") {
  Rng rng(35);
  const TrajectoryCorpus corpus = random_corpus(rng, 30);
  const CoverConfig config{.epsilon = epsilon_quantile(corpus, DistanceKind::MaxL2, 0.3)};
  const CoverResult result = greedy_cover(corpus, config);
  const CoverageReport report = coverage_report(result.set, corpus, config);
  CHECK(report.fraction_covered == 1.0);
  CHECK(report.max_residual <= config.epsilon);
}

TEST_CASE("coverage_report: hand-built residuals") {
  // corpus lines at speeds 1, 2, 6; set holds only the first two
  std::vector<Trajectory> items{straight_line(1.0, 0.5, 2, 1.0),
                                straight_line(2.0, 0.5, 2, 1.0),
                                straight_line(6.0, 0.5, 2, 1.0)};
  TrajectorySet set;
  set.modes = {items[0], items[1]};
  const TrajectoryCorpus corpus(std::move(items));

  // MaxL2 between speeds v and w over 2 unit steps is 2|v - w|
  const CoverageReport report = coverage_report(set, corpus, {.epsilon = 3.0});
  REQUIRE(report.residuals.size() == 3);
  CHECK(report.residuals[0] == doctest::Approx(0.0));
  CHECK(report.residuals[1] == doctest::Approx(0.0));
  CHECK(report.residuals[2] == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(report.max_residual == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(report.fraction_covered == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("coverage_report: rejects empty inputs") {
  Rng rng(36);
  const TrajectoryCorpus corpus = random_corpus(rng, 2);
  TrajectorySet set;
  CHECK_THROWS_AS(coverage_report(set, corpus, {.epsilon = 1.0}), EmptySet);
  set.modes.push_back(corpus[0]);
  CHECK_THROWS_AS(coverage_report(set, TrajectoryCorpus(), {.epsilon = 1.0}), EmptyCorpus);
}
