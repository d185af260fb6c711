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

// Command-line front end: corpus generation, trajectory-set construction,
// coverage reporting, physics baselines, classifier training, and metric
// evaluation. Exit codes: 0 success, 1 usage error, 2 data error,
// 3 selfcheck violation.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covertraj/baselines.hpp"
#include "covertraj/classifier.hpp"
#include "covertraj/cover.hpp"
#include "covertraj/dynamics.hpp"
#include "covertraj/io.hpp"
#include "covertraj/metrics.hpp"
#include "covertraj/rng.hpp"
#include "covertraj/synth.hpp"
#include "covertraj/trajectory.hpp"
#include "json.hpp"

namespace {

using namespace covertraj;
using nlohmann::json;

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> values;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) values.push_back(std::stod(item));
  }
  if (values.empty()) throw InvalidRange("empty list: " + csv);
  return values;
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
  std::vector<std::size_t> values;
  for (double v : parse_doubles(csv)) {
    if (v < 0) throw InvalidRange("negative count in list: " + csv);
    values.push_back(static_cast<std::size_t>(v));
  }
  return values;
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

AgentState query_state(double speed) {
  AgentState s;
  s.heading = 0.5 * std::numbers::pi;
  s.speed = speed;
  return s;
}

// Options shared by every command that consumes a corpus file.
struct CorpusOptions {
  std::string path;
  double min_displacement{0.0};
};

void add_corpus_options(CLI::App* cmd, CorpusOptions& opts) {
  cmd->add_option("--corpus", opts.path, "corpus JSONL file")->required();
  cmd->add_option("--min-displacement", opts.min_displacement,
                  "drop records whose future stays within this radius of the agent (m)");
}

struct LoadedCorpus {
  CorpusFile file;
  TrajectoryCorpus corpus;
  IntegrationConfig cfg;  // horizon and dt matching the corpus
};

LoadedCorpus load(const CorpusOptions& opts, int substeps) {
  LoadedCorpus out;
  out.file = read_corpus_file(opts.path);
  out.corpus = to_corpus(out.file, opts.min_displacement);
  if (out.corpus.empty()) throw DataError("no usable records in " + opts.path);
  out.cfg = IntegrationConfig{out.file.dt, substeps, out.file.horizon_steps};
  return out;
}

struct GridOptions {
  std::string lat_values;
  std::string lon_values;
  double wheelbase{3.0};
};

void add_grid_options(CLI::App* cmd, GridOptions& opts) {
  const ControlGrid defaults = default_control_grid();
  auto join = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += format_double(v[i]);
    }
    return s;
  };
  opts.lat_values = join(defaults.lat_values);
  opts.lon_values = join(defaults.lon_values);
  cmd->add_option("--lat-values", opts.lat_values,
                  "candidate lateral accelerations (m/s^2, comma list)");
  cmd->add_option("--lon-values", opts.lon_values,
                  "candidate longitudinal accelerations (m/s^2, comma list)");
  cmd->add_option("--wheelbase", opts.wheelbase, "vehicle wheelbase (m)");
}

ControlGrid make_grid(const GridOptions& opts) {
  ControlGrid grid{parse_doubles(opts.lat_values), parse_doubles(opts.lon_values)};
  validate(grid);
  return grid;
}

json table_to_json(const EvalTable& table) {
  json j;
  j["num_instances"] = table.num_instances;
  json ade;
  for (const auto& [k, v] : table.mean_min_ade) ade[std::to_string(k)] = v;
  j["min_ade"] = std::move(ade);
  j["fde"] = table.mean_fde;
  json hits;
  for (const auto& [key, v] : table.hit_rates) {
    hits[std::to_string(key.first) + "@" + format_double(key.second)] = v;
  }
  j["hit_rate"] = std::move(hits);
  return j;
}

std::string table_csv_header(const EvalTable& table) {
  std::string header = "row";
  for (const auto& [k, v] : table.mean_min_ade) {
    (void)v;
    header += ",minADE_" + std::to_string(k);
  }
  header += ",FDE";
  for (const auto& [key, v] : table.hit_rates) {
    (void)v;
    header += ",HitRate_" + std::to_string(key.first) + "_" + format_double(key.second);
  }
  return header;
}

std::string table_csv_row(const std::string& name, const EvalTable& table) {
  std::string row = name;
  for (const auto& [k, v] : table.mean_min_ade) {
    (void)k;
    row += ',' + format_double(v);
  }
  row += ',' + format_double(table.mean_fde);
  for (const auto& [key, v] : table.hit_rates) {
    (void)key;
    row += ',' + format_double(v);
  }
  return row;
}

// gen-corpus ---------------------------------------------------------------

int run_gen_corpus(const SynthConfig& config, const std::string& out) {
  const CorpusFile corpus = gen_corpus(config);
  write_corpus_file(out, corpus);
  std::cout << "wrote " << corpus.records.size() << " records (N=" << corpus.horizon_steps
            << ", dt=" << corpus.dt << ") to " << out << "\n";
  return 0;
}

// build-set ----------------------------------------------------------------

struct BuildSetOptions {
  std::string mode{"fixed"};
  CorpusOptions corpus;
  GridOptions grid;
  double epsilon{2.0};
  std::string distance{"max"};
  std::size_t random_trials{0};
  std::uint64_t seed{0};
  std::size_t max_set_size{0};
  double speed{8.0};
  int substeps{10};
  double horizon_s{6.0};
  double dt{0.5};
  std::string out{"set.json"};
};

int run_build_set(const BuildSetOptions& opts) {
  const DistanceKind kind = distance_kind_from_string(opts.distance);
  CoverConfig config{opts.epsilon, kind, std::nullopt};
  if (opts.max_set_size > 0) config.max_set_size = opts.max_set_size;

  TrajectorySet set;
  if (opts.mode == "dynamic") {
    IntegrationConfig cfg{opts.dt, opts.substeps,
                          static_cast<int>(std::llround(opts.horizon_s / opts.dt))};
    if (!opts.corpus.path.empty()) {
      cfg = load(opts.corpus, opts.substeps).cfg;
    }
    set = dynamic_set(query_state(opts.speed), make_grid(opts.grid),
                      {opts.grid.wheelbase}, cfg);
  } else {
    if (opts.corpus.path.empty()) {
      throw DataError("--corpus is required for fixed and hybrid sets");
    }
    const LoadedCorpus loaded = load(opts.corpus, opts.substeps);
    if (opts.mode == "fixed") {
      const CoverResult result =
          opts.random_trials > 0
              ? random_cover(loaded.corpus, config, opts.random_trials, opts.seed)
              : greedy_cover(loaded.corpus, config);
      if (!result.complete) {
        std::cerr << "note: size cap reached before full coverage; set is partial\n";
      }
      set = result.set;
    } else {
      set = hybrid_set(loaded.corpus, query_state(opts.speed), make_grid(opts.grid),
                       {opts.grid.wheelbase}, loaded.cfg, config);
    }
  }

  write_set_file(opts.out, set, opts.epsilon, kind);
  std::cout << "wrote " << to_string(set.provenance) << " set: " << set.size() << " modes ("
            << set.num_dynamic_modes() << " dynamic) to " << opts.out << "\n";
  return 0;
}

// cover-report --------------------------------------------------------------

int run_cover_report(const CorpusOptions& corpus_opts, const std::string& set_path,
                     double epsilon, const std::string& distance,
                     const std::string& out_json, const std::string& out_csv) {
  const LoadedCorpus loaded = load(corpus_opts, 10);
  const SetFileData set_data = read_set_file(set_path, loaded.file.dt);
  const DistanceKind kind = distance_kind_from_string(distance);
  const CoverageReport report =
      coverage_report(set_data.set, loaded.corpus, {epsilon, kind, std::nullopt});

  json j{{"epsilon", epsilon},
         {"distance_kind", to_string(kind)},
         {"set_size", set_data.set.size()},
         {"corpus_size", loaded.corpus.size()},
         {"fraction_covered", report.fraction_covered},
         {"max_residual", report.max_residual},
         {"residuals", report.residuals}};
  write_atomic(out_json, j.dump(2) + "\n");

  // 20-bin residual histogram as plot data
  const double upper = std::max(report.max_residual, epsilon);
  const int bins = 20;
  std::vector<int> counts(bins, 0);
  for (double r : report.residuals) {
    int b = upper > 0.0 ? static_cast<int>(std::floor(r / upper * bins)) : 0;
    counts[std::min(b, bins - 1)] += 1;
  }
  std::ostringstream csv;
  csv << "bin_lo,bin_hi,count\n";
  for (int b = 0; b < bins; ++b) {
    csv << format_double(upper * b / bins) << ',' << format_double(upper * (b + 1) / bins)
        << ',' << counts[b] << '\n';
  }
  write_atomic(out_csv, csv.str());

  std::cout << "coverage " << report.fraction_covered << " max residual "
            << report.max_residual << " (" << out_json << ", " << out_csv << ")\n";
  return 0;
}

// coverage-curve -------------------------------------------------------------

int run_coverage_curve(const CorpusOptions& corpus_opts, const GridOptions& grid_opts,
                       const std::string& epsilons, const std::string& distance,
                       int substeps, const std::string& out) {
  const LoadedCorpus loaded = load(corpus_opts, substeps);
  const ControlGrid grid = make_grid(grid_opts);
  const VehicleParams params{grid_opts.wheelbase};
  const DistanceKind kind = distance_kind_from_string(distance);

  std::ostringstream csv;
  csv << "epsilon,fixed_size,hybrid_size,dynamic_size\n";
  for (double eps : parse_doubles(epsilons)) {
    const CoverConfig config{eps, kind, std::nullopt};
    const std::size_t fixed_size = greedy_cover(loaded.corpus, config).set.size();

    const ProfileCoverResult pc =
        profile_cover(loaded.corpus, grid, params, loaded.cfg, config);
    std::size_t residual_size = 0;
    if (!pc.uncovered.empty()) {
      std::vector<Trajectory> residual;
      residual.reserve(pc.uncovered.size());
      for (std::size_t idx : pc.uncovered) residual.push_back(loaded.corpus[idx]);
      residual_size = greedy_cover(TrajectoryCorpus(std::move(residual)), config).set.size();
    }
    csv << format_double(eps) << ',' << fixed_size << ','
        << pc.profiles.size() + residual_size << ',' << pc.profiles.size() << '\n';
  }
  write_atomic(out, csv.str());
  std::cout << "wrote coverage curve to " << out << "\n";
  return 0;
}

// baselines ------------------------------------------------------------------

int run_baselines(const CorpusOptions& corpus_opts, const std::string& ks_csv,
                  std::size_t hit_k, double hit_d, int substeps,
                  const std::string& out_json, const std::string& out_csv) {
  const LoadedCorpus loaded = load(corpus_opts, substeps);
  const std::vector<std::size_t> ks = parse_sizes(ks_csv);
  const std::vector<std::size_t> hit_ks{hit_k};
  const std::vector<double> hit_ds{hit_d};
  const std::span<const AgentState> seeds = loaded.corpus.seed_states();

  auto single_mode = [](Trajectory mode) {
    auto set = std::make_shared<TrajectorySet>();
    set->modes.push_back(std::move(mode));
    return PredictionResult{std::move(set), {1.0}};
  };

  json rows = json::array();
  std::ostringstream csv;
  bool wrote_header = false;
  auto emit = [&](const std::string& name, const Predictor& predictor) {
    const EvalTable table =
        evaluate_dataset(predictor, loaded.corpus.items(), ks, hit_ks, hit_ds);
    json row = table_to_json(table);
    row["model"] = name;
    rows.push_back(std::move(row));
    if (!wrote_header) {
      csv << table_csv_header(table) << '\n';
      wrote_header = true;
    }
    csv << table_csv_row(name, table) << '\n';
  };

  for (PhysicsModelKind kind : kAllPhysicsModels) {
    emit(to_string(kind), [&, kind](std::size_t i) {
      return single_mode(physics_rollout(seeds[i], kind, loaded.cfg));
    });
  }
  emit("physics_oracle", [&](std::size_t i) {
    const OracleResult oracle = physics_oracle(seeds[i], loaded.corpus[i], loaded.cfg);
    return single_mode(physics_rollout(seeds[i], oracle.best_kind, loaded.cfg));
  });

  write_atomic(out_json, json{{"rows", rows}}.dump(2) + "\n");
  write_atomic(out_csv, csv.str());
  std::cout << "wrote baseline tables to " << out_json << " and " << out_csv << "\n";
  return 0;
}

// train ----------------------------------------------------------------------

int run_train(const CorpusOptions& corpus_opts, const std::string& set_path,
              std::size_t epochs, double lr, std::uint64_t seed, std::size_t batch,
              const std::string& out) {
  const LoadedCorpus loaded = load(corpus_opts, 10);
  const SetFileData set_data = read_set_file(set_path, loaded.file.dt);
  auto set = std::make_shared<const TrajectorySet>(set_data.set);

  std::vector<FeatureVector> features;
  features.reserve(loaded.corpus.size());
  for (const AgentState& s : loaded.corpus.seed_states()) features.push_back(state_features(s));

  const TrainResult result = train(features, loaded.corpus.items(), set,
                                   TrainConfig{epochs, lr, seed, batch});

  ModelFileData data;
  data.feature_dim = result.model.feature_dim();
  data.num_modes = result.model.num_modes();
  data.weights.assign(result.model.weights().begin(), result.model.weights().end());
  data.set_fingerprint = set_fingerprint(*set);
  data.loss_curve = result.loss_curve;
  write_model_file(out, data);

  std::cout << "trained " << data.num_modes << "-mode model, loss "
            << result.loss_curve.front() << " -> " << result.loss_curve.back() << ", wrote "
            << out << "\n";
  return 0;
}

// evaluate -------------------------------------------------------------------

struct EvaluateOptions {
  CorpusOptions corpus;
  std::string set_path;
  std::string model_path;
  bool oracle_probs{false};
  std::string ks{"1,5,10,15"};
  std::size_t hit_k{5};
  double hit_d{2.0};
  std::string match_distance{"avg"};
  bool ablate_match{false};
  std::string out_json{"evaluation.json"};
  std::string out_csv{"evaluation.csv"};
};

int run_evaluate(const EvaluateOptions& opts) {
  const LoadedCorpus loaded = load(opts.corpus, 10);
  const SetFileData set_data = read_set_file(opts.set_path, loaded.file.dt);
  auto set = std::make_shared<const TrajectorySet>(set_data.set);
  const std::vector<std::size_t> ks = parse_sizes(opts.ks);
  const std::vector<std::size_t> hit_ks{opts.hit_k};
  const std::vector<double> hit_ds{opts.hit_d};

  auto oracle_predictor = [&](DistanceKind match_kind) {
    return Predictor([&, match_kind](std::size_t i) {
      std::vector<double> probs(set->modes.size(), 0.0);
      probs[closest_index(loaded.corpus[i], set->modes, match_kind)] = 1.0;
      return PredictionResult{set, std::move(probs)};
    });
  };

  json rows = json::array();
  std::ostringstream csv;
  bool wrote_header = false;
  auto emit = [&](const std::string& name, const Predictor& predictor) {
    const EvalTable table =
        evaluate_dataset(predictor, loaded.corpus.items(), ks, hit_ks, hit_ds);
    json row = table_to_json(table);
    row["predictor"] = name;
    rows.push_back(std::move(row));
    if (!wrote_header) {
      csv << table_csv_header(table) << '\n';
      wrote_header = true;
    }
    csv << table_csv_row(name, table) << '\n';
  };

  if (opts.ablate_match) {
    if (!opts.oracle_probs) {
      throw DataError("--ablate-match requires --oracle-probs");
    }
    for (DistanceKind kind :
         {DistanceKind::MaxL2, DistanceKind::AvgL2, DistanceKind::RmsL2}) {
      emit(std::string("oracle_match_") + to_string(kind), oracle_predictor(kind));
    }
  } else if (opts.oracle_probs) {
    const DistanceKind kind = distance_kind_from_string(opts.match_distance);
    emit(std::string("oracle_match_") + to_string(kind), oracle_predictor(kind));
  } else if (!opts.model_path.empty()) {
    const SoftmaxModel model = bind_model(read_model_file(opts.model_path), set);
    std::vector<FeatureVector> features;
    features.reserve(loaded.corpus.size());
    for (const AgentState& s : loaded.corpus.seed_states()) {
      features.push_back(state_features(s));
    }
    emit("softmax_model", [&](std::size_t i) { return predict(model, features[i]); });
  } else {
    throw DataError("pass --model or --oracle-probs");
  }

  write_atomic(opts.out_json, json{{"rows", rows}}.dump(2) + "\n");
  write_atomic(opts.out_csv, csv.str());
  std::cout << "wrote evaluation to " << opts.out_json << " and " << opts.out_csv << "\n";
  return 0;
}

// selfcheck ------------------------------------------------------------------

int run_selfcheck() {
  int violations = 0;
  auto report = [&violations](const std::string& name, bool ok) {
    std::cout << (ok ? "ok        " : "VIOLATION ") << name << "\n";
    if (!ok) ++violations;
  };

  {
    // greedy against the exhaustive optimum on small random instances
    Rng rng(20260810);
    bool cover_ok = true;
    bool bound_ok = true;
    for (int rep = 0; rep < 30; ++rep) {
      const std::size_t n = 3 + rng.below(10);
      std::vector<Trajectory> items;
      for (std::size_t i = 0; i < n; ++i) {
        const double heading = rng.uniform(-std::numbers::pi, std::numbers::pi);
        const double speed = rng.uniform(0.0, 10.0);
        std::vector<Vec2> pts;
        for (int k = 1; k <= 4; ++k) {
          pts.push_back({0.5 * k * speed * std::cos(heading) + rng.normal(0.0, 0.3),
                         0.5 * k * speed * std::sin(heading) + rng.normal(0.0, 0.3)});
        }
        items.emplace_back(std::move(pts), 0.5);
      }
      const TrajectoryCorpus corpus(std::move(items));
      std::vector<double> dists;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          dists.push_back(distance(corpus[a], corpus[b], DistanceKind::MaxL2));
        }
      }
      std::sort(dists.begin(), dists.end());
      const CoverConfig config{std::max(dists[dists.size() / 3], 1e-6),
                               DistanceKind::MaxL2, std::nullopt};
      const CoverResult greedy = greedy_cover(corpus, config);
      const TrajectorySet optimum = brute_force_cover(corpus, config);
      for (const Trajectory& item : corpus.items()) {
        double best = std::numeric_limits<double>::infinity();
        for (const Trajectory& mode : greedy.set.modes) {
          best = std::min(best, distance(item, mode, config.kind));
        }
        cover_ok = cover_ok && best <= config.epsilon;
      }
      const double bound = std::ceil(std::log(static_cast<double>(n)));
      bound_ok = bound_ok && optimum.size() <= greedy.set.size() &&
                 static_cast<double>(greedy.set.size()) <=
                     bound * static_cast<double>(optimum.size());
    }
    report("greedy cover matches its contract on 30 random instances", cover_ok);
    report("greedy size within ceil(ln n) of the exhaustive optimum", bound_ok);
  }

  {
    // constant lateral acceleration must trace the predicted circle
    const IntegrationConfig cfg{0.1, 10, 60};
    const Trajectory arc = integrate(query_state(4.0), {2.0, 0.0}, {}, cfg);
    double worst = 0.0;
    for (const Vec2& p : arc.points()) {
      worst = std::max(worst, std::abs(norm(p - Vec2{-8.0, 0.0}) - 8.0));
    }
    report("circular-motion rollout within 0.05 m of radius v^2/a_lat", worst <= 0.05);
  }

  {
    Rng rng(999);
    bool grad_ok = true;
    for (int rep = 0; rep < 50; ++rep) {
      const std::size_t dim = 2 + rng.below(4);
      const std::size_t modes = 3 + rng.below(5);
      auto set = std::make_shared<TrajectorySet>();
      for (std::size_t m = 0; m < modes; ++m) {
        std::vector<Vec2> pts;
        for (int k = 0; k < 4; ++k) pts.push_back({rng.uniform(-5, 5), rng.uniform(-5, 5)});
        set->modes.emplace_back(std::move(pts), 0.5);
      }
      std::vector<double> weights(modes * dim);
      for (double& w : weights) w = rng.uniform(-1.0, 1.0);
      const SoftmaxModel model(set, dim, std::move(weights));
      FeatureVector f(dim);
      for (double& v : f) v = rng.uniform(-2.0, 2.0);
      grad_ok = grad_ok && gradient_check(model, f, rng.below(modes)) <= 1e-5;
    }
    report("cross-entropy gradient matches finite differences (50 draws)", grad_ok);
  }

  if (violations > 0) {
    std::cerr << violations << " selfcheck violation(s)\n";
    return 3;
  }
  std::cout << "selfcheck passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trajectory-set construction and multimodal prediction evaluation"};
  app.require_subcommand(1);

  // gen-corpus
  SynthConfig synth;
  std::string gen_out = "corpus.jsonl";
  auto* gen = app.add_subcommand("gen-corpus", "generate a synthetic kinematic corpus");
  gen->add_option("--count", synth.count, "number of records");
  gen->add_option("--horizon", synth.horizon_s, "prediction horizon (s)");
  gen->add_option("--dt", synth.dt, "sampling interval (s)");
  gen->add_option("--speed-min", synth.speed_min, "minimum seed speed (m/s)");
  gen->add_option("--speed-max", synth.speed_max, "maximum seed speed (m/s)");
  gen->add_option("--noise-std", synth.noise_std, "position noise std (m)");
  gen->add_option("--piecewise-prob", synth.piecewise_prob,
                  "probability of a mid-horizon control switch");
  gen->add_option("--lat-std", synth.lat_accel_std, "lateral acceleration std (m/s^2)");
  gen->add_option("--lat-max", synth.lat_accel_max, "lateral acceleration clip (m/s^2)");
  gen->add_option("--lon-std", synth.lon_accel_std, "longitudinal acceleration std (m/s^2)");
  gen->add_option("--lon-max", synth.lon_accel_max, "longitudinal acceleration clip (m/s^2)");
  gen->add_option("--wheelbase", synth.vehicle.wheelbase_b, "vehicle wheelbase (m)");
  gen->add_option("--substeps", synth.substeps, "Euler substeps per sample");
  gen->add_option("--seed", synth.rng_seed, "random seed");
  gen->add_option("--out", gen_out, "output JSONL path");

  // build-set
  BuildSetOptions build;
  auto* bs = app.add_subcommand("build-set", "construct a fixed, dynamic, or hybrid set");
  bs->add_option("--mode", build.mode, "fixed | dynamic | hybrid")
      ->check(CLI::IsMember({"fixed", "dynamic", "hybrid"}));
  bs->add_option("--corpus", build.corpus.path, "corpus JSONL (fixed and hybrid)");
  bs->add_option("--min-displacement", build.corpus.min_displacement,
                 "drop near-stationary records (m)");
  bs->add_option("--epsilon", build.epsilon, "coverage tolerance (m)");
  bs->add_option("--distance", build.distance, "coverage metric: max | avg | rms")
      ->check(CLI::IsMember({"max", "avg", "rms"}));
  bs->add_option("--random-trials", build.random_trials,
                 "use the randomized bagging variant with this many trials");
  bs->add_option("--seed", build.seed, "random seed for --random-trials");
  bs->add_option("--max-set-size", build.max_set_size, "cap on the cover size (0 = none)");
  bs->add_option("--speed", build.speed, "query speed for dynamic/hybrid modes (m/s)");
  bs->add_option("--substeps", build.substeps, "Euler substeps per sample");
  bs->add_option("--horizon", build.horizon_s, "horizon for corpus-free dynamic sets (s)");
  bs->add_option("--dt", build.dt, "dt for corpus-free dynamic sets (s)");
  bs->add_option("--out", build.out, "output set JSON path");
  GridOptions build_grid;
  add_grid_options(bs, build_grid);

  // cover-report
  CorpusOptions report_corpus;
  std::string report_set;
  double report_epsilon = 2.0;
  std::string report_distance = "max";
  std::string report_json = "coverage.json";
  std::string report_csv = "residuals.csv";
  auto* cr = app.add_subcommand("cover-report", "coverage of a corpus by a set");
  add_corpus_options(cr, report_corpus);
  cr->add_option("--set", report_set, "set JSON file")->required();
  cr->add_option("--epsilon", report_epsilon, "coverage tolerance (m)");
  cr->add_option("--distance", report_distance, "coverage metric")
      ->check(CLI::IsMember({"max", "avg", "rms"}));
  cr->add_option("--out-json", report_json, "coverage report path");
  cr->add_option("--out-csv", report_csv, "residual histogram path");

  // coverage-curve
  CorpusOptions curve_corpus;
  GridOptions curve_grid;
  std::string curve_epsilons = "8,5,4,3,2";
  std::string curve_distance = "max";
  int curve_substeps = 10;
  std::string curve_out = "coverage_curve.csv";
  auto* cc = app.add_subcommand("coverage-curve",
                                "cover sizes per epsilon for fixed, hybrid, dynamic sets");
  add_corpus_options(cc, curve_corpus);
  add_grid_options(cc, curve_grid);
  cc->add_option("--epsilons", curve_epsilons, "epsilon ladder (m, comma list)");
  cc->add_option("--distance", curve_distance, "coverage metric")
      ->check(CLI::IsMember({"max", "avg", "rms"}));
  cc->add_option("--substeps", curve_substeps, "Euler substeps per sample");
  cc->add_option("--out", curve_out, "output CSV path");

  // baselines
  CorpusOptions base_corpus;
  std::string base_ks = "1,5,10,15";
  std::size_t base_hit_k = 5;
  double base_hit_d = 2.0;
  int base_substeps = 10;
  std::string base_json = "baselines.json";
  std::string base_csv = "baselines.csv";
  auto* bl = app.add_subcommand("baselines", "physics models and oracle metric rows");
  add_corpus_options(bl, base_corpus);
  bl->add_option("--ks", base_ks, "minADE k values (comma list)");
  bl->add_option("--hit-k", base_hit_k, "hit rate k");
  bl->add_option("--hit-d", base_hit_d, "hit rate distance (m)");
  bl->add_option("--substeps", base_substeps, "Euler substeps per sample");
  bl->add_option("--out-json", base_json, "output JSON path");
  bl->add_option("--out-csv", base_csv, "output CSV path");

  // train
  CorpusOptions train_corpus;
  std::string train_set;
  std::size_t train_epochs = 50;
  double train_lr = 1e-2;
  std::uint64_t train_seed = 0;
  std::size_t train_batch = 32;
  std::string train_out = "model.json";
  auto* tr = app.add_subcommand("train", "train the softmax classifier over a set");
  add_corpus_options(tr, train_corpus);
  tr->add_option("--set", train_set, "set JSON file")->required();
  tr->add_option("--epochs", train_epochs, "training epochs");
  tr->add_option("--lr", train_lr, "learning rate");
  tr->add_option("--seed", train_seed, "shuffle seed");
  tr->add_option("--batch", train_batch, "mini-batch size");
  tr->add_option("--out", train_out, "output model path");

  // evaluate
  EvaluateOptions eval;
  auto* ev = app.add_subcommand("evaluate", "evaluate a predictor against a corpus");
  add_corpus_options(ev, eval.corpus);
  ev->add_option("--set", eval.set_path, "set JSON file")->required();
  auto* model_opt = ev->add_option("--model", eval.model_path, "trained model JSON");
  auto* oracle_flag = ev->add_flag("--oracle-probs", eval.oracle_probs,
                                   "assign probability 1 to the matched mode");
  model_opt->excludes(oracle_flag);
  ev->add_option("--ks", eval.ks, "minADE k values (comma list)");
  ev->add_option("--hit-k", eval.hit_k, "hit rate k");
  ev->add_option("--hit-d", eval.hit_d, "hit rate distance (m)");
  ev->add_option("--match-distance", eval.match_distance,
                 "label matching metric for --oracle-probs")
      ->check(CLI::IsMember({"max", "avg", "rms"}));
  ev->add_flag("--ablate-match", eval.ablate_match,
               "emit one row per matching metric (max, avg, rms)");
  ev->add_option("--out-json", eval.out_json, "output JSON path");
  ev->add_option("--out-csv", eval.out_csv, "output CSV path");

  // selfcheck
  app.add_subcommand("selfcheck", "run built-in oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) return run_gen_corpus(synth, gen_out);
    if (bs->parsed()) {
      build.grid = build_grid;
      return run_build_set(build);
    }
    if (cr->parsed()) {
      return run_cover_report(report_corpus, report_set, report_epsilon, report_distance,
                              report_json, report_csv);
    }
    if (cc->parsed()) {
      return run_coverage_curve(curve_corpus, curve_grid, curve_epsilons, curve_distance,
                                curve_substeps, curve_out);
    }
    if (bl->parsed()) {
      return run_baselines(base_corpus, base_ks, base_hit_k, base_hit_d, base_substeps,
                           base_json, base_csv);
    }
    if (tr->parsed()) {
      return run_train(train_corpus, train_set, train_epochs, train_lr, train_seed,
                       train_batch, train_out);
    }
    if (ev->parsed()) return run_evaluate(eval);
    return run_selfcheck();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
