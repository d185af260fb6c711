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

#include "covertraj/io.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace covertraj {

using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DataError(std::string("malformed JSON in ") + what);
  return j;
}

// Rethrows missing-key / wrong-type errors from the JSON layer as DataError.
template <typename Fn>
auto translate_json_errors(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw DataError(std::string(what) + ": " + e.what());
  }
}

json state_to_json(const AgentState& s) {
  return json{{"x", s.x},         {"y", s.y},         {"heading", s.heading},
              {"speed", s.speed}, {"accel", s.accel}, {"yaw_rate", s.yaw_rate}};
}

AgentState state_from_json(const json& j) {
  AgentState s;
  s.x = j.at("x").get<double>();
  s.y = j.at("y").get<double>();
  s.heading = j.at("heading").get<double>();
  s.speed = j.at("speed").get<double>();
  s.accel = j.at("accel").get<double>();
  s.yaw_rate = j.at("yaw_rate").get<double>();
  if (s.speed < 0.0) throw DataError("seed state speed must be non-negative");
  return s;
}

json points_to_json(std::span<const Vec2> points) {
  json arr = json::array();
  for (const Vec2& p : points) arr.push_back(json::array({p.x, p.y}));
  return arr;
}

std::vector<Vec2> points_from_json(const json& arr, const char* what) {
  if (!arr.is_array() || arr.empty()) throw DataError(std::string(what) + " must be a non-empty array");
  std::vector<Vec2> points;
  points.reserve(arr.size());
  for (const json& p : arr) {
    if (!p.is_array() || p.size() != 2) throw DataError(std::string(what) + " entries must be [x, y]");
    points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return points;
}

}  // namespace

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp.string());
    out << content;
    if (!out.good()) throw DataError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string corpus_to_jsonl(const CorpusFile& corpus) {
  std::ostringstream out;
  out << json{{"version", corpus.version},
              {"horizon_steps", corpus.horizon_steps},
              {"dt", corpus.dt}}
             .dump()
      << '\n';
  for (const CorpusRecord& r : corpus.records) {
    out << json{{"id", r.id},
                {"dt", corpus.dt},
                {"seed_state", state_to_json(r.seed_state)},
                {"future", points_to_json(r.future)}}
               .dump()
        << '\n';
  }
  return out.str();
}

CorpusFile corpus_from_jsonl(const std::string& text) {
  return translate_json_errors("corpus file", [&text]() -> CorpusFile {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw DataError("corpus file is empty");

  const json header = parse(line, "corpus header");
  CorpusFile corpus;
  corpus.version = header.at("version").get<int>();
  if (corpus.version != 1) {
    throw DataError("unsupported corpus version " + std::to_string(corpus.version));
  }
  corpus.horizon_steps = header.at("horizon_steps").get<int>();
  corpus.dt = header.at("dt").get<double>();
  if (corpus.horizon_steps < 1 || !(corpus.dt > 0.0)) {
    throw DataError("corpus header must declare a positive horizon and dt");
  }

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = parse(line, "corpus record");
    CorpusRecord r;
    r.id = j.at("id").get<std::int64_t>();
    if (j.at("dt").get<double>() != corpus.dt) {
      throw DataError("record dt differs from the header");
    }
    r.seed_state = state_from_json(j.at("seed_state"));
    r.future = points_from_json(j.at("future"), "future");
    if (r.future.size() != static_cast<std::size_t>(corpus.horizon_steps)) {
      throw DataError("record horizon differs from the header");
    }
    corpus.records.push_back(std::move(r));
  }
  return corpus;
  });
}

void write_corpus_file(const std::filesystem::path& path, const CorpusFile& corpus) {
  write_atomic(path, corpus_to_jsonl(corpus));
}

CorpusFile read_corpus_file(const std::filesystem::path& path) {
  return corpus_from_jsonl(slurp(path));
}

TrajectoryCorpus to_corpus(const CorpusFile& corpus, double min_displacement) {
  std::vector<Trajectory> items;
  std::vector<AgentState> seeds;
  items.reserve(corpus.records.size());
  seeds.reserve(corpus.records.size());
  for (const CorpusRecord& r : corpus.records) {
    Trajectory normalized =
        normalize_frame(Trajectory(r.future, corpus.dt), r.seed_state);
    if (min_displacement > 0.0) {
      double reach = 0.0;
      for (const Vec2& p : normalized.points()) reach = std::max(reach, norm(p));
      if (reach < min_displacement) continue;  // effectively stationary
    }
    items.push_back(std::move(normalized));
    seeds.push_back(r.seed_state);
  }
  return TrajectoryCorpus(std::move(items), std::move(seeds));
}

std::string set_to_json(const TrajectorySet& set, double epsilon, DistanceKind kind) {
  json j{{"provenance", to_string(set.provenance)},
         {"epsilon", epsilon},
         {"distance_kind", to_string(kind)}};
  json modes = json::array();
  for (const Trajectory& mode : set.modes) modes.push_back(points_to_json(mode.points()));
  j["modes"] = std::move(modes);
  if (!set.profiles.empty()) {
    json profiles = json::array();
    for (const ControlProfile& p : set.profiles) {
      profiles.push_back(json::array({p.a_lat, p.a_lon}));
    }
    j["profiles"] = std::move(profiles);
  }
  if (!set.source_indices.empty()) j["source_indices"] = set.source_indices;
  return j.dump(2) + "\n";
}

SetFileData set_from_json(const std::string& text, double dt) {
  return translate_json_errors("set file", [&text, dt]() -> SetFileData {
  const json j = parse(text, "set file");
  SetFileData data;
  data.set.provenance = provenance_from_string(j.at("provenance").get<std::string>());
  data.epsilon = j.at("epsilon").get<double>();
  data.kind = distance_kind_from_string(j.at("distance_kind").get<std::string>());

  const json& modes = j.at("modes");
  if (!modes.is_array() || modes.empty()) throw DataError("set file needs at least one mode");
  for (const json& mode : modes) {
    data.set.modes.emplace_back(points_from_json(mode, "mode"), dt);
  }
  if (j.contains("profiles")) {
    for (const json& p : j.at("profiles")) {
      if (!p.is_array() || p.size() != 2) throw DataError("profiles entries must be [a_lat, a_lon]");
      data.set.profiles.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    if (data.set.profiles.size() > data.set.modes.size()) {
      throw DataError("more profiles than modes");
    }
  }
  if (j.contains("source_indices")) {
    data.set.source_indices = j.at("source_indices").get<std::vector<std::size_t>>();
  }
  return data;
  });
}

void write_set_file(const std::filesystem::path& path, const TrajectorySet& set, double epsilon,
                    DistanceKind kind) {
  write_atomic(path, set_to_json(set, epsilon, kind));
}

SetFileData read_set_file(const std::filesystem::path& path, double dt) {
  return set_from_json(slurp(path), dt);
}

std::uint64_t set_fingerprint(const TrajectorySet& set) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  auto mix = [&hash](std::uint64_t bits) {
    for (int shift = 0; shift < 64; shift += 8) {
      hash ^= (bits >> shift) & 0xFFu;
      hash *= 0x100000001B3ULL;
    }
  };
  mix(set.modes.size());
  for (const Trajectory& mode : set.modes) {
    mix(mode.size());
    for (const Vec2& p : mode.points()) {
      mix(std::bit_cast<std::uint64_t>(p.x));
      mix(std::bit_cast<std::uint64_t>(p.y));
    }
  }
  return hash;
}

std::string model_to_json(const ModelFileData& model) {
  json rows = json::array();
  for (std::size_t m = 0; m < model.num_modes; ++m) {
    json row = json::array();
    for (std::size_t j = 0; j < model.feature_dim; ++j) {
      row.push_back(model.weights[m * model.feature_dim + j]);
    }
    rows.push_back(std::move(row));
  }
  std::ostringstream fp;
  fp << std::hex << model.set_fingerprint;
  return json{{"version", 1},
              {"feature_dim", model.feature_dim},
              {"num_modes", model.num_modes},
              {"weights", std::move(rows)},
              {"set_fingerprint", fp.str()},
              {"loss_curve", model.loss_curve}}
             .dump(2) +
         "\n";
}

ModelFileData model_from_json(const std::string& text) {
  return translate_json_errors("model file", [&text]() -> ModelFileData {
  const json j = parse(text, "model file");
  if (j.at("version").get<int>() != 1) throw DataError("unsupported model version");
  ModelFileData model;
  model.feature_dim = j.at("feature_dim").get<std::size_t>();
  model.num_modes = j.at("num_modes").get<std::size_t>();
  model.set_fingerprint =
      std::stoull(j.at("set_fingerprint").get<std::string>(), nullptr, 16);
  const json& rows = j.at("weights");
  if (rows.size() != model.num_modes) throw DataError("weight row count mismatch");
  for (const json& row : rows) {
    if (row.size() != model.feature_dim) throw DataError("weight row length mismatch");
    for (const json& w : row) model.weights.push_back(w.get<double>());
  }
  if (j.contains("loss_curve")) {
    model.loss_curve = j.at("loss_curve").get<std::vector<double>>();
  }
  return model;
  });
}

void write_model_file(const std::filesystem::path& path, const ModelFileData& model) {
  write_atomic(path, model_to_json(model));
}

ModelFileData read_model_file(const std::filesystem::path& path) {
  return model_from_json(slurp(path));
}

SoftmaxModel bind_model(const ModelFileData& data, std::shared_ptr<const TrajectorySet> set) {
  if (!set) throw EmptySet("bind_model needs a set");
  if (set_fingerprint(*set) != data.set_fingerprint) {
    throw DataError("model was trained against a different trajectory set");
  }
  if (set->modes.size() != data.num_modes) {
    throw DataError("model mode count does not match the set");
  }
  return SoftmaxModel(std::move(set), data.feature_dim, data.weights);
}

}  // namespace covertraj
