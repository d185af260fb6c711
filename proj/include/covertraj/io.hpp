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
#include <filesystem>
#include <string>
#include <vector>

#include "covertraj/classifier.hpp"
#include "covertraj/cover.hpp"
#include "covertraj/trajectory.hpp"

namespace covertraj {

/// One observed instance: the agent's state at prediction time and its
/// world-frame future positions.
struct CorpusRecord {
  std::int64_t id{0};
  AgentState seed_state;
  std::vector<Vec2> future;
};

/// JSONL corpus: a header line {version, horizon_steps, dt} followed by one
/// record per line {id, dt, seed_state, future}.
struct CorpusFile {
  int version{1};
  int horizon_steps{0};
  double dt{0.0};
  std::vector<CorpusRecord> records;
};

/// Write `content` via a temp file and rename, so readers never observe a
/// partial file.
void write_atomic(const std::filesystem::path& path, const std::string& content);

std::string corpus_to_jsonl(const CorpusFile& corpus);
CorpusFile corpus_from_jsonl(const std::string& text);
void write_corpus_file(const std::filesystem::path& path, const CorpusFile& corpus);
CorpusFile read_corpus_file(const std::filesystem::path& path);

/// Agent-frame corpus for the set-construction and evaluation operations:
/// each future normalized by its own seed state, seed states retained.
/// Records whose future never leaves a `min_displacement` radius around the
/// agent are dropped (0 keeps everything).
TrajectoryCorpus to_corpus(const CorpusFile& corpus, double min_displacement = 0.0);

/// Trajectory set JSON: {provenance, epsilon, distance_kind, modes,
/// profiles?, source_indices?}. Mode points are agent-frame.
struct SetFileData {
  TrajectorySet set;
  double epsilon{0.0};
  DistanceKind kind{DistanceKind::MaxL2};
};

std::string set_to_json(const TrajectorySet& set, double epsilon, DistanceKind kind);
/// `dt` supplies the sampling interval the stored point lists do not carry.
SetFileData set_from_json(const std::string& text, double dt);
void write_set_file(const std::filesystem::path& path, const TrajectorySet& set, double epsilon,
                    DistanceKind kind);
SetFileData read_set_file(const std::filesystem::path& path, double dt);

/// 64-bit FNV-1a over the mode geometry; ties a serialized model to the set
/// it was trained against.
std::uint64_t set_fingerprint(const TrajectorySet& set);

struct ModelFileData {
  std::size_t feature_dim{0};
  std::size_t num_modes{0};
  std::vector<double> weights;  // row-major
  std::uint64_t set_fingerprint{0};
  std::vector<double> loss_curve;
};

std::string model_to_json(const ModelFileData& model);
ModelFileData model_from_json(const std::string& text);
void write_model_file(const std::filesystem::path& path, const ModelFileData& model);
ModelFileData read_model_file(const std::filesystem::path& path);

/// Rebuild the runtime model, verifying the fingerprint against `set`.
SoftmaxModel bind_model(const ModelFileData& data, std::shared_ptr<const TrajectorySet> set);

}  // namespace covertraj
