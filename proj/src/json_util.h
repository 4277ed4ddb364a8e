// Copyright 2026 The SymGround Authors.
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
//
// Internal JSON (de)serialization helpers for configuration structs
// that appear in manifests and checkpoints.

#ifndef SYMGROUND_SRC_JSON_UTIL_H_
#define SYMGROUND_SRC_JSON_UTIL_H_

#include <string>

#include "json.hpp"
#include "symground/common.h"
#include "symground/neuralkit.h"
#include "symground/questionnaire.h"

namespace symground {

using ordered_json = nlohmann::ordered_json;

inline ordered_json conv_spec_to_json(const ConvSpec& spec) {
  ordered_json j;
  j["filter_sizes"] = spec.filter_sizes;
  j["filters_per_size"] = spec.filters_per_size;
  j["input_dim"] = spec.input_dim;
  j["pooling"] = spec.pooling == Pooling::kKMax ? "kmax" : "max";
  j["k"] = spec.kmax;
  return j;
}

inline ConvSpec conv_spec_from_json(const ordered_json& j) {
  ConvSpec spec;
  spec.filter_sizes = j.at("filter_sizes").get<std::vector<int>>();
  spec.filters_per_size = j.at("filters_per_size").get<int>();
  spec.input_dim = j.at("input_dim").get<int>();
  const std::string pooling = j.at("pooling").get<std::string>();
  if (pooling == "kmax") {
    spec.pooling = Pooling::kKMax;
  } else if (pooling == "max") {
    spec.pooling = Pooling::kMax;
  } else {
    fail_input("unknown pooling \"", pooling, "\"");
  }
  spec.kmax = j.at("k").get<int>();
  spec.validate();
  return spec;
}

inline ordered_json train_config_to_json(const TrainConfig& config) {
  ordered_json j;
  j["class_weights"] = config.class_weights;
  j["max_lr"] = config.max_lr;
  j["batch_size"] = config.batch_size;
  j["early_stop_patience"] = config.early_stop_patience;
  j["l2_weight"] = config.l2_weight;
  j["max_epochs"] = config.max_epochs;
  j["seed"] = config.seed;
  return j;
}

inline TrainConfig train_config_from_json(const ordered_json& j) {
  TrainConfig config;
  config.class_weights = j.at("class_weights").get<std::array<double, 2>>();
  config.max_lr = j.at("max_lr").get<double>();
  config.batch_size = j.at("batch_size").get<int>();
  config.early_stop_patience = j.at("early_stop_patience").get<int>();
  config.l2_weight = j.at("l2_weight").get<double>();
  config.max_epochs = j.at("max_epochs").get<int>();
  config.seed = j.at("seed").get<uint64_t>();
  config.validate();
  return config;
}

inline ordered_json encoder_config_to_json(const EncoderConfig& config) {
  ordered_json j;
  j["kind"] = config.kind;
  j["dim"] = config.dim;
  j["seed"] = config.seed;
  j["max_tokens"] = config.max_tokens;
  if (!config.embeddings_path.empty()) j["embeddings_path"] = config.embeddings_path;
  return j;
}

inline EncoderConfig encoder_config_from_json(const ordered_json& j) {
  EncoderConfig config;
  config.kind = j.at("kind").get<std::string>();
  config.dim = j.at("dim").get<int>();
  config.seed = j.at("seed").get<uint64_t>();
  config.max_tokens = j.at("max_tokens").get<int>();
  if (j.contains("embeddings_path"))
    config.embeddings_path = j.at("embeddings_path").get<std::string>();
  return config;
}

// FNV hash of a file's raw bytes, hex-encoded.
inline std::string file_checksum_hex(const std::string& path) {
  return hash_hex(fnv1a64(read_file(path)));
}

}  // namespace symground

#endif  // SYMGROUND_SRC_JSON_UTIL_H_
