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

#include "symground/questionnaire.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <numeric>
#include <unordered_map>

#include "json_util.h"
#include "symground/common.h"
#include "symground/metrics.h"

namespace symground {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::string block_key(const std::string& user_id, int post_index) {
  return str_cat(user_id, "\t", post_index);
}

uint64_t mix_seed(uint64_t seed, Symptom symptom) {
  return splitmix64(seed ^ (static_cast<uint64_t>(symptom) + 1) *
                               0xD1B54A32D192ED03ull);
}

// Stratified three-way split of example indices (train/dev/heldout).
struct ThreeWaySplit {
  std::vector<int> train;
  std::vector<int> dev;
  std::vector<int> heldout;
};

ThreeWaySplit stratified_split(const std::vector<int>& labels, uint64_t seed) {
  std::vector<int> by_class[2];
  for (size_t i = 0; i < labels.size(); ++i) {
    by_class[labels[i] == 1 ? 1 : 0].push_back(static_cast<int>(i));
  }
  for (int c = 0; c < 2; ++c) {
    if (by_class[c].size() < 3)
      fail_input("symptom dataset needs at least 3 \"",
                 c == 1 ? "positive" : "negative", "\" examples, got ",
                 by_class[c].size());
  }
  ThreeWaySplit split;
  Rng rng(seed);
  for (int c = 0; c < 2; ++c) {
    auto& indices = by_class[c];
    rng.shuffle(indices);
    const size_t n = indices.size();
    size_t n_dev = std::max<size_t>(1, n / 10);
    size_t n_held = std::max<size_t>(1, n / 10);
    size_t n_train = n - n_dev - n_held;
    for (size_t i = 0; i < n; ++i) {
      if (i < n_train) {
        split.train.push_back(indices[i]);
      } else if (i < n_train + n_dev) {
        split.dev.push_back(indices[i]);
      } else {
        split.heldout.push_back(indices[i]);
      }
    }
  }
  return split;
}

std::vector<TrainExample> encode_dataset(const WeakDataset& dataset,
                                         const PostEncoder& encoder) {
  std::vector<TrainExample> out;
  out.reserve(dataset.examples.size());
  for (const auto& ex : dataset.examples) {
    TrainExample te;
    te.x = encoder.encode(ex.text);
    te.label = ex.label;
    out.push_back(std::move(te));
  }
  return out;
}

std::vector<TrainExample> select(const std::vector<TrainExample>& all,
                                 const std::vector<int>& indices) {
  std::vector<TrainExample> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(all[i]);
  return out;
}

}  // namespace

HashedEncoder::HashedEncoder(int dim, uint64_t seed, int max_tokens)
    : dim_(dim), seed_(seed), max_tokens_(max_tokens) {
  if (dim < 1) fail_input("encoder dim must be >= 1");
  if (max_tokens < 1) fail_input("encoder max_tokens must be >= 1");
}

Matrix HashedEncoder::encode(std::string_view text, const EncodeKey&) const {
  const std::string norm = to_lower(normalize_text(text));
  const auto tokens = tokenize_words(norm);
  const int n = std::min<int>(static_cast<int>(tokens.size()), max_tokens_);
  if (n == 0) return Matrix(1, dim_);  // zero row for empty text

  const double bound = std::sqrt(3.0 / dim_);
  Matrix out(n, dim_);
  for (int t = 0; t < n; ++t) {
    const uint64_t h = fnv1a64(tokens[t].lower);
    for (int j = 0; j < dim_; ++j) {
      const uint64_t v = splitmix64(h ^ splitmix64(seed_ + 0x9E3779B97F4A7C15ull *
                                                               (j + 1)));
      const double unit = static_cast<double>(v >> 11) * 0x1.0p-53;
      out.at(t, j) = (2.0 * unit - 1.0) * bound;
    }
  }
  return out;
}

std::string HashedEncoder::id() const {
  return str_cat("hashed:d", dim_, ":s", seed_, ":t", max_tokens_);
}

PrecomputedEncoder::PrecomputedEncoder(const std::string& path) {
  const std::string buffer = read_file(path);
  if (buffer.size() < 16 || buffer.substr(0, 8) != "SGEMB001")
    fail_input(path, ": not an embedding file");
  uint64_t len = 0;
  std::memcpy(&len, buffer.data() + 8, sizeof(len));
  if (16 + len > buffer.size()) fail_input(path, ": truncated embedding header");
  ordered_json meta;
  try {
    meta = ordered_json::parse(buffer.substr(16, len));
  } catch (const std::exception& e) {
    fail_input(path, ": bad embedding metadata: ", e.what());
  }
  dim_ = meta.at("dim").get<int>();
  if (dim_ < 1) fail_input(path, ": invalid embedding dim");
  size_t offset = 16 + len;
  for (const auto& entry : meta.at("entries")) {
    const std::string user = entry.at("user_id").get<std::string>();
    const int index = entry.at("post_index").get<int>();
    const int rows = entry.at("rows").get<int>();
    if (rows < 1) fail_input(path, ": invalid block rows");
    Matrix block(rows, dim_);
    const size_t bytes = block.data.size() * sizeof(double);
    if (offset + bytes > buffer.size())
      fail_input(path, ": truncated embedding payload");
    std::memcpy(block.data.data(), buffer.data() + offset, bytes);
    offset += bytes;
    blocks_.emplace_back(block_key(user, index), std::move(block));
  }
  id_ = str_cat("precomputed:d", dim_, ":", hash_hex(fnv1a64(buffer)));
}

const Matrix* PrecomputedEncoder::find(const std::string& key) const {
  for (const auto& [k, block] : blocks_) {
    if (k == key) return &block;
  }
  return nullptr;
}

Matrix PrecomputedEncoder::encode(std::string_view, const EncodeKey& key) const {
  if (key.user_id.empty() || key.post_index < 0)
    fail_input("precomputed encoder needs a (user_id, post_index) key");
  const Matrix* block = find(block_key(key.user_id, key.post_index));
  if (block == nullptr)
    fail_input("no precomputed embedding for user \"", key.user_id, "\" post ",
               key.post_index);
  return *block;
}

void save_embedding_file(const std::vector<EmbeddingEntry>& entries, int dim,
                         const std::string& path) {
  ordered_json meta;
  meta["dim"] = dim;
  ordered_json list = ordered_json::array();
  for (const auto& e : entries) {
    if (e.block.cols != dim)
      fail_input("embedding block for user \"", e.key.user_id,
                 "\" has dim ", e.block.cols, ", expected ", dim);
    ordered_json ej;
    ej["user_id"] = e.key.user_id;
    ej["post_index"] = e.key.post_index;
    ej["rows"] = e.block.rows;
    list.push_back(std::move(ej));
  }
  meta["entries"] = std::move(list);
  const std::string meta_str = meta.dump();

  std::string buffer;
  buffer += "SGEMB001";
  uint64_t len = meta_str.size();
  buffer.append(reinterpret_cast<const char*>(&len), sizeof(len));
  buffer += meta_str;
  for (const auto& e : entries) {
    buffer.append(reinterpret_cast<const char*>(e.block.data.data()),
                  e.block.data.size() * sizeof(double));
  }
  write_file(path, buffer);
}

std::unique_ptr<PostEncoder> make_encoder(const EncoderConfig& config) {
  if (config.kind == "hashed") {
    return std::make_unique<HashedEncoder>(config.dim, config.seed,
                                           config.max_tokens);
  }
  if (config.kind == "precomputed") {
    if (config.embeddings_path.empty())
      fail_input("precomputed encoder needs embeddings_path");
    return std::make_unique<PrecomputedEncoder>(config.embeddings_path);
  }
  fail_input("unknown encoder kind \"", config.kind, "\"");
}

ConvSpec symptom_conv_spec(int input_dim) {
  ConvSpec spec;
  spec.filter_sizes = {2, 3, 4, 5, 6};
  spec.filters_per_size = 1;
  spec.input_dim = input_dim;
  spec.pooling = Pooling::kMax;
  spec.kmax = 1;
  return spec;
}

SymptomScore score_post(const SymptomClassifier& classifier,
                        const PostEncoder& encoder, std::string_view text,
                        const EncodeKey& key) {
  const Matrix input = encoder.encode(text, key);
  CnnForward fwd = cnn_forward(input, classifier.spec, classifier.params);
  SymptomScore result;
  result.score = softmax_positive(fwd.logits);
  if (fwd.features.size() != result.hidden.size())
    fail_runtime("symptom classifier produced ", fwd.features.size(),
                 " pooled features, expected ", result.hidden.size());
  std::copy(fwd.features.begin(), fwd.features.end(), result.hidden.begin());
  return result;
}

SymptomClassifier train_symptom_classifier(Symptom symptom,
                                           const WeakDataset& dataset,
                                           const PostEncoder& encoder,
                                           const TrainConfig& config,
                                           SymptomTrainReport* report) {
  size_t n_pos = 0;
  size_t n_neg = 0;
  for (const auto& ex : dataset.examples) (ex.label == 1 ? n_pos : n_neg) += 1;
  if (n_pos == 0 || n_neg == 0)
    fail_input("symptom dataset for \"", symptom_name(symptom),
               "\" is single-class (", n_pos, " positives, ", n_neg,
               " negatives)");

  const auto all = encode_dataset(dataset, encoder);
  std::vector<int> labels(all.size());
  for (size_t i = 0; i < all.size(); ++i) labels[i] = all[i].label;
  ThreeWaySplit split = stratified_split(labels, config.seed);

  CnnClassifierModel model(symptom_conv_spec(encoder.dim()),
                           mix_seed(config.seed, symptom));
  TrainResult history =
      train(model, select(all, split.train), select(all, split.dev), config);

  std::vector<int> preds;
  std::vector<int> truth;
  for (int i : split.heldout) {
    preds.push_back(model.probability(all[i].x) >= 0.5 ? 1 : 0);
    truth.push_back(all[i].label);
  }
  const double held_f1 = f1_positive(preds, truth);
  if (report != nullptr) {
    report->train = history;
    report->heldout_f1 = held_f1;
    report->n_train = split.train.size();
    report->n_dev = split.dev.size();
    report->n_heldout = split.heldout.size();
  }
  log_info("symptom ", symptom_name(symptom), ": trained ", split.train.size(),
           " examples, held-out F1 ", held_f1);

  SymptomClassifier classifier;
  classifier.symptom = symptom;
  classifier.spec = model.spec();
  classifier.params = model.params();
  classifier.frozen = true;
  return classifier;
}

QuestionnaireModel::QuestionnaireModel(
    std::vector<SymptomClassifier> classifiers) {
  if (classifiers.size() != kNumSymptoms)
    fail_input("questionnaire needs exactly ", kNumSymptoms,
               " classifiers, got ", classifiers.size());
  std::array<bool, kNumSymptoms> seen{};
  for (auto& c : classifiers) {
    const int s = static_cast<int>(c.symptom);
    if (seen[s])
      fail_input("duplicate classifier for symptom \"",
                 symptom_name(c.symptom), "\"");
    seen[s] = true;
    classifiers_[s] = std::move(c);
  }
}

uint64_t QuestionnaireModel::checksum() const {
  uint64_t h = 0xCBF29CE484222325ull;
  for (const auto& c : classifiers_) {
    const uint64_t sub = c.params.checksum();
    const auto* p = reinterpret_cast<const unsigned char*>(&sub);
    for (size_t i = 0; i < sizeof(sub); ++i) {
      h ^= p[i];
      h *= 0x100000001B3ull;
    }
  }
  return h;
}

QuestionnaireOutput apply_questionnaire(const QuestionnaireModel& model,
                                        const PostEncoder& encoder,
                                        const PostTimeline& timeline) {
  const int n = static_cast<int>(timeline.posts.size());
  QuestionnaireOutput out;
  out.scores = Matrix(n, kNumSymptoms);
  out.vectors = Matrix(n, kNumSymptoms * 5);
  for (int i = 0; i < n; ++i) {
    const EncodeKey key{timeline.user_id, i};
    const Matrix input = encoder.encode(timeline.posts[i].text, key);
    for (int s = 0; s < kNumSymptoms; ++s) {
      const SymptomClassifier& c = model.classifier(static_cast<Symptom>(s));
      CnnForward fwd = cnn_forward(input, c.spec, c.params);
      out.scores.at(i, s) = softmax_positive(fwd.logits);
      for (int j = 0; j < 5; ++j) out.vectors.at(i, s * 5 + j) = fwd.features[j];
    }
  }
  return out;
}

void save_symptom_bundle(const QuestionnaireModel& model,
                         const SymptomBundleInfo& info, const std::string& dir) {
  ensure_directory(dir);
  ordered_json manifest;
  manifest["format"] = "sg-symptom-bundle@1";
  manifest["symptom_order"] = symptom_names();
  manifest["encoder"] = encoder_config_to_json(info.encoder);
  manifest["seed"] = info.seed;
  manifest["train"] = train_config_to_json(info.train_config);

  ordered_json checkpoints = ordered_json::object();
  ordered_json checksums = ordered_json::object();
  ordered_json f1s = ordered_json::object();
  for (int s = 0; s < kNumSymptoms; ++s) {
    const auto name = std::string(symptom_name(static_cast<Symptom>(s)));
    const std::string file = name + ".ckpt";
    const SymptomClassifier& c = model.classifier(static_cast<Symptom>(s));

    Checkpoint ckpt;
    ckpt.kind = "symptom-cnn";
    ckpt.seed = info.seed;
    ordered_json config;
    config["symptom"] = name;
    config["conv"] = conv_spec_to_json(c.spec);
    ckpt.config_json = config.dump();
    ckpt.params = c.params;
    const std::string path = (std::filesystem::path(dir) / file).string();
    save_checkpoint(ckpt, path);

    checkpoints[name] = file;
    checksums[file] = file_checksum_hex(path);
    f1s[name] = info.heldout_f1[s];
  }
  manifest["checkpoints"] = std::move(checkpoints);
  manifest["checksums"] = std::move(checksums);
  manifest["heldout_f1"] = std::move(f1s);
  write_file((std::filesystem::path(dir) / "manifest.json").string(),
             manifest.dump(2) + "\n");
}

LoadedSymptomBundle load_symptom_bundle(const std::string& dir) {
  const std::string manifest_path =
      (std::filesystem::path(dir) / "manifest.json").string();
  if (!file_exists(manifest_path))
    fail_dependency("no symptom bundle at ", dir, " (missing manifest.json)");
  ordered_json manifest;
  try {
    manifest = ordered_json::parse(read_file(manifest_path));
  } catch (const std::exception& e) {
    fail_input(manifest_path, ": ", e.what());
  }
  if (manifest.at("format").get<std::string>() != "sg-symptom-bundle@1")
    fail_input(manifest_path, ": unknown bundle format");

  LoadedSymptomBundle bundle;
  bundle.info.encoder = encoder_config_from_json(manifest.at("encoder"));
  bundle.info.seed = manifest.at("seed").get<uint64_t>();
  bundle.info.train_config = train_config_from_json(manifest.at("train"));

  std::vector<SymptomClassifier> classifiers;
  for (int s = 0; s < kNumSymptoms; ++s) {
    const auto name = std::string(symptom_name(static_cast<Symptom>(s)));
    const std::string file =
        manifest.at("checkpoints").at(name).get<std::string>();
    const std::string path = (std::filesystem::path(dir) / file).string();
    Checkpoint ckpt = load_checkpoint(path);
    if (ckpt.kind != "symptom-cnn")
      fail_input(path, ": unexpected checkpoint kind \"", ckpt.kind, "\"");
    const ordered_json config = ordered_json::parse(ckpt.config_json);
    SymptomClassifier c;
    c.symptom = symptom_from_name(config.at("symptom").get<std::string>());
    c.spec = conv_spec_from_json(config.at("conv"));
    c.params = std::move(ckpt.params);
    c.frozen = true;
    classifiers.push_back(std::move(c));
    bundle.info.heldout_f1[s] = manifest.at("heldout_f1").at(name).get<double>();
  }
  bundle.model = std::make_unique<QuestionnaireModel>(std::move(classifiers));
  bundle.encoder = make_encoder(bundle.info.encoder);
  return bundle;
}

SplitEvalReport evaluate_symptom_split(Symptom symptom, const PatternLibrary& lib,
                                       const Corpus& corpus, uint64_t split_seed,
                                       const std::vector<uint64_t>& run_seeds,
                                       const WeakDatasetConfig& weak_config,
                                       const TrainConfig& train_config,
                                       const PostEncoder& encoder) {
  if (run_seeds.empty()) fail_input("evaluate_symptom_split needs run seeds");
  auto [g1, g2] = split_pattern_library(lib, split_seed);

  const auto oracle = lexicon_sentiment_oracle();
  HarvestResult h1 = harvest_positives(corpus, g1, symptom, weak_config, oracle);
  HarvestResult h2 = harvest_positives(corpus, g2, symptom, weak_config, oracle);

  // Posts matching patterns from both groups are excluded so the two
  // subsets stay disjoint and the cross-evaluation has no leakage.
  SplitEvalReport report;
  report.symptom = symptom;
  std::vector<WeakExample> side1;
  std::vector<WeakExample> side2;
  for (auto& ex : h1.kept) {
    if (match_normalized(ex.text, g2).flags[static_cast<int>(symptom)]) {
      ++report.dropped_both;
    } else {
      side1.push_back(std::move(ex));
    }
  }
  for (auto& ex : h2.kept) {
    if (match_normalized(ex.text, g1).flags[static_cast<int>(symptom)]) {
      // Counted once via h1.
    } else {
      side2.push_back(std::move(ex));
    }
  }
  if (side1.empty())
    fail_input("pattern split for \"", symptom_name(symptom),
               "\": side g1 has zero positives");
  if (side2.empty())
    fail_input("pattern split for \"", symptom_name(symptom),
               "\": side g2 has zero positives");
  const double total = static_cast<double>(side1.size() + side2.size());
  report.coverage_g1 = static_cast<double>(side1.size()) / total;
  report.coverage_g2 = static_cast<double>(side2.size()) / total;

  auto cross_f1 = [&](const std::vector<WeakExample>& train_pos,
                      const PatternLibrary& train_lib,
                      const std::vector<WeakExample>& test_pos,
                      const PatternLibrary& test_lib, uint64_t seed) {
    WeakDatasetConfig cfg = weak_config;
    cfg.seed = seed;
    BuildOutput train_ds = build_symptom_dataset_from_positives(
        symptom, train_pos, corpus, train_lib, cfg, oracle);
    WeakDatasetConfig test_cfg = weak_config;
    test_cfg.seed = seed + 1;
    BuildOutput test_ds = build_symptom_dataset_from_positives(
        symptom, test_pos, corpus, test_lib, test_cfg, oracle);

    TrainConfig tc = train_config;
    tc.seed = seed;
    SymptomClassifier clf =
        train_symptom_classifier(symptom, train_ds.dataset, encoder, tc);
    std::vector<int> preds;
    std::vector<int> truth;
    for (const auto& ex : test_ds.dataset.examples) {
      preds.push_back(score_post(clf, encoder, ex.text).score >= 0.5 ? 1 : 0);
      truth.push_back(ex.label);
    }
    return f1_positive(preds, truth);
  };

  for (uint64_t seed : run_seeds) {
    report.f1_g1_to_g2.push_back(cross_f1(side1, g1, side2, g2, seed));
    report.f1_g2_to_g1.push_back(cross_f1(side2, g2, side1, g1, seed));
  }
  return report;
}

}  // namespace symground
