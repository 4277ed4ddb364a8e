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

#ifndef SYMGROUND_QUESTIONNAIRE_H_
#define SYMGROUND_QUESTIONNAIRE_H_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symground/corpus.h"
#include "symground/neuralkit.h"
#include "symground/patterns.h"
#include "symground/weaklabel.h"

namespace symground {

// Identifies a post within a corpus, for encoders that look embeddings
// up rather than compute them.
struct EncodeKey {
  std::string user_id;
  int post_index = -1;
};

// Turns post text into a T x D embedding sequence. Implementations are
// deterministic per text and immutable after construction.
class PostEncoder {
 public:
  virtual ~PostEncoder() = default;
  virtual int dim() const = 0;
  virtual Matrix encode(std::string_view text, const EncodeKey& key = {}) const = 0;
  virtual std::string id() const = 0;
};

// Default encoder: lowercased word tokens hashed into a seeded
// embedding table. Dependency-free stand-in for a pretrained encoder;
// empty text encodes as a single all-zero row.
class HashedEncoder : public PostEncoder {
 public:
  explicit HashedEncoder(int dim = 64, uint64_t seed = 0, int max_tokens = 128);
  int dim() const override { return dim_; }
  Matrix encode(std::string_view text, const EncodeKey& key = {}) const override;
  std::string id() const override;
  int max_tokens() const { return max_tokens_; }
  uint64_t seed() const { return seed_; }

 private:
  int dim_;
  uint64_t seed_;
  int max_tokens_;
};

// Reads per-post T x D float64 blocks keyed by (user_id, post index)
// from a precomputed-embedding file (docs/formats.md). Lookups for
// unknown keys raise Error(kInput).
class PrecomputedEncoder : public PostEncoder {
 public:
  explicit PrecomputedEncoder(const std::string& path);
  int dim() const override { return dim_; }
  Matrix encode(std::string_view text, const EncodeKey& key = {}) const override;
  std::string id() const override { return id_; }

 private:
  int dim_ = 0;
  std::string id_;
  std::vector<std::pair<std::string, Matrix>> blocks_;  // "user\tindex" -> block
  const Matrix* find(const std::string& key) const;
};

struct EmbeddingEntry {
  EncodeKey key;
  Matrix block;
};
void save_embedding_file(const std::vector<EmbeddingEntry>& entries, int dim,
                         const std::string& path);

struct EncoderConfig {
  std::string kind = "hashed";  // hashed | precomputed
  int dim = 64;
  uint64_t seed = 0;
  int max_tokens = 128;
  std::string embeddings_path;  // precomputed only
};

std::unique_ptr<PostEncoder> make_encoder(const EncoderConfig& config);

// --- Symptom classifiers -----------------------------------------------

// One CNN symptom classifier: filters of sizes [2..6], one per size,
// max pooling into a hidden vector of 5, linear head to 2 logits.
struct SymptomClassifier {
  Symptom symptom = Symptom::kAnhedonia;
  ConvSpec spec;
  ModelParams params;
  bool frozen = false;
};

ConvSpec symptom_conv_spec(int input_dim);

struct SymptomScore {
  double score = 0.0;                 // positive-class softmax probability
  std::array<double, 5> hidden = {};  // pooled pre-linear features
};

SymptomScore score_post(const SymptomClassifier& classifier,
                        const PostEncoder& encoder, std::string_view text,
                        const EncodeKey& key = {});

struct SymptomTrainReport {
  TrainResult train;
  double heldout_f1 = 0.0;
  size_t n_train = 0;
  size_t n_dev = 0;
  size_t n_heldout = 0;
};

// Trains one symptom classifier on a weak dataset; an internal
// stratified 80/10/10 split provides the dev set and the held-out F1
// slice. Single-class datasets raise Error(kInput).
SymptomClassifier train_symptom_classifier(Symptom symptom,
                                           const WeakDataset& dataset,
                                           const PostEncoder& encoder,
                                           const TrainConfig& config,
                                           SymptomTrainReport* report = nullptr);

// The questionnaire model: exactly nine classifiers in canonical
// symptom order.
class QuestionnaireModel {
 public:
  explicit QuestionnaireModel(std::vector<SymptomClassifier> classifiers);
  const SymptomClassifier& classifier(Symptom s) const {
    return classifiers_[static_cast<int>(s)];
  }
  uint64_t checksum() const;

 private:
  std::array<SymptomClassifier, kNumSymptoms> classifiers_;
};

// Per-post probabilities (n x 9) and hidden symptom vectors flattened
// to n x 45, column s*5+j for symptom s, component j.
struct QuestionnaireOutput {
  Matrix scores;
  Matrix vectors;
};

QuestionnaireOutput apply_questionnaire(const QuestionnaireModel& model,
                                        const PostEncoder& encoder,
                                        const PostTimeline& timeline);

// --- Bundle persistence -------------------------------------------------

struct SymptomBundleInfo {
  EncoderConfig encoder;
  uint64_t seed = 0;
  TrainConfig train_config;
  std::array<double, kNumSymptoms> heldout_f1 = {};
};

void save_symptom_bundle(const QuestionnaireModel& model,
                         const SymptomBundleInfo& info, const std::string& dir);

struct LoadedSymptomBundle {
  std::unique_ptr<QuestionnaireModel> model;
  std::unique_ptr<PostEncoder> encoder;
  SymptomBundleInfo info;
};

LoadedSymptomBundle load_symptom_bundle(const std::string& dir);

// --- Pattern-split generalization (train on g1, test on g2) -------------

struct SplitEvalReport {
  Symptom symptom = Symptom::kAnhedonia;
  double coverage_g1 = 0.0;  // share of exclusively-assigned positives
  double coverage_g2 = 0.0;
  size_t dropped_both = 0;  // positives matching both groups
  std::vector<double> f1_g1_to_g2;  // one entry per run seed
  std::vector<double> f1_g2_to_g1;
};

SplitEvalReport evaluate_symptom_split(Symptom symptom, const PatternLibrary& lib,
                                       const Corpus& corpus, uint64_t split_seed,
                                       const std::vector<uint64_t>& run_seeds,
                                       const WeakDatasetConfig& weak_config,
                                       const TrainConfig& train_config,
                                       const PostEncoder& encoder);

}  // namespace symground

#endif  // SYMGROUND_QUESTIONNAIRE_H_
