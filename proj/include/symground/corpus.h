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

#ifndef SYMGROUND_CORPUS_H_
#define SYMGROUND_CORPUS_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "symground/symptoms.h"

namespace symground {

inline constexpr int kDefaultPostCap = 400;

struct Post {
  std::string text;       // non-empty after whitespace trimming
  int64_t timestamp = 0;  // seconds since epoch, >= 0
  std::string source_tag; // optional grouping tag, may be empty
};

// One user's posts, sorted ascending by timestamp (ties keep file
// order), plus the user-level depression label (0 control, 1 depressed).
struct PostTimeline {
  std::string user_id;
  std::vector<Post> posts;
  int label = 0;
};

struct ClassCounts {
  size_t n_control = 0;
  size_t n_depressed = 0;
};

struct Corpus {
  std::string name;
  std::vector<PostTimeline> timelines;

  ClassCounts class_counts() const;
  const PostTimeline* find_user(const std::string& user_id) const;
};

// Controls for the synthetic corpus generator. The generator stands in
// for restricted clinical datasets: depressed users emit first-person
// symptom phrases, and an optional shortcut token can be planted in one
// class to create a deliberately non-generalizing signal.
struct SyntheticSpec {
  std::string name = "synthetic";
  int n_depressed = 0;
  int n_control = 0;
  int posts_per_user_min = 20;
  int posts_per_user_max = 40;
  double symptom_emission_rate = 0.0;  // per post, depressed users
  double control_emission_rate = 0.0;  // per post, control users
  std::string shortcut_token;          // empty disables injection
  double shortcut_rate = 0.0;          // per post of shortcut_class
  int shortcut_class = 0;              // 0 control, 1 depressed
  std::vector<std::string> source_tags = {"mh-forum", "general"};
  uint64_t seed = 0;
};

// Reads a line-delimited corpus file (see docs/formats.md). Each
// timeline is sorted by timestamp and truncated to its first `post_cap`
// posts; post_cap <= 0 disables truncation. Malformed records and
// duplicate user ids raise Error(kInput) naming the offending line.
Corpus load_corpus(const std::string& path, int post_cap = kDefaultPostCap);

Corpus parse_corpus(const std::string& contents, const std::string& origin,
                    int post_cap = kDefaultPostCap);

void save_corpus(const Corpus& corpus, const std::string& path);
std::string serialize_corpus(const Corpus& corpus);

// Deterministic generator; equal (spec, bank) pairs produce byte-equal
// corpora. Every symptom needs at least one phrase in the bank.
Corpus generate_synthetic(const SyntheticSpec& spec, const PhraseBank& bank);

struct SplitFractions {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
};

struct CorpusSplit {
  Corpus train;
  Corpus dev;
  Corpus test;
};

// Stratified, user-disjoint, deterministic split. Fractions must be
// positive and sum to 1 (tolerance 1e-9); each class must have at least
// as many users as there are splits.
CorpusSplit split_corpus(const Corpus& corpus, const SplitFractions& fractions,
                         uint64_t seed);

}  // namespace symground

#endif  // SYMGROUND_CORPUS_H_
