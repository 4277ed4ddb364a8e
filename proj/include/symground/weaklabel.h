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

#ifndef SYMGROUND_WEAKLABEL_H_
#define SYMGROUND_WEAKLABEL_H_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symground/corpus.h"
#include "symground/patterns.h"
#include "symground/symptoms.h"

namespace symground {

// False-positive filters applied to pattern-matched posts.
enum class FpFilter : int {
  kPositiveSentiment = 0,
  kConditionalClause,
  kThirdPerson,
  kNegation,
};
inline constexpr int kNumFpFilters = 4;
std::string_view fp_filter_name(FpFilter f);

// Where a weak example came from. Positives always carry
// kPatternMatch; negatives carry one of the five mining/synthesis
// strategies.
enum class Provenance : int {
  kPatternMatch = 0,
  kKeywordNegative,
  kPronounSwap,
  kOtherSymptom,
  kPatternNegation,
  kSentimentCorpus,
};
std::string_view provenance_name(Provenance p);
Provenance provenance_from_name(std::string_view name);

enum class NegativeStrategy : int {
  kKeyword = 0,
  kPronounSwap,
  kOtherSymptom,
  kPatternNegation,
  kSentimentCorpus,
};
inline constexpr int kNumNegativeStrategies = 5;
std::string_view negative_strategy_name(NegativeStrategy s);

struct FilterVerdict {
  FpFilter filter;
  bool rejected = false;
  std::string evidence;  // non-empty whenever rejected
};

struct WeakExample {
  std::string text;  // normalized (see normalize_text)
  Symptom symptom = Symptom::kAnhedonia;
  int label = 0;  // 1 positive, 0 negative
  Provenance provenance = Provenance::kPatternMatch;
  std::vector<FilterVerdict> filter_trace;
  std::vector<MatchSpan> spans;  // pattern hits, positives only
  std::string user_id;           // origin post, when applicable
  int post_index = -1;
};

enum class Sentiment : int { kNegative = -1, kNeutral = 0, kPositive = 1 };

struct SentimentResult {
  Sentiment label = Sentiment::kNeutral;
  std::string evidence;  // substring that drove the call, if any
};

// Pluggable post-level sentiment scorer. Must be total and
// deterministic for a fixed text.
using SentimentOracle = std::function<SentimentResult(const std::string&)>;

// Default scorer: signed counts over a fixed word lexicon with a
// neutral band at zero. Transparent and dependency-free.
SentimentOracle lexicon_sentiment_oracle();
SentimentResult lexicon_sentiment(const std::string& text);

using NegationMap = std::map<std::string, std::string>;
NegationMap load_negation_map(const std::string& path);
NegationMap parse_negation_map(const std::string& contents,
                               const std::string& origin);

struct WeakDatasetConfig {
  std::array<bool, kNumFpFilters> filters_enabled = {true, true, true, true};
  std::array<bool, kNumNegativeStrategies> negatives_enabled = {true, true,
                                                                true, true,
                                                                false};
  double negative_ratio = 1.0;  // negatives per kept positive
  uint64_t seed = 0;
  // Optional per-symptom keyword override for the keyword strategy;
  // empty entries fall back to default_keywords().
  std::array<std::vector<std::string>, kNumSymptoms> keywords;
  std::string negation_map_path;     // needed by kPatternNegation
  std::string sentiment_corpus_path; // needed by kSentimentCorpus
};

// Built-in keyword lists for the keyword-negative strategy, chosen to
// sit close to the seed patterns.
const std::vector<std::string>& default_keywords(Symptom s);

// --- Filters ---------------------------------------------------------

// Runs every enabled filter on a pattern-matched span. `text` must be
// normalized and `span` a valid byte range within it (Error(kInput)
// otherwise). Returns one verdict per enabled filter, in enum order.
std::vector<FilterVerdict> apply_fp_filters(
    const std::string& text, const MatchSpan& span, const SentimentOracle& oracle,
    const std::array<bool, kNumFpFilters>& enabled = {true, true, true, true});

// --- Positive harvesting ---------------------------------------------

struct HarvestResult {
  std::vector<WeakExample> kept;
  std::vector<WeakExample> rejected;  // each carries its failing verdicts
};

HarvestResult harvest_positives(const Corpus& corpus, const PatternLibrary& lib,
                                Symptom symptom, const WeakDatasetConfig& config,
                                const SentimentOracle& oracle);

// --- Negative mining / synthesis -------------------------------------

std::vector<WeakExample> mine_keyword_negatives(
    const Corpus& corpus, const PatternLibrary& lib, Symptom symptom,
    const std::vector<std::string>& keywords, size_t n, uint64_t seed);

// Swaps first-person pronouns to a consistently sampled third-person
// paradigm (she or he); plural forms map to they. Verb agreement is not
// adjusted beyond the documented table applied to the word following a
// swapped subject "I". Returns nullopt when the text has no
// first-person form.
std::optional<WeakExample> swap_pronouns(const WeakExample& positive,
                                         uint64_t seed);

using PositivePools = std::array<std::vector<WeakExample>, kNumSymptoms>;

std::vector<WeakExample> sample_other_symptom_negatives(
    const PositivePools& pools, Symptom symptom, const PatternLibrary& lib,
    size_t n, uint64_t seed);

// Rewrites the matched phrase of a positive example with its
// hand-crafted negated form and emits only the sentence containing the
// match. Returns nullopt when the matched pattern has no map entry.
std::optional<WeakExample> negate_pattern_sentence(const WeakExample& positive,
                                                   const NegationMap& map,
                                                   const PatternLibrary& lib);

std::vector<WeakExample> sample_sentiment_negatives(
    const std::string& corpus_path, Symptom symptom, size_t n, uint64_t seed,
    const PatternLibrary* purity_check = nullptr);

// --- Dataset assembly -------------------------------------------------

struct WeakDataset {
  Symptom symptom = Symptom::kAnhedonia;
  std::vector<WeakExample> examples;
};

struct DatasetReport {
  Symptom symptom = Symptom::kAnhedonia;
  size_t harvested = 0;
  size_t kept_positives = 0;
  size_t rejected_positives = 0;
  // Number of harvested posts each filter rejected (a post can be
  // rejected by several filters, so these may sum past the total).
  std::map<std::string, size_t> rejected_by_filter;
  std::map<std::string, size_t> negatives_by_provenance;
  size_t requested_negatives = 0;
  size_t emitted_negatives = 0;
  std::vector<std::string> warnings;
};

struct BuildOutput {
  WeakDataset dataset;
  DatasetReport report;
};

// End-to-end dataset construction for one symptom: harvest + filter
// positives, then fill the negative side per enabled strategies until
// the ratio target (availability permitting). Deterministic in
// (corpus, lib, config).
BuildOutput build_symptom_dataset(Symptom symptom, const Corpus& corpus,
                                  const PatternLibrary& lib,
                                  const WeakDatasetConfig& config,
                                  const SentimentOracle& oracle =
                                      lexicon_sentiment_oracle());

// Same assembly, but with a caller-curated positive set (used by the
// pattern-split evaluation, where positives are assigned exclusively to
// one pattern group). Spans in `positives` must refer to `lib`.
BuildOutput build_symptom_dataset_from_positives(
    Symptom symptom, const std::vector<WeakExample>& positives,
    const Corpus& corpus, const PatternLibrary& lib,
    const WeakDatasetConfig& config,
    const SentimentOracle& oracle = lexicon_sentiment_oracle());

std::string serialize_weak_dataset(const WeakDataset& dataset);
void save_weak_dataset(const WeakDataset& dataset, const std::string& path);
WeakDataset load_weak_dataset(const std::string& path);

// --- Shared text helpers ----------------------------------------------

struct Token {
  size_t begin = 0;
  size_t end = 0;
  std::string lower;
};

// Word tokens (letters, digits, underscore, non-ASCII bytes, with
// internal apostrophes kept so contractions stay whole).
std::vector<Token> tokenize_words(std::string_view text);

// [begin, end) byte ranges of sentences, split on ./!/? followed by
// whitespace, and on newlines.
std::vector<std::pair<size_t, size_t>> sentence_ranges(std::string_view text);

}  // namespace symground

#endif  // SYMGROUND_WEAKLABEL_H_
