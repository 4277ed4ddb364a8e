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

#ifndef SYMGROUND_PATTERNS_H_
#define SYMGROUND_PATTERNS_H_

#include <array>
#include <cstdint>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symground/corpus.h"
#include "symground/symptoms.h"

namespace symground {

struct PatternEntry {
  std::string source;   // the pattern text as written in the file
  std::regex compiled;  // case-insensitive ECMAScript regex
};

// Nine per-symptom sets of compiled regular expressions. Immutable
// after load; safe to share across threads.
struct PatternLibrary {
  std::array<std::vector<PatternEntry>, kNumSymptoms> patterns;
  std::string source_path;

  int count(Symptom s) const {
    return static_cast<int>(patterns[static_cast<int>(s)].size());
  }
  size_t total_count() const;
  const std::vector<PatternEntry>& for_symptom(Symptom s) const {
    return patterns[static_cast<int>(s)];
  }
};

// One regex hit. Offsets are byte positions into the normalized post
// text (see normalize_text).
struct MatchSpan {
  Symptom symptom;
  size_t begin = 0;
  size_t end = 0;
  int pattern_index = 0;
};

struct MatchRow {
  std::array<uint8_t, kNumSymptoms> flags{};
  std::vector<MatchSpan> spans;

  bool any() const {
    for (auto f : flags)
      if (f) return true;
    return false;
  }
};

// Binary posts x 9 matrix of symptom pattern hits, rows aligned with
// the timeline's post order.
struct PatternMatrix {
  std::vector<MatchRow> rows;

  size_t num_posts() const { return rows.size(); }
  int entry(size_t post, Symptom s) const {
    return rows[post].flags[static_cast<int>(s)] ? 1 : 0;
  }
  size_t total_hits() const;
};

// Maps typographic apostrophes (U+2018/U+2019) to the ASCII apostrophe.
// All matching happens over normalized text, and every span offset in
// the toolkit refers to the normalized form.
std::string normalize_text(std::string_view text);

// Word-character test used for match boundaries: ASCII alphanumerics,
// underscore, and any non-ASCII byte.
bool is_word_byte(unsigned char c);

// Parses the sectioned pattern file format (docs/formats.md). Invalid
// regexes and structural problems raise Error(kInput) with the symptom
// and line number.
PatternLibrary load_pattern_library(const std::string& path);
PatternLibrary parse_pattern_library(const std::string& contents,
                                     const std::string& origin);
void save_pattern_library(const PatternLibrary& lib, const std::string& path);
std::string serialize_pattern_library(const PatternLibrary& lib);

// Same file format, entries taken as literal surface phrases.
PhraseBank load_phrase_bank(const std::string& path);

// Matches a single post against every pattern set. A symptom flag is 1
// iff any of its patterns matches anywhere in the text; spans report
// all non-overlapping matches per pattern, filtered to word boundaries.
MatchRow match_post(const Post& post, const PatternLibrary& lib);
// Same, for text the caller has already passed through normalize_text.
MatchRow match_normalized(std::string_view normalized_text,
                          const PatternLibrary& lib);

PatternMatrix build_pattern_matrix(const PostTimeline& timeline,
                                   const PatternLibrary& lib);

// Random non-overlapping two-way partition of every symptom's pattern
// set; both sides stay non-empty. Requires >= 2 patterns per symptom.
std::pair<PatternLibrary, PatternLibrary> split_pattern_library(
    const PatternLibrary& lib, uint64_t seed);

}  // namespace symground

#endif  // SYMGROUND_PATTERNS_H_
