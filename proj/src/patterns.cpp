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

#include "symground/patterns.h"

#include <cctype>
#include <unordered_set>

#include "symground/common.h"

namespace symground {

namespace {

// Raw entries of one sectioned pattern-format file.
struct SectionedFile {
  // Per symptom: (line number, entry text).
  std::array<std::vector<std::pair<size_t, std::string>>, kNumSymptoms> entries;
};

SectionedFile parse_sections(const std::string& contents,
                             const std::string& origin) {
  SectionedFile out;
  int current = -1;
  const auto lines = split_lines(contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    const size_t line_no = i + 1;
    std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      std::string name = trim(line.substr(1, line.size() - 2));
      if (!is_symptom_name(name))
        fail_input(origin, " line ", line_no, ": unknown symptom section \"",
                   name, "\"");
      current = static_cast<int>(symptom_from_name(name));
      continue;
    }
    if (current < 0)
      fail_input(origin, " line ", line_no,
                 ": entry before any [symptom] section");
    out.entries[current].emplace_back(line_no, line);
  }
  return out;
}

void require_all_symptoms(const SectionedFile& file, const std::string& origin) {
  for (int s = 0; s < kNumSymptoms; ++s) {
    if (file.entries[s].empty())
      fail_input(origin, ": no entries for symptom \"",
                 symptom_name(static_cast<Symptom>(s)), "\"");
  }
}

// A span survives only if neither end splices a word: mirrors the \b
// rule, with non-ASCII bytes treated as word characters.
bool boundary_ok(std::string_view text, size_t begin, size_t end) {
  if (begin >= end) return false;  // drop empty matches
  if (begin > 0 && is_word_byte(text[begin - 1]) && is_word_byte(text[begin]))
    return false;
  if (end < text.size() && is_word_byte(text[end]) && is_word_byte(text[end - 1]))
    return false;
  return true;
}

}  // namespace

const std::array<std::string, kNumSymptoms>& symptom_names() {
  static const std::array<std::string, kNumSymptoms> names = {
      "anhedonia",   "concentration", "eating",    "fatigue",  "mood",
      "psychomotor", "self-esteem",   "self-harm", "sleep"};
  return names;
}

std::string_view symptom_name(Symptom s) {
  return symptom_names()[static_cast<int>(s)];
}

Symptom symptom_from_name(std::string_view name) {
  const auto& names = symptom_names();
  for (int i = 0; i < kNumSymptoms; ++i) {
    if (names[i] == name) return static_cast<Symptom>(i);
  }
  fail_input("unknown symptom name \"", std::string(name), "\"");
}

bool is_symptom_name(std::string_view name) {
  const auto& names = symptom_names();
  for (const auto& n : names) {
    if (n == name) return true;
  }
  return false;
}

size_t PatternLibrary::total_count() const {
  size_t total = 0;
  for (const auto& set : patterns) total += set.size();
  return total;
}

size_t PatternMatrix::total_hits() const {
  size_t total = 0;
  for (const auto& row : rows) {
    for (auto f : row.flags) total += f ? 1 : 0;
  }
  return total;
}

std::string normalize_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size();) {
    // U+2018 / U+2019 are E2 80 98 / E2 80 99 in UTF-8.
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x80 &&
        (static_cast<unsigned char>(text[i + 2]) == 0x98 ||
         static_cast<unsigned char>(text[i + 2]) == 0x99)) {
      out += '\'';
      i += 3;
    } else {
      out += text[i];
      ++i;
    }
  }
  return out;
}

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) != 0 || c == '_' || c >= 0x80;
}

PatternLibrary parse_pattern_library(const std::string& contents,
                                     const std::string& origin) {
  SectionedFile file = parse_sections(contents, origin);
  require_all_symptoms(file, origin);

  PatternLibrary lib;
  lib.source_path = origin;
  for (int s = 0; s < kNumSymptoms; ++s) {
    std::unordered_set<std::string> seen;
    for (const auto& [line_no, source] : file.entries[s]) {
      if (!seen.insert(source).second)
        fail_input(origin, " line ", line_no, " [",
                   symptom_name(static_cast<Symptom>(s)),
                   "]: duplicate pattern \"", source, "\"");
      PatternEntry entry;
      entry.source = source;
      try {
        entry.compiled.assign(normalize_text(source),
                              std::regex::ECMAScript | std::regex::icase |
                                  std::regex::optimize);
      } catch (const std::regex_error& e) {
        fail_input(origin, " line ", line_no, " [",
                   symptom_name(static_cast<Symptom>(s)),
                   "]: invalid pattern \"", source, "\": ", e.what());
      }
      lib.patterns[s].push_back(std::move(entry));
    }
  }
  return lib;
}

PatternLibrary load_pattern_library(const std::string& path) {
  return parse_pattern_library(read_file(path), path);
}

std::string serialize_pattern_library(const PatternLibrary& lib) {
  std::string out;
  for (int s = 0; s < kNumSymptoms; ++s) {
    out += str_cat("[", symptom_name(static_cast<Symptom>(s)), "]\n");
    for (const auto& entry : lib.patterns[s]) {
      out += entry.source;
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

void save_pattern_library(const PatternLibrary& lib, const std::string& path) {
  write_file(path, serialize_pattern_library(lib));
}

PhraseBank load_phrase_bank(const std::string& path) {
  const std::string contents = read_file(path);
  SectionedFile file = parse_sections(contents, path);
  require_all_symptoms(file, path);
  PhraseBank bank;
  for (int s = 0; s < kNumSymptoms; ++s) {
    for (const auto& [line_no, phrase] : file.entries[s]) {
      (void)line_no;
      bank[s].push_back(normalize_text(phrase));
    }
  }
  return bank;
}

MatchRow match_normalized(std::string_view text, const PatternLibrary& lib) {
  MatchRow row;
  const char* begin = text.data();
  const char* end = begin + text.size();
  for (int s = 0; s < kNumSymptoms; ++s) {
    const auto& set = lib.patterns[s];
    for (int p = 0; p < static_cast<int>(set.size()); ++p) {
      for (std::cregex_iterator it(begin, end, set[p].compiled), last;
           it != last; ++it) {
        size_t b = static_cast<size_t>(it->position(0));
        size_t e = b + static_cast<size_t>(it->length(0));
        if (!boundary_ok(text, b, e)) continue;
        row.spans.push_back({static_cast<Symptom>(s), b, e, p});
        row.flags[s] = 1;
      }
    }
  }
  return row;
}

MatchRow match_post(const Post& post, const PatternLibrary& lib) {
  return match_normalized(normalize_text(post.text), lib);
}

PatternMatrix build_pattern_matrix(const PostTimeline& timeline,
                                   const PatternLibrary& lib) {
  PatternMatrix matrix;
  matrix.rows.reserve(timeline.posts.size());
  for (const auto& post : timeline.posts) {
    matrix.rows.push_back(match_post(post, lib));
  }
  return matrix;
}

std::pair<PatternLibrary, PatternLibrary> split_pattern_library(
    const PatternLibrary& lib, uint64_t seed) {
  for (int s = 0; s < kNumSymptoms; ++s) {
    if (lib.patterns[s].size() < 2)
      fail_input("symptom \"", symptom_name(static_cast<Symptom>(s)), "\" has ",
                 lib.patterns[s].size(),
                 " pattern(s); need at least 2 to split");
  }
  Rng rng(seed);
  PatternLibrary g1;
  PatternLibrary g2;
  g1.source_path = lib.source_path + "#g1";
  g2.source_path = lib.source_path + "#g2";
  for (int s = 0; s < kNumSymptoms; ++s) {
    const auto& set = lib.patterns[s];
    std::vector<int> side(set.size());
    for (auto& v : side) v = rng.next_bool(0.5) ? 1 : 0;
    // Keep both groups non-empty.
    bool any1 = false, any2 = false;
    for (int v : side) (v ? any1 : any2) = true;
    if (!any1) side[rng.next_below(side.size())] = 1;
    if (!any2) side[rng.next_below(side.size())] = 0;
    for (size_t i = 0; i < set.size(); ++i) {
      (side[i] ? g1 : g2).patterns[s].push_back(set[i]);
    }
  }
  return {std::move(g1), std::move(g2)};
}

}  // namespace symground
