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

#include "symground/weaklabel.h"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "symground/common.h"

namespace symground {

namespace {

using nlohmann::ordered_json;

const std::array<std::string, kNumFpFilters> kFilterNames = {
    "positive-sentiment", "conditional-clause", "third-person", "negation"};

const std::array<std::string, 6> kProvenanceNames = {
    "pattern-match",    "keyword-negative", "pronoun-swap",
    "other-symptom",    "pattern-negation", "sentiment-corpus"};

// Negation cues recognized when they precede a matched span within the
// same clause. Apostrophe-less spellings are included for social-media
// text; "no longer" and "can not" are matched as token pairs.
const std::unordered_set<std::string>& negation_cues() {
  static const std::unordered_set<std::string> cues = {
      "not",    "never",   "rarely",  "hardly",  "don't",  "dont",
      "doesn't", "doesnt", "didn't",  "didnt",   "haven't", "havent",
      "hasn't", "hasnt",   "won't",   "wont",    "wouldn't", "wouldnt",
      "can't",  "cant",    "cannot",
  };
  return cues;
}

const std::unordered_set<std::string>& first_person_pronouns() {
  static const std::unordered_set<std::string> set = {
      "i",    "i'm",  "i've", "i'll", "i'd",  "me",        "my",
      "mine", "myself", "we", "we're", "we've", "we'll",   "we'd",
      "us",   "our",  "ours", "ourselves"};
  return set;
}

const std::unordered_set<std::string>& third_person_pronouns() {
  static const std::unordered_set<std::string> set = {
      "he",   "he's",  "he'll", "he'd",  "him",    "his",     "himself",
      "she",  "she's", "she'll", "she'd", "her",   "hers",    "herself",
      "they", "they're", "they've", "they'll", "they'd",
      "them", "their", "theirs", "themselves"};
  return set;
}

const std::regex& conditional_templates() {
  static const std::regex re("\\b(what if|if i|were i to|suppose i)\\b",
                             std::regex::ECMAScript | std::regex::icase);
  return re;
}

// Sentiment lexicon for the default oracle.
const std::unordered_set<std::string>& positive_lexicon() {
  static const std::unordered_set<std::string> set = {
      "amazing",  "awesome",  "beautiful", "best",      "birthday",
      "celebrate", "cheerful", "delicious", "delighted", "enjoy",
      "enjoyed",  "enjoying", "excellent", "excited",   "exciting",
      "fantastic", "friends", "fun",       "funny",     "glad",
      "game",     "games",    "great",     "happy",     "hilarious",
      "joy",      "laugh",    "laughed",   "laughing",  "love",
      "loved",    "lovely",   "party",     "play",      "played",
      "playing",  "proud",    "smile",     "smiling",   "sweet",
      "thrilled", "vacation", "victory",   "win",       "winning",
      "won",      "wonderful", "yay"};
  return set;
}

const std::unordered_set<std::string>& negative_lexicon() {
  static const std::unordered_set<std::string> set = {
      "afraid",   "alone",     "angry",    "anxiety",  "anxious",
      "ashamed",  "awful",     "bad",      "broken",   "cry",
      "crying",   "dead",      "death",    "depressed", "depressing",
      "depression", "despair", "dread",    "empty",    "exhausted",
      "fail",     "failed",    "failure",  "fear",     "grief",
      "guilt",    "guilty",    "hate",     "hated",    "hates",
      "hopeless", "hurt",      "hurting",  "insomnia", "lonely",
      "miserable", "nightmare", "nightmares", "numb",  "pain",
      "painful",  "panic",     "sad",      "scared",   "shame",
      "sick",     "stress",    "stressed", "struggling", "suffering",
      "suicidal", "suicide",   "terrible", "tired",    "ugly",
      "unhappy",  "upset",     "worse",    "worst",    "worthless",
      "worried",  "worry"};
  return set;
}

struct Paradigm {
  const char* subject;
  const char* object;
  const char* possessive;
  const char* possessive_standalone;
  const char* reflexive;
  const char* s_contraction;  // 's
  const char* ll_contraction; // 'll
  const char* d_contraction;  // 'd
};

std::string apply_case(const std::string& replacement, const std::string& original) {
  if (original.empty() || replacement.empty()) return replacement;
  std::string out = replacement;
  if (std::isupper(static_cast<unsigned char>(original[0]))) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out;
}

// First-person -> third-person mapping for one paradigm (she/he); the
// plural paradigm is always they.
std::optional<std::string> map_pronoun(const std::string& lower, bool she) {
  static const std::unordered_map<std::string, std::array<std::string, 2>> map = {
      {"i", {"she", "he"}},
      {"i'm", {"she's", "he's"}},
      {"i've", {"she's", "he's"}},
      {"i'll", {"she'll", "he'll"}},
      {"i'd", {"she'd", "he'd"}},
      {"me", {"her", "him"}},
      {"my", {"her", "his"}},
      {"mine", {"hers", "his"}},
      {"myself", {"herself", "himself"}},
      {"we", {"they", "they"}},
      {"we're", {"they're", "they're"}},
      {"we've", {"they've", "they've"}},
      {"we'll", {"they'll", "they'll"}},
      {"we'd", {"they'd", "they'd"}},
      {"us", {"them", "them"}},
      {"our", {"their", "their"}},
      {"ours", {"theirs", "theirs"}},
      {"ourselves", {"themselves", "themselves"}},
  };
  auto it = map.find(lower);
  if (it == map.end()) return std::nullopt;
  return it->second[she ? 0 : 1];
}

// Hard-coded agreement table for the verb directly following a swapped
// subject "I". Anything absent stays untouched.
std::optional<std::string> map_verb(const std::string& lower) {
  static const std::unordered_map<std::string, std::string> map = {
      {"am", "is"},       {"was", "was"},     {"have", "has"},
      {"do", "does"},     {"don't", "doesn't"}, {"dont", "doesnt"},
      {"feel", "feels"},  {"hate", "hates"},  {"want", "wants"},
      {"need", "needs"},  {"think", "thinks"}, {"know", "knows"},
      {"love", "loves"},  {"get", "gets"},    {"keep", "keeps"},
      {"cry", "cries"},   {"sleep", "sleeps"}, {"eat", "eats"},
      {"wish", "wishes"}, {"hope", "hopes"},  {"struggle", "struggles"},
      {"stay", "stays"},  {"wake", "wakes"},  {"lie", "lies"},
      {"try", "tries"},   {"go", "goes"},     {"say", "says"},
      {"see", "sees"},    {"make", "makes"},  {"take", "takes"},
      {"miss", "misses"}, {"toss", "tosses"},
  };
  auto it = map.find(lower);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

size_t find_clause_start(const std::string& text,
                         const std::vector<Token>& tokens, size_t span_begin) {
  size_t start = 0;
  for (size_t i = 0; i < span_begin && i < text.size(); ++i) {
    char c = text[i];
    if (c == '.' || c == '!' || c == '?' || c == ',' || c == ';' || c == '\n') {
      start = std::max(start, i + 1);
    }
  }
  for (const auto& tok : tokens) {
    if (tok.end > span_begin) break;
    if (tok.lower == "but" || tok.lower == "because") {
      start = std::max(start, tok.end);
    }
  }
  return start;
}

struct MatchedPost {
  const PostTimeline* timeline = nullptr;
  int post_index = -1;
  std::string norm;
  MatchRow row;
  std::vector<Token> tokens;
};

std::vector<MatchedPost> match_corpus(const Corpus& corpus,
                                      const PatternLibrary& lib) {
  std::vector<MatchedPost> out;
  for (const auto& timeline : corpus.timelines) {
    for (size_t p = 0; p < timeline.posts.size(); ++p) {
      MatchedPost mp;
      mp.timeline = &timeline;
      mp.post_index = static_cast<int>(p);
      mp.norm = normalize_text(timeline.posts[p].text);
      mp.row = match_normalized(mp.norm, lib);
      mp.tokens = tokenize_words(mp.norm);
      out.push_back(std::move(mp));
    }
  }
  return out;
}

HarvestResult harvest_from_matched(const std::vector<MatchedPost>& matched,
                                   Symptom symptom,
                                   const WeakDatasetConfig& config,
                                   const SentimentOracle& oracle) {
  HarvestResult result;
  const int sym = static_cast<int>(symptom);
  for (const auto& mp : matched) {
    if (!mp.row.flags[sym]) continue;

    WeakExample ex;
    ex.symptom = symptom;
    ex.text = mp.norm;
    ex.user_id = mp.timeline->user_id;
    ex.post_index = mp.post_index;
    ex.provenance = Provenance::kPatternMatch;
    for (const auto& span : mp.row.spans) {
      if (span.symptom == symptom) ex.spans.push_back(span);
    }

    // The sentiment call is per post; cache it across spans.
    std::optional<SentimentResult> sentiment;
    SentimentOracle cached = [&](const std::string& text) {
      if (!sentiment) sentiment = oracle(text);
      return *sentiment;
    };

    // Merge per-span verdicts: a filter rejects the post if it rejects
    // any span of the target symptom.
    std::vector<FilterVerdict> merged;
    for (int f = 0; f < kNumFpFilters; ++f) {
      if (config.filters_enabled[f]) {
        merged.push_back({static_cast<FpFilter>(f), false, ""});
      }
    }
    for (const auto& span : ex.spans) {
      auto verdicts =
          apply_fp_filters(mp.norm, span, cached, config.filters_enabled);
      for (size_t v = 0; v < verdicts.size(); ++v) {
        if (verdicts[v].rejected && !merged[v].rejected) merged[v] = verdicts[v];
      }
    }
    ex.filter_trace = merged;

    bool rejected = false;
    for (const auto& v : merged) rejected = rejected || v.rejected;
    ex.label = 1;
    (rejected ? result.rejected : result.kept).push_back(std::move(ex));
  }
  return result;
}

std::vector<WeakExample> keyword_negatives_from_matched(
    const std::vector<MatchedPost>& matched, Symptom symptom,
    const std::vector<std::string>& keywords, size_t n, uint64_t seed) {
  std::unordered_set<std::string> kwset;
  for (const auto& k : keywords) kwset.insert(to_lower(k));

  std::vector<const MatchedPost*> eligible;
  for (const auto& mp : matched) {
    if (mp.row.flags[static_cast<int>(symptom)]) continue;
    bool has_keyword = false;
    for (const auto& tok : mp.tokens) {
      if (kwset.count(tok.lower)) {
        has_keyword = true;
        break;
      }
    }
    if (has_keyword) eligible.push_back(&mp);
  }

  Rng rng(seed);
  rng.shuffle(eligible);
  if (n < eligible.size()) {
    eligible.resize(n);
  } else if (eligible.size() < n && n != SIZE_MAX) {
    log_warn("keyword negatives for ", symptom_name(symptom), ": requested ", n,
             ", only ", eligible.size(), " available");
  }

  std::vector<WeakExample> out;
  for (const auto* mp : eligible) {
    WeakExample ex;
    ex.text = mp->norm;
    ex.symptom = symptom;
    ex.label = 0;
    ex.provenance = Provenance::kKeywordNegative;
    ex.user_id = mp->timeline->user_id;
    ex.post_index = mp->post_index;
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<std::string> parse_sentiment_candidates(const std::string& contents,
                                                    const std::string& origin) {
  std::vector<std::string> texts;
  const auto lines = split_lines(contents);
  auto strip_quotes = [](std::string s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
      s = s.substr(1, s.size() - 2);
    return s;
  };
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (trim(line).empty()) continue;
    size_t comma = line.find(',');
    if (comma == std::string::npos)
      fail_input(origin, " line ", i + 1, ": expected \"label,text\"");
    std::string label_str = strip_quotes(line.substr(0, comma));
    std::string text = strip_quotes(line.substr(comma + 1));
    if (label_str != "0" && label_str != "2" && label_str != "4")
      fail_input(origin, " line ", i + 1, ": unknown sentiment label \"",
                 label_str, "\" (expected 0, 2, or 4)");
    if (label_str == "0") continue;  // negative class, not usable
    if (trim(text).empty()) continue;
    texts.push_back(normalize_text(text));
  }
  return texts;
}

}  // namespace

std::string_view fp_filter_name(FpFilter f) {
  return kFilterNames[static_cast<int>(f)];
}

std::string_view provenance_name(Provenance p) {
  return kProvenanceNames[static_cast<int>(p)];
}

Provenance provenance_from_name(std::string_view name) {
  for (size_t i = 0; i < kProvenanceNames.size(); ++i) {
    if (kProvenanceNames[i] == name) return static_cast<Provenance>(i);
  }
  fail_input("unknown provenance \"", std::string(name), "\"");
}

std::string_view negative_strategy_name(NegativeStrategy s) {
  // Strategy names coincide with the provenance they emit.
  return kProvenanceNames[static_cast<int>(s) + 1];
}

std::vector<Token> tokenize_words(std::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (!is_word_byte(c)) {
      ++i;
      continue;
    }
    size_t begin = i;
    while (i < n) {
      unsigned char cc = static_cast<unsigned char>(text[i]);
      if (is_word_byte(cc)) {
        ++i;
      } else if (cc == '\'' && i + 1 < n &&
                 is_word_byte(static_cast<unsigned char>(text[i + 1])) &&
                 i > begin) {
        ++i;  // keep internal apostrophes so contractions stay whole
      } else {
        break;
      }
    }
    Token tok;
    tok.begin = begin;
    tok.end = i;
    tok.lower = to_lower(text.substr(begin, i - begin));
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::vector<std::pair<size_t, size_t>> sentence_ranges(std::string_view text) {
  std::vector<std::pair<size_t, size_t>> ranges;
  size_t start = 0;
  size_t i = 0;
  const size_t n = text.size();
  auto emit = [&](size_t end) {
    // Trim the range to visible content.
    size_t b = start;
    size_t e = end;
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (b < e) ranges.emplace_back(b, e);
  };
  while (i < n) {
    char c = text[i];
    if (c == '\n') {
      emit(i);
      start = i + 1;
      ++i;
      continue;
    }
    if (c == '.' || c == '!' || c == '?') {
      size_t j = i;
      while (j + 1 < n && (text[j + 1] == '.' || text[j + 1] == '!' ||
                           text[j + 1] == '?')) {
        ++j;
      }
      if (j + 1 >= n || std::isspace(static_cast<unsigned char>(text[j + 1]))) {
        emit(j + 1);
        start = j + 1;
      }
      i = j + 1;
      continue;
    }
    ++i;
  }
  emit(n);
  return ranges;
}

SentimentResult lexicon_sentiment(const std::string& text) {
  int score = 0;
  std::string first_positive;
  std::string first_negative;
  for (const auto& tok : tokenize_words(text)) {
    if (positive_lexicon().count(tok.lower)) {
      ++score;
      if (first_positive.empty())
        first_positive = text.substr(tok.begin, tok.end - tok.begin);
    } else if (negative_lexicon().count(tok.lower)) {
      --score;
      if (first_negative.empty())
        first_negative = text.substr(tok.begin, tok.end - tok.begin);
    }
  }
  SentimentResult result;
  if (score > 0) {
    result.label = Sentiment::kPositive;
    result.evidence = first_positive;
  } else if (score < 0) {
    result.label = Sentiment::kNegative;
    result.evidence = first_negative;
  }
  return result;
}

SentimentOracle lexicon_sentiment_oracle() {
  return [](const std::string& text) { return lexicon_sentiment(text); };
}

NegationMap parse_negation_map(const std::string& contents,
                               const std::string& origin) {
  NegationMap map;
  const auto lines = split_lines(contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos)
      fail_input(origin, " line ", i + 1, ": expected pattern<TAB>replacement");
    std::string pattern = trim(line.substr(0, tab));
    std::string replacement = trim(line.substr(tab + 1));
    if (pattern.empty() || replacement.empty())
      fail_input(origin, " line ", i + 1, ": empty pattern or replacement");
    map[pattern] = replacement;
  }
  return map;
}

NegationMap load_negation_map(const std::string& path) {
  return parse_negation_map(read_file(path), path);
}

const std::vector<std::string>& default_keywords(Symptom s) {
  static const std::array<std::vector<std::string>, kNumSymptoms> keywords = {{
      {"interest", "enjoy", "fun", "pleasure", "motivation", "hobby"},
      {"concentrate", "focus", "distracted", "attention", "concentration"},
      {"appetite", "eat", "eating", "food", "meal", "meals", "hungry"},
      {"tired", "energy", "exhausted", "sleepy", "fatigue"},
      {"sad", "cry", "mood", "down", "hopeless", "crying"},
      {"restless", "still", "slow", "pacing", "sluggish"},
      {"myself", "failure", "worthless", "confidence", "useless"},
      {"suicide", "suicidal", "harm", "hurt", "die"},
      {"sleep", "slept", "insomnia", "awake", "asleep", "sleeping"},
  }};
  return keywords[static_cast<int>(s)];
}

std::vector<FilterVerdict> apply_fp_filters(
    const std::string& text, const MatchSpan& span, const SentimentOracle& oracle,
    const std::array<bool, kNumFpFilters>& enabled) {
  if (span.begin >= span.end || span.end > text.size())
    fail_input("invalid span [", span.begin, ", ", span.end, ") for text of ",
               text.size(), " bytes");

  const auto tokens = tokenize_words(text);
  std::vector<FilterVerdict> verdicts;

  if (enabled[static_cast<int>(FpFilter::kPositiveSentiment)]) {
    FilterVerdict v{FpFilter::kPositiveSentiment, false, ""};
    SentimentResult s = oracle(text);
    if (s.label == Sentiment::kPositive) {
      v.rejected = true;
      v.evidence = s.evidence.empty() ? text : s.evidence;
    }
    verdicts.push_back(std::move(v));
  }

  if (enabled[static_cast<int>(FpFilter::kConditionalClause)]) {
    FilterVerdict v{FpFilter::kConditionalClause, false, ""};
    const auto sentences = sentence_ranges(text);
    for (std::cregex_iterator it(text.data(), text.data() + text.size(),
                                 conditional_templates()),
         last;
         it != last && !v.rejected; ++it) {
      size_t tb = static_cast<size_t>(it->position(0));
      size_t te = tb + static_cast<size_t>(it->length(0));
      // The construction runs from the template to the end of its
      // sentence; the span must start inside it.
      for (const auto& [sb, se] : sentences) {
        if (tb >= sb && tb < se && span.begin >= tb && span.begin < se) {
          v.rejected = true;
          v.evidence = text.substr(tb, te - tb);
          break;
        }
      }
    }
    verdicts.push_back(std::move(v));
  }

  if (enabled[static_cast<int>(FpFilter::kThirdPerson)]) {
    FilterVerdict v{FpFilter::kThirdPerson, false, ""};
    bool best_third = false;
    bool best_preceding = false;
    size_t best_distance = SIZE_MAX;
    for (const auto& tok : tokens) {
      bool is_first = first_person_pronouns().count(tok.lower) > 0;
      bool is_third = third_person_pronouns().count(tok.lower) > 0;
      if (!is_first && !is_third) continue;
      size_t distance;
      bool preceding;
      if (tok.end <= span.begin) {
        distance = span.begin - tok.end;
        preceding = true;
      } else if (tok.begin >= span.end) {
        distance = tok.begin - span.end;
        preceding = false;
      } else {
        distance = 0;
        preceding = true;
      }
      bool better = distance < best_distance ||
                    (distance == best_distance && preceding && !best_preceding);
      if (better) {
        best_distance = distance;
        best_preceding = preceding;
        best_third = is_third;
        if (is_third) {
          v.evidence = text.substr(tok.begin, tok.end - tok.begin);
        }
      }
    }
    v.rejected = best_distance != SIZE_MAX && best_third;
    if (!v.rejected) v.evidence.clear();
    verdicts.push_back(std::move(v));
  }

  if (enabled[static_cast<int>(FpFilter::kNegation)]) {
    FilterVerdict v{FpFilter::kNegation, false, ""};
    size_t clause_start = find_clause_start(text, tokens, span.begin);
    for (size_t t = 0; t < tokens.size(); ++t) {
      const Token& tok = tokens[t];
      if (tok.begin < clause_start || tok.end > span.begin) continue;
      bool is_cue = negation_cues().count(tok.lower) > 0;
      size_t cue_end = tok.end;
      if (!is_cue && t + 1 < tokens.size() && tokens[t + 1].end <= span.begin) {
        const std::string& next = tokens[t + 1].lower;
        if ((tok.lower == "no" && next == "longer") ||
            (tok.lower == "can" && next == "not")) {
          is_cue = true;
          cue_end = tokens[t + 1].end;
        }
      }
      if (is_cue) {
        v.rejected = true;
        v.evidence = text.substr(tok.begin, cue_end - tok.begin);
        // Keep scanning: the nearest cue before the span wins.
      }
    }
    verdicts.push_back(std::move(v));
  }

  return verdicts;
}

HarvestResult harvest_positives(const Corpus& corpus, const PatternLibrary& lib,
                                Symptom symptom, const WeakDatasetConfig& config,
                                const SentimentOracle& oracle) {
  return harvest_from_matched(match_corpus(corpus, lib), symptom, config,
                              oracle);
}

std::vector<WeakExample> mine_keyword_negatives(
    const Corpus& corpus, const PatternLibrary& lib, Symptom symptom,
    const std::vector<std::string>& keywords, size_t n, uint64_t seed) {
  if (keywords.empty()) fail_input("keyword negatives need a non-empty keyword list");
  if (n == 0) return {};
  return keyword_negatives_from_matched(match_corpus(corpus, lib), symptom,
                                        keywords, n, seed);
}

std::optional<WeakExample> swap_pronouns(const WeakExample& positive,
                                         uint64_t seed) {
  if (positive.label != 1)
    fail_input("swap_pronouns expects a positive example");
  Rng rng(seed);
  const bool she = rng.next_bool(0.5);

  const std::string& text = positive.text;
  const auto tokens = tokenize_words(text);

  std::string out;
  size_t cursor = 0;
  bool swapped_any = false;
  bool swap_next_verb = false;
  for (const auto& tok : tokens) {
    out += text.substr(cursor, tok.begin - cursor);
    const std::string original = text.substr(tok.begin, tok.end - tok.begin);
    std::string emitted = original;
    if (auto mapped = map_pronoun(tok.lower, she)) {
      emitted = apply_case(*mapped, original);
      swapped_any = true;
      if (tok.lower == "i") {
        swap_next_verb = true;
        out += emitted;
        cursor = tok.end;
        continue;
      }
    } else if (swap_next_verb) {
      if (auto verb = map_verb(tok.lower)) {
        emitted = apply_case(*verb, original);
      }
    }
    swap_next_verb = false;
    out += emitted;
    cursor = tok.end;
  }
  out += text.substr(cursor);

  if (!swapped_any) return std::nullopt;

  WeakExample negative;
  negative.text = out;
  negative.symptom = positive.symptom;
  negative.label = 0;
  negative.provenance = Provenance::kPronounSwap;
  negative.user_id = positive.user_id;
  negative.post_index = positive.post_index;
  return negative;
}

std::vector<WeakExample> sample_other_symptom_negatives(
    const PositivePools& pools, Symptom symptom, const PatternLibrary& lib,
    size_t n, uint64_t seed) {
  bool any_other = false;
  for (int s = 0; s < kNumSymptoms; ++s) {
    if (s != static_cast<int>(symptom) && !pools[s].empty()) any_other = true;
  }
  if (!any_other) fail_input("no positive pools for other symptoms");
  if (n == 0) return {};

  std::vector<const WeakExample*> eligible;
  std::unordered_set<std::string> seen;
  for (int s = 0; s < kNumSymptoms; ++s) {
    if (s == static_cast<int>(symptom)) continue;
    for (const auto& ex : pools[s]) {
      if (!seen.insert(ex.text).second) continue;
      MatchRow row = match_normalized(ex.text, lib);
      if (row.flags[static_cast<int>(symptom)]) continue;
      eligible.push_back(&ex);
    }
  }

  Rng rng(seed);
  rng.shuffle(eligible);
  if (n < eligible.size()) eligible.resize(n);

  std::vector<WeakExample> out;
  for (const auto* src : eligible) {
    WeakExample ex;
    ex.text = src->text;
    ex.symptom = symptom;
    ex.label = 0;
    ex.provenance = Provenance::kOtherSymptom;
    ex.user_id = src->user_id;
    ex.post_index = src->post_index;
    out.push_back(std::move(ex));
  }
  return out;
}

std::optional<WeakExample> negate_pattern_sentence(const WeakExample& positive,
                                                   const NegationMap& map,
                                                   const PatternLibrary& lib) {
  if (positive.label != 1 || positive.spans.empty())
    fail_input("negate_pattern_sentence expects a positive example with a span");
  const MatchSpan& span = positive.spans.front();
  const auto& entries = lib.for_symptom(span.symptom);
  if (span.pattern_index < 0 ||
      span.pattern_index >= static_cast<int>(entries.size()))
    fail_input("span pattern index out of range");
  const std::string& pattern = entries[span.pattern_index].source;
  auto it = map.find(pattern);
  if (it == map.end()) return std::nullopt;

  // Only the sentence containing the match is emitted.
  const auto sentences = sentence_ranges(positive.text);
  size_t sb = 0, se = positive.text.size();
  for (const auto& [b, e] : sentences) {
    if (span.begin >= b && span.begin < e) {
      sb = b;
      se = e;
      break;
    }
  }
  size_t cut_end = std::min(span.end, se);
  std::string rewritten = positive.text.substr(sb, span.begin - sb) +
                          it->second +
                          positive.text.substr(cut_end, se - cut_end);

  WeakExample negative;
  negative.text = trim(rewritten);
  negative.symptom = positive.symptom;
  negative.label = 0;
  negative.provenance = Provenance::kPatternNegation;
  negative.user_id = positive.user_id;
  negative.post_index = positive.post_index;
  return negative;
}

std::vector<WeakExample> sample_sentiment_negatives(
    const std::string& corpus_path, Symptom symptom, size_t n, uint64_t seed,
    const PatternLibrary* purity_check) {
  auto texts = parse_sentiment_candidates(read_file(corpus_path), corpus_path);
  if (texts.empty()) {
    log_warn("sentiment corpus ", corpus_path,
             " has no neutral/positive records");
    return {};
  }
  if (purity_check != nullptr) {
    std::vector<std::string> pure;
    for (auto& t : texts) {
      MatchRow row = match_normalized(t, *purity_check);
      if (!row.flags[static_cast<int>(symptom)]) pure.push_back(std::move(t));
    }
    texts = std::move(pure);
  }
  Rng rng(seed);
  rng.shuffle(texts);
  if (n < texts.size()) texts.resize(n);

  std::vector<WeakExample> out;
  for (auto& t : texts) {
    WeakExample ex;
    ex.text = std::move(t);
    ex.symptom = symptom;
    ex.label = 0;
    ex.provenance = Provenance::kSentimentCorpus;
    out.push_back(std::move(ex));
  }
  return out;
}

namespace {

BuildOutput assemble_dataset(Symptom symptom,
                             const std::vector<MatchedPost>& matched,
                             const HarvestResult& harvest,
                             const PatternLibrary& lib,
                             const WeakDatasetConfig& config,
                             const SentimentOracle& oracle) {
  BuildOutput out;
  out.dataset.symptom = symptom;
  out.report.symptom = symptom;

  out.report.harvested = harvest.kept.size() + harvest.rejected.size();
  out.report.kept_positives = harvest.kept.size();
  out.report.rejected_positives = harvest.rejected.size();
  for (int f = 0; f < kNumFpFilters; ++f) {
    if (config.filters_enabled[f])
      out.report.rejected_by_filter[std::string(
          fp_filter_name(static_cast<FpFilter>(f)))] = 0;
  }
  for (const auto& ex : harvest.rejected) {
    for (const auto& v : ex.filter_trace) {
      if (v.rejected)
        ++out.report.rejected_by_filter[std::string(fp_filter_name(v.filter))];
    }
  }
  if (harvest.kept.empty())
    fail_input("no positive examples for symptom \"", symptom_name(symptom),
               "\" after filtering");

  const size_t target = static_cast<size_t>(
      std::llround(config.negative_ratio * static_cast<double>(harvest.kept.size())));
  out.report.requested_negatives = target;

  std::vector<NegativeStrategy> strategies;
  for (int s = 0; s < kNumNegativeStrategies; ++s) {
    if (config.negatives_enabled[s])
      strategies.push_back(static_cast<NegativeStrategy>(s));
  }

  // Full candidate lists per enabled strategy, deterministically
  // shuffled; allocation below draws shares and tops up round-robin.
  Rng root(config.seed);
  std::array<std::vector<WeakExample>, kNumNegativeStrategies> candidates;
  for (NegativeStrategy strategy : strategies) {
    Rng child = root.fork(static_cast<uint64_t>(strategy) + 1);
    switch (strategy) {
      case NegativeStrategy::kKeyword: {
        const auto& kw = config.keywords[static_cast<int>(symptom)].empty()
                             ? default_keywords(symptom)
                             : config.keywords[static_cast<int>(symptom)];
        candidates[0] = keyword_negatives_from_matched(matched, symptom, kw,
                                                       SIZE_MAX, child.next_u64());
        break;
      }
      case NegativeStrategy::kPronounSwap: {
        auto order = harvest.kept;
        Rng shuffler(child.next_u64());
        shuffler.shuffle(order);
        for (const auto& pos : order) {
          if (auto neg = swap_pronouns(pos, child.next_u64()))
            candidates[1].push_back(std::move(*neg));
        }
        break;
      }
      case NegativeStrategy::kOtherSymptom: {
        PositivePools pools;
        for (int s = 0; s < kNumSymptoms; ++s) {
          if (s == static_cast<int>(symptom)) continue;
          pools[s] = harvest_from_matched(matched, static_cast<Symptom>(s),
                                          config, oracle)
                         .kept;
        }
        bool any = false;
        for (const auto& p : pools) any = any || !p.empty();
        if (any) {
          candidates[2] = sample_other_symptom_negatives(pools, symptom, lib,
                                                         SIZE_MAX,
                                                         child.next_u64());
        }
        break;
      }
      case NegativeStrategy::kPatternNegation: {
        if (config.negation_map_path.empty())
          fail_input("pattern-negation strategy enabled but no negation map configured");
        NegationMap map = load_negation_map(config.negation_map_path);
        auto order = harvest.kept;
        Rng shuffler(child.next_u64());
        shuffler.shuffle(order);
        for (const auto& pos : order) {
          if (auto neg = negate_pattern_sentence(pos, map, lib))
            candidates[3].push_back(std::move(*neg));
        }
        break;
      }
      case NegativeStrategy::kSentimentCorpus: {
        if (config.sentiment_corpus_path.empty())
          fail_input("sentiment-corpus strategy enabled but no corpus configured");
        candidates[4] = sample_sentiment_negatives(config.sentiment_corpus_path,
                                                   symptom, SIZE_MAX,
                                                   child.next_u64(), &lib);
        break;
      }
    }
  }

  // Selection. Texts already used (including positives) never repeat.
  std::unordered_set<std::string> seen;
  for (const auto& pos : harvest.kept) seen.insert(pos.text);
  std::array<size_t, kNumNegativeStrategies> next_index{};
  std::vector<WeakExample> negatives;

  auto take_one = [&](NegativeStrategy strategy) {
    auto& list = candidates[static_cast<int>(strategy)];
    auto& idx = next_index[static_cast<int>(strategy)];
    while (idx < list.size()) {
      WeakExample& ex = list[idx++];
      if (seen.insert(ex.text).second) {
        negatives.push_back(ex);
        return true;
      }
    }
    return false;
  };

  if (!strategies.empty() && target > 0) {
    const size_t base = target / strategies.size();
    size_t extra = target % strategies.size();
    for (NegativeStrategy strategy : strategies) {
      size_t share = base + (extra > 0 ? 1 : 0);
      if (extra > 0) --extra;
      for (size_t i = 0; i < share; ++i) {
        if (!take_one(strategy)) break;
      }
    }
    // Top up from whichever strategies still have candidates.
    bool progress = true;
    while (negatives.size() < target && progress) {
      progress = false;
      for (NegativeStrategy strategy : strategies) {
        if (negatives.size() >= target) break;
        progress = take_one(strategy) || progress;
      }
    }
  }

  if (negatives.size() < target) {
    out.report.warnings.push_back(
        str_cat("only ", negatives.size(), " of ", target,
                " requested negatives were available"));
    log_warn("symptom ", symptom_name(symptom), ": ",
             out.report.warnings.back());
  }
  out.report.emitted_negatives = negatives.size();
  for (const auto& ex : negatives) {
    ++out.report.negatives_by_provenance[std::string(provenance_name(ex.provenance))];
  }

  out.dataset.examples = harvest.kept;
  out.dataset.examples.insert(out.dataset.examples.end(), negatives.begin(),
                              negatives.end());
  Rng final_shuffle(root.fork(99).next_u64());
  final_shuffle.shuffle(out.dataset.examples);
  return out;
}

}  // namespace

BuildOutput build_symptom_dataset(Symptom symptom, const Corpus& corpus,
                                  const PatternLibrary& lib,
                                  const WeakDatasetConfig& config,
                                  const SentimentOracle& oracle) {
  if (config.negative_ratio <= 0) fail_input("negative_ratio must be positive");
  const auto matched = match_corpus(corpus, lib);
  HarvestResult harvest = harvest_from_matched(matched, symptom, config, oracle);
  return assemble_dataset(symptom, matched, harvest, lib, config, oracle);
}

BuildOutput build_symptom_dataset_from_positives(
    Symptom symptom, const std::vector<WeakExample>& positives,
    const Corpus& corpus, const PatternLibrary& lib,
    const WeakDatasetConfig& config, const SentimentOracle& oracle) {
  if (config.negative_ratio <= 0) fail_input("negative_ratio must be positive");
  const auto matched = match_corpus(corpus, lib);
  HarvestResult harvest;
  harvest.kept = positives;
  return assemble_dataset(symptom, matched, harvest, lib, config, oracle);
}

std::string serialize_weak_dataset(const WeakDataset& dataset) {
  std::string out;
  for (const auto& ex : dataset.examples) {
    ordered_json rec;
    rec["text"] = ex.text;
    rec["symptom"] = std::string(symptom_name(ex.symptom));
    rec["label"] = ex.label == 1 ? "positive" : "negative";
    rec["provenance"] = std::string(provenance_name(ex.provenance));
    out += rec.dump();
    out += '\n';
  }
  return out;
}

void save_weak_dataset(const WeakDataset& dataset, const std::string& path) {
  write_file(path, serialize_weak_dataset(dataset));
}

WeakDataset load_weak_dataset(const std::string& path) {
  WeakDataset dataset;
  const auto lines = split_lines(read_file(path));
  bool symptom_set = false;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    ordered_json rec;
    try {
      rec = ordered_json::parse(lines[i]);
    } catch (const std::exception& e) {
      fail_input(path, " line ", i + 1, ": invalid JSON record: ", e.what());
    }
    for (const char* field : {"text", "symptom", "label", "provenance"}) {
      if (!rec.contains(field) || !rec[field].is_string())
        fail_input(path, " line ", i + 1, ": missing string field \"", field,
                   "\"");
    }
    WeakExample ex;
    ex.text = normalize_text(rec["text"].get<std::string>());
    ex.symptom = symptom_from_name(rec["symptom"].get<std::string>());
    const std::string label = rec["label"].get<std::string>();
    if (label != "positive" && label != "negative")
      fail_input(path, " line ", i + 1, ": unknown label \"", label, "\"");
    ex.label = label == "positive" ? 1 : 0;
    ex.provenance = provenance_from_name(rec["provenance"].get<std::string>());
    if (!symptom_set) {
      dataset.symptom = ex.symptom;
      symptom_set = true;
    } else if (ex.symptom != dataset.symptom) {
      fail_input(path, " line ", i + 1, ": mixed symptoms in one dataset file");
    }
    dataset.examples.push_back(std::move(ex));
  }
  return dataset;
}

}  // namespace symground
