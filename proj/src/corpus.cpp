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

#include "symground/corpus.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "symground/common.h"

namespace symground {

namespace {

using nlohmann::ordered_json;

constexpr const char* kLabelControl = "control";
constexpr const char* kLabelDepressed = "depressed";

int parse_label(const std::string& label, const std::string& where) {
  if (label == kLabelControl) return 0;
  if (label == kLabelDepressed) return 1;
  fail_input(where, ": unknown label \"", label, "\" (expected \"control\" or \"depressed\")");
}

// Neutral filler vocabulary for synthetic posts. Deliberately disjoint
// from the symptom phrase banks so that zero-rate corpora stay clean of
// symptom language.
const std::vector<std::string>& filler_words() {
  static const std::vector<std::string> words = {
      "garden",  "coffee",  "bicycle", "lecture",  "museum",  "window",
      "river",   "market",  "guitar",  "painting", "recipe",  "journey",
      "station", "library", "keyboard", "autumn",  "bridge",  "camera",
      "concert", "forest",  "harbor",  "island",   "jacket",  "kitchen",
      "ladder",  "meadow",  "notebook", "orchard", "puzzle",  "quarry",
      "road",    "stadium", "theater", "umbrella", "village", "workshop",
      "bakery",  "canvas",  "desk",    "engine",   "fountain", "garage",
      "harvest", "inkwell", "jigsaw",  "kettle",   "lantern", "motor",
  };
  return words;
}

std::string make_sentence(Rng& rng) {
  const auto& words = filler_words();
  size_t n = 5 + rng.next_below(8);
  std::string out;
  for (size_t i = 0; i < n; ++i) {
    if (i > 0) out += ' ';
    out += words[rng.next_below(words.size())];
  }
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  out += '.';
  return out;
}

std::string capitalize(std::string text) {
  if (!text.empty()) {
    text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  }
  return text;
}

void insert_word(std::string& sentence, const std::string& word, Rng& rng) {
  std::vector<size_t> spots = {0};
  for (size_t i = 0; i < sentence.size(); ++i) {
    if (sentence[i] == ' ') spots.push_back(i + 1);
  }
  size_t at = spots[rng.next_below(spots.size())];
  sentence.insert(at, word + " ");
}

void validate_spec(const SyntheticSpec& spec, const PhraseBank& bank) {
  auto check_rate = [](double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) fail_input("synthetic spec: ", what, " must lie in [0,1]");
  };
  check_rate(spec.symptom_emission_rate, "symptom_emission_rate");
  check_rate(spec.control_emission_rate, "control_emission_rate");
  check_rate(spec.shortcut_rate, "shortcut_rate");
  if (spec.n_depressed < 0 || spec.n_control < 0)
    fail_input("synthetic spec: user counts must be non-negative");
  if (spec.posts_per_user_min < 1 || spec.posts_per_user_max < spec.posts_per_user_min)
    fail_input("synthetic spec: posts_per_user range is invalid");
  if (spec.shortcut_class != 0 && spec.shortcut_class != 1)
    fail_input("synthetic spec: shortcut_class must be 0 or 1");
  for (int s = 0; s < kNumSymptoms; ++s) {
    if (bank[s].empty())
      fail_input("phrase bank has no phrases for symptom \"",
                 symptom_name(static_cast<Symptom>(s)), "\"");
  }
}

struct ClassAllocation {
  size_t train = 0;
  size_t dev = 0;
  size_t test = 0;
};

// Largest-remainder allocation, then a fix-up pass that guarantees
// every split receives at least one user of the class.
ClassAllocation allocate(size_t n, const SplitFractions& f) {
  const double fracs[3] = {f.train, f.dev, f.test};
  size_t alloc[3];
  double remainder[3];
  size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    double exact = fracs[i] * static_cast<double>(n);
    alloc[i] = static_cast<size_t>(std::floor(exact + 1e-12));
    remainder[i] = exact - static_cast<double>(alloc[i]);
    assigned += alloc[i];
  }
  while (assigned < n) {
    int best = 0;
    for (int i = 1; i < 3; ++i) {
      if (remainder[i] > remainder[best] + 1e-15) best = i;
    }
    ++alloc[best];
    remainder[best] = -1.0;
    ++assigned;
  }
  for (int i = 0; i < 3; ++i) {
    while (alloc[i] == 0) {
      int donor = 0;
      for (int j = 1; j < 3; ++j) {
        if (alloc[j] > alloc[donor]) donor = j;
      }
      --alloc[donor];
      ++alloc[i];
    }
  }
  return {alloc[0], alloc[1], alloc[2]};
}

}  // namespace

ClassCounts Corpus::class_counts() const {
  ClassCounts counts;
  for (const auto& t : timelines) {
    if (t.label == 1) {
      ++counts.n_depressed;
    } else {
      ++counts.n_control;
    }
  }
  return counts;
}

const PostTimeline* Corpus::find_user(const std::string& user_id) const {
  for (const auto& t : timelines) {
    if (t.user_id == user_id) return &t;
  }
  return nullptr;
}

Corpus parse_corpus(const std::string& contents, const std::string& origin,
                    int post_cap) {
  Corpus corpus;
  corpus.name = origin;
  std::unordered_set<std::string> seen_ids;
  const auto lines = split_lines(contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (trim(line).empty()) continue;
    const std::string where = str_cat(origin, " line ", i + 1);

    ordered_json rec;
    try {
      rec = ordered_json::parse(line);
    } catch (const std::exception& e) {
      fail_input(where, ": invalid JSON record: ", e.what());
    }
    if (!rec.is_object()) fail_input(where, ": record is not an object");
    for (const auto& [key, value] : rec.items()) {
      (void)value;
      if (key != "user_id" && key != "label" && key != "posts")
        fail_input(where, ": unknown field \"", key, "\"");
    }
    if (!rec.contains("user_id") || !rec["user_id"].is_string())
      fail_input(where, ": missing or non-string \"user_id\"");
    if (!rec.contains("label") || !rec["label"].is_string())
      fail_input(where, ": missing or non-string \"label\"");
    if (!rec.contains("posts") || !rec["posts"].is_array())
      fail_input(where, ": missing or non-array \"posts\"");

    PostTimeline timeline;
    timeline.user_id = rec["user_id"].get<std::string>();
    if (timeline.user_id.empty()) fail_input(where, ": empty user_id");
    if (!seen_ids.insert(timeline.user_id).second)
      fail_input(where, ": duplicate user_id \"", timeline.user_id, "\"");
    timeline.label = parse_label(rec["label"].get<std::string>(), where);

    for (const auto& pj : rec["posts"]) {
      if (!pj.is_object()) fail_input(where, ": post is not an object");
      for (const auto& [key, value] : pj.items()) {
        (void)value;
        if (key != "text" && key != "timestamp" && key != "source_tag")
          fail_input(where, ": unknown post field \"", key, "\"");
      }
      if (!pj.contains("text") || !pj["text"].is_string())
        fail_input(where, ": post missing string \"text\"");
      if (!pj.contains("timestamp") || !pj["timestamp"].is_number_integer())
        fail_input(where, ": post missing integer \"timestamp\"");
      Post post;
      post.text = pj["text"].get<std::string>();
      if (trim(post.text).empty())
        fail_input(where, ": post text is empty after trimming");
      post.timestamp = pj["timestamp"].get<int64_t>();
      if (post.timestamp < 0) fail_input(where, ": negative timestamp");
      if (pj.contains("source_tag")) {
        if (!pj["source_tag"].is_string())
          fail_input(where, ": non-string \"source_tag\"");
        post.source_tag = pj["source_tag"].get<std::string>();
      }
      timeline.posts.push_back(std::move(post));
    }

    std::stable_sort(timeline.posts.begin(), timeline.posts.end(),
                     [](const Post& a, const Post& b) {
                       return a.timestamp < b.timestamp;
                     });
    if (post_cap > 0 && timeline.posts.size() > static_cast<size_t>(post_cap)) {
      timeline.posts.resize(static_cast<size_t>(post_cap));
    }
    corpus.timelines.push_back(std::move(timeline));
  }
  return corpus;
}

Corpus load_corpus(const std::string& path, int post_cap) {
  Corpus corpus = parse_corpus(read_file(path), path, post_cap);
  corpus.name = path;
  return corpus;
}

std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  for (const auto& t : corpus.timelines) {
    ordered_json rec;
    rec["user_id"] = t.user_id;
    rec["label"] = t.label == 1 ? kLabelDepressed : kLabelControl;
    ordered_json posts = ordered_json::array();
    for (const auto& p : t.posts) {
      ordered_json pj;
      pj["text"] = p.text;
      pj["timestamp"] = p.timestamp;
      if (!p.source_tag.empty()) pj["source_tag"] = p.source_tag;
      posts.push_back(std::move(pj));
    }
    rec["posts"] = std::move(posts);
    out += rec.dump();
    out += '\n';
  }
  return out;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  write_file(path, serialize_corpus(corpus));
}

Corpus generate_synthetic(const SyntheticSpec& spec, const PhraseBank& bank) {
  validate_spec(spec, bank);
  Rng rng(spec.seed);
  Corpus corpus;
  corpus.name = spec.name;

  int total = spec.n_depressed + spec.n_control;
  for (int u = 0; u < total; ++u) {
    const bool depressed = u < spec.n_depressed;
    PostTimeline timeline;
    timeline.label = depressed ? 1 : 0;
    {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%s-%04d", depressed ? "dep" : "ctl",
                    depressed ? u : u - spec.n_depressed);
      timeline.user_id = buf;
    }

    size_t n_posts = static_cast<size_t>(spec.posts_per_user_min) +
                     rng.next_below(static_cast<uint64_t>(
                         spec.posts_per_user_max - spec.posts_per_user_min + 1));
    int64_t ts = 1500000000 + static_cast<int64_t>(u) * 1000000;
    double emission_rate =
        depressed ? spec.symptom_emission_rate : spec.control_emission_rate;

    for (size_t p = 0; p < n_posts; ++p) {
      std::vector<std::string> sentences;
      size_t n_sentences = 1 + rng.next_below(3);
      for (size_t s = 0; s < n_sentences; ++s) sentences.push_back(make_sentence(rng));

      if (rng.next_bool(emission_rate)) {
        size_t sym = rng.next_below(kNumSymptoms);
        const auto& phrases = bank[sym];
        std::string phrase = capitalize(phrases[rng.next_below(phrases.size())]) + ".";
        size_t at = rng.next_below(sentences.size() + 1);
        sentences.insert(sentences.begin() + static_cast<long>(at), std::move(phrase));
      }
      if (!spec.shortcut_token.empty() && timeline.label == spec.shortcut_class &&
          rng.next_bool(spec.shortcut_rate)) {
        size_t at = rng.next_below(sentences.size());
        insert_word(sentences[at], spec.shortcut_token, rng);
      }

      Post post;
      for (size_t s = 0; s < sentences.size(); ++s) {
        if (s > 0) post.text += ' ';
        post.text += sentences[s];
      }
      ts += 3600 + static_cast<int64_t>(rng.next_below(86400));
      post.timestamp = ts;
      if (!spec.source_tags.empty()) {
        post.source_tag = spec.source_tags[rng.next_below(spec.source_tags.size())];
      }
      timeline.posts.push_back(std::move(post));
    }
    corpus.timelines.push_back(std::move(timeline));
  }
  return corpus;
}

CorpusSplit split_corpus(const Corpus& corpus, const SplitFractions& fractions,
                         uint64_t seed) {
  if (fractions.train <= 0 || fractions.dev <= 0 || fractions.test <= 0)
    fail_input("split fractions must be positive");
  double sum = fractions.train + fractions.dev + fractions.test;
  if (std::abs(sum - 1.0) > 1e-9)
    fail_input("split fractions must sum to 1, got ", sum);

  std::vector<size_t> by_class[2];
  for (size_t i = 0; i < corpus.timelines.size(); ++i) {
    by_class[corpus.timelines[i].label == 1 ? 1 : 0].push_back(i);
  }
  for (int c = 0; c < 2; ++c) {
    if (by_class[c].size() < 3)
      fail_input("class \"", c == 1 ? "depressed" : "control", "\" has ",
                 by_class[c].size(), " users, fewer than the 3 splits");
  }

  // Membership: 0 train, 1 dev, 2 test.
  std::vector<int> membership(corpus.timelines.size(), 0);
  Rng rng(seed);
  for (int c = 0; c < 2; ++c) {
    auto indices = by_class[c];
    rng.shuffle(indices);
    ClassAllocation alloc = allocate(indices.size(), fractions);
    for (size_t i = 0; i < indices.size(); ++i) {
      int slot = i < alloc.train ? 0 : (i < alloc.train + alloc.dev ? 1 : 2);
      membership[indices[i]] = slot;
    }
  }

  CorpusSplit split;
  split.train.name = corpus.name + "-train";
  split.dev.name = corpus.name + "-dev";
  split.test.name = corpus.name + "-test";
  Corpus* out[3] = {&split.train, &split.dev, &split.test};
  for (size_t i = 0; i < corpus.timelines.size(); ++i) {
    out[membership[i]]->timelines.push_back(corpus.timelines[i]);
  }
  return split;
}

}  // namespace symground
