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

#ifndef SYMGROUND_SYMPTOMS_H_
#define SYMGROUND_SYMPTOMS_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace symground {

// The nine PHQ-9 symptom groups. The enum order is the canonical column
// order used for every matrix, score vector, and serialized artifact in
// the toolkit.
enum class Symptom : int {
  kAnhedonia = 0,
  kConcentration,
  kEating,
  kFatigue,
  kMood,
  kPsychomotor,
  kSelfEsteem,
  kSelfHarm,
  kSleep,
};

inline constexpr int kNumSymptoms = 9;

const std::array<std::string, kNumSymptoms>& symptom_names();
std::string_view symptom_name(Symptom s);
// Throws Error(kInput) for unknown names.
Symptom symptom_from_name(std::string_view name);
bool is_symptom_name(std::string_view name);

inline std::array<Symptom, kNumSymptoms> all_symptoms() {
  std::array<Symptom, kNumSymptoms> out{};
  for (int i = 0; i < kNumSymptoms; ++i) out[i] = static_cast<Symptom>(i);
  return out;
}

// Plain surface phrases per symptom, e.g. for synthetic corpus
// generation. Loaded from the same sectioned file format as pattern
// libraries.
using PhraseBank = std::array<std::vector<std::string>, kNumSymptoms>;

}  // namespace symground

#endif  // SYMGROUND_SYMPTOMS_H_
