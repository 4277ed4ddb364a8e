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

#ifndef SYMGROUND_COMMON_H_
#define SYMGROUND_COMMON_H_

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symground {

// Error categories. Values line up with the CLI exit-code contract
// (0 success, 1 usage, 2 input, 3 dependency, 4 runtime).
enum class ErrorCode : int {
  kUsage = 1,
  kInput = 2,
  kDependency = 3,
  kRuntime = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

template <typename... Args>
std::string str_cat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

template <typename... Args>
[[noreturn]] void fail_input(Args&&... args) {
  throw Error(ErrorCode::kInput, str_cat(std::forward<Args>(args)...));
}

template <typename... Args>
[[noreturn]] void fail_usage(Args&&... args) {
  throw Error(ErrorCode::kUsage, str_cat(std::forward<Args>(args)...));
}

template <typename... Args>
[[noreturn]] void fail_dependency(Args&&... args) {
  throw Error(ErrorCode::kDependency, str_cat(std::forward<Args>(args)...));
}

template <typename... Args>
[[noreturn]] void fail_runtime(Args&&... args) {
  throw Error(ErrorCode::kRuntime, str_cat(std::forward<Args>(args)...));
}

// Logging, controlled by the SG_LOG environment variable
// (debug|info|warn|error|off, default warn). Messages go to stderr.
enum class LogLevel : int { kDebug = 0, kInfo, kWarn, kError, kOff };

LogLevel log_level();
void log_message(LogLevel level, const std::string& message);

template <typename... Args>
void log_debug(Args&&... args) {
  if (log_level() <= LogLevel::kDebug)
    log_message(LogLevel::kDebug, str_cat(std::forward<Args>(args)...));
}
template <typename... Args>
void log_info(Args&&... args) {
  if (log_level() <= LogLevel::kInfo)
    log_message(LogLevel::kInfo, str_cat(std::forward<Args>(args)...));
}
template <typename... Args>
void log_warn(Args&&... args) {
  if (log_level() <= LogLevel::kWarn)
    log_message(LogLevel::kWarn, str_cat(std::forward<Args>(args)...));
}
template <typename... Args>
void log_error(Args&&... args) {
  if (log_level() <= LogLevel::kError)
    log_message(LogLevel::kError, str_cat(std::forward<Args>(args)...));
}

// Deterministic random source. All randomness in the toolkit flows
// through this wrapper so that results are reproducible across
// platforms and standard-library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound), bound > 0. Rejection sampling, no
  // modulo bias.
  uint64_t next_below(uint64_t bound);

  // Uniform double in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi).
  double next_range(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  bool next_bool(double p_true) { return next_double() < p_true; }

  // In-place Fisher-Yates shuffle with explicit draws.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(next_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  // Derive an independent child stream; avoids accidental correlation
  // between consumers that share a top-level seed.
  Rng fork(uint64_t salt);

 private:
  std::mt19937_64 engine_;
};

// 64-bit FNV-1a. Used for content checksums and manifest hashes; not
// cryptographic.
uint64_t fnv1a64(std::string_view bytes);
uint64_t fnv1a64(const void* data, size_t size);
std::string hash_hex(uint64_t value);

// Filesystem helpers.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);
bool file_exists(const std::string& path);
void ensure_directory(const std::string& path);

// String helpers.
std::string to_lower(std::string_view text);
std::string trim(std::string_view text);
std::vector<std::string> split_lines(std::string_view text);
bool starts_with(std::string_view text, std::string_view prefix);

}  // namespace symground

#endif  // SYMGROUND_COMMON_H_
