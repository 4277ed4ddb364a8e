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

#ifndef SYMGROUND_METRICS_H_
#define SYMGROUND_METRICS_H_

#include <vector>

namespace symground {

// F1 of the positive class (label 1). Degenerate cases (no positive
// predictions or labels) return 0 with a warning, keeping report tables
// total.
double f1_positive(const std::vector<int>& predictions,
                   const std::vector<int>& labels);

// Area under the ROC curve as the rank statistic
// (concordant + 0.5 * ties) / (n_pos * n_neg). Both classes must be
// present (Error(kInput) otherwise).
double auc(const std::vector<double>& scores, const std::vector<int>& labels);

struct WelchTest {
  double t = 0.0;
  double df = 0.0;
  double p_value = 1.0;  // two-sided
};

// Welch's unequal-variance two-sample t-test. Each sample needs at
// least two runs.
WelchTest welch_t_test(const std::vector<double>& a,
                       const std::vector<double>& b);

double mean_of(const std::vector<double>& values);
double stddev_of(const std::vector<double>& values);  // population std

}  // namespace symground

#endif  // SYMGROUND_METRICS_H_
