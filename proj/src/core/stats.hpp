// Copyright 2026 The narrative-net Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace narnet {

struct TTestResult {
  double t = 0.0;
  double df = 0.0;  // Welch-Satterthwaite, real-valued
  double p = 0.0;   // two-sided
  double mean_x = 0.0;
  double mean_y = 0.0;
  int64_t n_x = 0;
  int64_t n_y = 0;
};

// Welch's unequal-variance t-test. Throws Error(SampleTooSmall) when
// either sample has fewer than 2 values and Error(ZeroVariance) when both
// samples are constant (one constant sample is fine; the pooled standard
// error is still positive).
TTestResult welch_t_test(const std::vector<double>& xs, const std::vector<double>& ys);

struct CorrelationResult {
  double r = 0.0;
  double p = 0.0;  // two-sided, via the t transformation with n-2 df
  int64_t n = 0;
};

// Pearson product-moment correlation with significance. Throws
// Error(LengthMismatch), Error(SampleTooSmall) for n < 3, and
// Error(ZeroVariance) when either variable is constant. |r| = 1 gives
// p = 0 by convention.
CorrelationResult pearson(const std::vector<double>& xs, const std::vector<double>& ys);

// I_x(a, b) by the Lentz continued fraction, using the symmetry transform
// for x beyond (a+1)/(a+b+2). Absolute error below 1e-10 over the sane
// parameter range. Throws Error(Domain) unless a, b > 0 and x is in [0,1].
double regularized_incomplete_beta(double a, double b, double x);

// P(|T| >= |t|) for Student's t with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

// One volume's joined observation for a single metric; the optionals model
// missing catalog metadata and metrics that are absent for the volume.
struct Observation {
  std::optional<bool> is_fiction;
  std::optional<int> decade;
  std::optional<double> value;
};

struct GroupCompareResult {
  TTestResult test;           // x = fiction group, y = nonfiction group
  int64_t excluded_rows = 0;  // observations lacking the value or the flag
};

// Welch comparison of a metric between fiction and nonfiction volumes.
// Throws Error(MissingMetadata) when no observation carries both a value
// and a fiction flag; Welch errors propagate.
GroupCompareResult group_compare(const std::vector<Observation>& rows);

// Correlation between decade and the per-decade mean of the metric within
// one group. Throws Error(TooFewDecades) below 3 populated decades;
// pearson errors (for example a metric constant across decades) propagate.
CorrelationResult decade_trend(const std::vector<Observation>& rows, bool fiction);

}  // namespace narnet
