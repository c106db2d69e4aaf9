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

#include "stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "error.hpp"

namespace narnet {

namespace {

double mean(const std::vector<double>& xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

// Sample variance with the n-1 denominator.
double variance(const std::vector<double>& xs, double m) {
  double sum = 0.0;
  for (double x : xs) sum += (x - m) * (x - m);
  return sum / static_cast<double>(xs.size() - 1);
}

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 300;
  constexpr double kEpsilon = 1e-15;
  constexpr double kTiny = 1e-300;

  double qab = a + b;
  double qap = a + 1.0;
  double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEpsilon) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorCode::Domain, "incomplete beta needs a, b > 0");
  }
  if (!(x >= 0.0) || !(x <= 1.0)) {
    throw Error(ErrorCode::Domain, "incomplete beta needs x in [0,1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                     a * std::log(x) + b * std::log1p(-x);
  double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
  double x = df / (df + t * t);
  x = std::clamp(x, 0.0, 1.0);
  return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

TTestResult welch_t_test(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() < 2 || ys.size() < 2) {
    throw Error(ErrorCode::SampleTooSmall, "Welch's test needs at least 2 values per sample");
  }
  TTestResult result;
  result.n_x = static_cast<int64_t>(xs.size());
  result.n_y = static_cast<int64_t>(ys.size());
  result.mean_x = mean(xs);
  result.mean_y = mean(ys);

  double vx = variance(xs, result.mean_x);
  double vy = variance(ys, result.mean_y);
  if (vx == 0.0 && vy == 0.0) {
    throw Error(ErrorCode::ZeroVariance, "both samples are constant");
  }

  double se_x = vx / static_cast<double>(result.n_x);
  double se_y = vy / static_cast<double>(result.n_y);
  result.t = (result.mean_x - result.mean_y) / std::sqrt(se_x + se_y);
  result.df = (se_x + se_y) * (se_x + se_y) /
              (se_x * se_x / static_cast<double>(result.n_x - 1) +
               se_y * se_y / static_cast<double>(result.n_y - 1));
  result.p = student_t_two_sided_p(result.t, result.df);
  return result;
}

CorrelationResult pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::LengthMismatch, "samples differ in length");
  }
  if (xs.size() < 3) {
    throw Error(ErrorCode::SampleTooSmall, "correlation needs at least 3 pairs");
  }
  const double mx = mean(xs);
  const double my = mean(ys);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mx;
    double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::ZeroVariance, "a variable is constant");
  }

  CorrelationResult result;
  result.n = static_cast<int64_t>(xs.size());
  result.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);

  double df = static_cast<double>(result.n - 2);
  double denom = 1.0 - result.r * result.r;
  if (denom <= 0.0) {
    result.p = 0.0;  // perfectly linear
  } else {
    double t = result.r * std::sqrt(df / denom);
    result.p = student_t_two_sided_p(t, df);
  }
  return result;
}

GroupCompareResult group_compare(const std::vector<Observation>& rows) {
  GroupCompareResult result;
  std::vector<double> fiction, nonfiction;
  for (const Observation& row : rows) {
    if (!row.value || !row.is_fiction) {
      ++result.excluded_rows;
      continue;
    }
    (*row.is_fiction ? fiction : nonfiction).push_back(*row.value);
  }
  if (fiction.empty() && nonfiction.empty()) {
    throw Error(ErrorCode::MissingMetadata, "no rows join a metric value with a fiction flag");
  }
  result.test = welch_t_test(fiction, nonfiction);
  return result;
}

CorrelationResult decade_trend(const std::vector<Observation>& rows, bool fiction) {
  std::map<int, std::pair<double, int64_t>> sums;  // decade -> (sum, count)
  for (const Observation& row : rows) {
    if (!row.value || !row.is_fiction || !row.decade) continue;
    if (*row.is_fiction != fiction) continue;
    auto& [sum, count] = sums[*row.decade];
    sum += *row.value;
    ++count;
  }
  if (sums.size() < 3) {
    throw Error(ErrorCode::TooFewDecades,
                "trend needs at least 3 decades, have " + std::to_string(sums.size()));
  }
  std::vector<double> decades, means;
  for (const auto& [decade, entry] : sums) {
    decades.push_back(static_cast<double>(decade));
    means.push_back(entry.first / static_cast<double>(entry.second));
  }
  return pearson(decades, means);
}

}  // namespace narnet
