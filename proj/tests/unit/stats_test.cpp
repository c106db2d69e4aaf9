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

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "error.hpp"
#include "stats_oracles.hpp"

using namespace narnet;

namespace {

std::vector<double> random_sample(std::mt19937& rng, int n, double mean, double sd) {
  std::normal_distribution<double> dist(mean, sd);
  std::vector<double> out(n);
  for (double& v : out) v = dist(rng);
  return out;
}

}  // namespace

TEST_CASE("welch matches the long-double oracle on random samples") {
  std::mt19937 rng(1501);
  std::uniform_int_distribution<int> size(2, 40);
  for (int trial = 0; trial < 100; ++trial) {
    auto xs = random_sample(rng, size(rng), 0.0, 1.0);
    auto ys = random_sample(rng, size(rng), 0.4, 2.0);
    TTestResult got = welch_t_test(xs, ys);
    oracle::WelchResult want = oracle::welch(xs, ys);
    CHECK(got.t == doctest::Approx(static_cast<double>(want.t)).epsilon(1e-9));
    CHECK(got.df == doctest::Approx(static_cast<double>(want.df)).epsilon(1e-9));
    CHECK(got.p == doctest::Approx(static_cast<double>(want.p)).epsilon(1e-9));
    CHECK(got.n_x == static_cast<int64_t>(xs.size()));
    CHECK(got.n_y == static_cast<int64_t>(ys.size()));
  }
}

TEST_CASE("welch on identical samples gives t = 0 and p = 1") {
  std::vector<double> xs = {1.0, 2.0, 3.0, 4.0};
  TTestResult result = welch_t_test(xs, xs);
  CHECK(result.t == 0.0);
  CHECK(result.p == doctest::Approx(1.0));
  CHECK(result.mean_x == doctest::Approx(2.5));
  CHECK(result.mean_y == doctest::Approx(2.5));
}

TEST_CASE("welch input validation") {
  std::vector<double> one = {1.0};
  std::vector<double> pair = {1.0, 2.0};
  std::vector<double> flat = {3.0, 3.0, 3.0};
  CHECK_THROWS_AS(welch_t_test(one, pair), Error);
  CHECK_THROWS_AS(welch_t_test(pair, one), Error);
  CHECK_THROWS_AS(welch_t_test(flat, flat), Error);
  // One constant sample keeps a positive pooled standard error.
  CHECK_NOTHROW(welch_t_test(flat, pair));
}

TEST_CASE("pearson matches the long-double oracle on random samples") {
  std::mt19937 rng(1502);
  std::uniform_int_distribution<int> size(3, 40);
  std::normal_distribution<double> noise(0.0, 0.6);
  for (int trial = 0; trial < 100; ++trial) {
    int n = size(rng);
    auto xs = random_sample(rng, n, 0.0, 1.0);
    std::vector<double> ys(n);
    for (int i = 0; i < n; ++i) ys[i] = 0.7 * xs[i] + noise(rng);
    CorrelationResult got = pearson(xs, ys);
    oracle::PearsonResult want = oracle::pearson(xs, ys);
    CHECK(got.r == doctest::Approx(static_cast<double>(want.r)).epsilon(1e-9));
    CHECK(got.p == doctest::Approx(static_cast<double>(want.p)).epsilon(1e-9));
    CHECK(got.n == n);
  }
}

TEST_CASE("pearson edge cases") {
  std::vector<double> xs = {1.0, 2.0, 3.0};
  std::vector<double> up = {2.0, 4.0, 6.0};
  std::vector<double> down = {9.0, 7.0, 5.0};
  CorrelationResult perfect = pearson(xs, up);
  CHECK(perfect.r == doctest::Approx(1.0));
  CHECK(perfect.p == 0.0);
  CorrelationResult inverse = pearson(xs, down);
  CHECK(inverse.r == doctest::Approx(-1.0));
  CHECK(inverse.p == 0.0);

  CHECK_THROWS_AS(pearson({1.0, 2.0}, {1.0, 2.0}), Error);            // n < 3
  CHECK_THROWS_AS(pearson(xs, {1.0, 2.0}), Error);                    // length mismatch
  CHECK_THROWS_AS(pearson(xs, {5.0, 5.0, 5.0}), Error);               // constant y
  CHECK_THROWS_AS(pearson({5.0, 5.0, 5.0}, xs), Error);               // constant x
}

TEST_CASE("incomplete beta identities") {
  CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
  for (double x : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    CHECK(regularized_incomplete_beta(1.0, 1.0, x) == doctest::Approx(x).epsilon(1e-12));
    // I_x(a, 1) = x^a
    CHECK(regularized_incomplete_beta(2.5, 1.0, x) ==
          doctest::Approx(std::pow(x, 2.5)).epsilon(1e-12));
    // Symmetry: I_x(a, b) = 1 - I_{1-x}(b, a)
    CHECK(regularized_incomplete_beta(2.0, 3.5, x) ==
          doctest::Approx(1.0 - regularized_incomplete_beta(3.5, 2.0, 1.0 - x))
              .epsilon(1e-12));
  }
  CHECK_THROWS_AS(regularized_incomplete_beta(0.0, 1.0, 0.5), Error);
  CHECK_THROWS_AS(regularized_incomplete_beta(1.0, -1.0, 0.5), Error);
  CHECK_THROWS_AS(regularized_incomplete_beta(1.0, 1.0, 1.5), Error);
}

TEST_CASE("incomplete beta agrees with quadrature") {
  for (double a : {1.0, 1.5, 2.5, 4.0}) {
    for (double b : {1.0, 2.0, 3.5}) {
      for (double x : {0.05, 0.3, 0.5, 0.8, 0.95}) {
        double want = static_cast<double>(oracle::incomplete_beta(a, b, x));
        CHECK(regularized_incomplete_beta(a, b, x) ==
              doctest::Approx(want).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("student t tail probabilities") {
  CHECK(student_t_two_sided_p(0.0, 5.0) == doctest::Approx(1.0));
  for (double t : {0.5, 1.0, 2.0, 3.5}) {
    for (double df : {1.0, 2.0, 5.0, 30.0}) {
      double want = static_cast<double>(oracle::student_t_two_sided_p(t, df));
      CHECK(student_t_two_sided_p(t, df) == doctest::Approx(want).epsilon(1e-10));
      // Two-sided p only depends on |t|.
      CHECK(student_t_two_sided_p(-t, df) ==
            doctest::Approx(student_t_two_sided_p(t, df)).epsilon(1e-14));
    }
  }
}

TEST_CASE("group_compare splits by the fiction flag and counts exclusions") {
  std::vector<Observation> rows;
  // Fiction: 1, 2, 3. Nonfiction: 10, 12. Three unusable rows.
  rows.push_back({true, 1900, 1.0});
  rows.push_back({true, std::nullopt, 2.0});
  rows.push_back({true, 1920, 3.0});
  rows.push_back({false, 1900, 10.0});
  rows.push_back({false, 1910, 12.0});
  rows.push_back({std::nullopt, 1930, 5.0});   // no flag
  rows.push_back({true, 1940, std::nullopt});  // no value
  rows.push_back({std::nullopt, std::nullopt, std::nullopt});

  GroupCompareResult result = group_compare(rows);
  CHECK(result.excluded_rows == 3);
  CHECK(result.test.n_x == 3);
  CHECK(result.test.n_y == 2);
  CHECK(result.test.mean_x == doctest::Approx(2.0));
  CHECK(result.test.mean_y == doctest::Approx(11.0));
  TTestResult direct = welch_t_test({1.0, 2.0, 3.0}, {10.0, 12.0});
  CHECK(result.test.t == doctest::Approx(direct.t));
  CHECK(result.test.p == doctest::Approx(direct.p));
}

TEST_CASE("group_compare error paths") {
  std::vector<Observation> unusable;
  unusable.push_back({std::nullopt, 1900, 1.0});
  unusable.push_back({true, 1900, std::nullopt});
  CHECK_THROWS_AS(group_compare(unusable), Error);  // MissingMetadata

  std::vector<Observation> thin;
  thin.push_back({true, 1900, 1.0});
  thin.push_back({false, 1900, 2.0});
  thin.push_back({false, 1910, 3.0});
  CHECK_THROWS_AS(group_compare(thin), Error);  // fiction sample too small
}

TEST_CASE("decade_trend correlates decade against per-decade means") {
  std::vector<Observation> rows;
  // Fiction decades: 1900 -> mean 2.0, 1910 -> mean 4.0, 1920 -> mean 6.0.
  rows.push_back({true, 1900, 1.0});
  rows.push_back({true, 1900, 3.0});
  rows.push_back({true, 1910, 4.0});
  rows.push_back({true, 1920, 5.0});
  rows.push_back({true, 1920, 7.0});
  // Noise that must be ignored: other group, missing fields.
  rows.push_back({false, 1900, 100.0});
  rows.push_back({true, std::nullopt, 9.0});
  rows.push_back({true, 1930, std::nullopt});

  CorrelationResult result = decade_trend(rows, true);
  CHECK(result.n == 3);
  CHECK(result.r == doctest::Approx(1.0));
  CHECK(result.p == 0.0);

  CorrelationResult direct = pearson({1900.0, 1910.0, 1920.0}, {2.0, 4.0, 6.0});
  CHECK(result.r == doctest::Approx(direct.r));
}

TEST_CASE("decade_trend needs three populated decades") {
  std::vector<Observation> rows;
  rows.push_back({true, 1900, 1.0});
  rows.push_back({true, 1900, 2.0});
  rows.push_back({true, 1910, 3.0});
  CHECK_THROWS_AS(decade_trend(rows, true), Error);   // two decades
  CHECK_THROWS_AS(decade_trend(rows, false), Error);  // empty group
}
