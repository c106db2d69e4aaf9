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

#include "tokens.hpp"

#include <cmath>
#include <string>

#include <doctest.h>

#include "error.hpp"

using namespace narnet;

TEST_CASE("estimate_tokens is ceil(words * 3.2) in exact arithmetic") {
  CHECK(estimate_tokens("") == 0);
  CHECK(estimate_tokens("word") == 4);           // ceil(3.2)
  CHECK(estimate_tokens("one two three") == 10); // ceil(9.6)
  CHECK(estimate_tokens("a b c d e") == 16);     // exact at multiples of 5

  // Agreement with the floating formula over a broad sweep.
  for (int64_t words = 0; words <= 5000; ++words) {
    int64_t integer = (words * 16 + 4) / 5;
    int64_t floating = static_cast<int64_t>(std::ceil(static_cast<double>(words) * 3.2));
    CHECK(integer == floating);
    if (integer != floating) break;
  }
}

TEST_CASE("a novel-sized word count lands on the expected estimate") {
  // 63,656 words at 16/5 tokens per word.
  std::string text;
  text.reserve(64000 * 2);
  for (int i = 0; i < 63656; ++i) text += "w ";
  CHECK(estimate_tokens(text) == 203700);
}

TEST_CASE("budget validation") {
  TokenBudget budget;
  CHECK(budget.max_context_tokens == 1'000'000);
  CHECK(budget.max_output_tokens == 8'000);
  CHECK_NOTHROW(budget.validate());

  TokenBudget negative{-1, 10};
  CHECK_THROWS_AS(negative.validate(), Error);
  TokenBudget inverted{100, 200};
  CHECK_THROWS_AS(inverted.validate(), Error);
}

TEST_CASE("check_budget boundary is inclusive") {
  TokenBudget budget{1000, 100};
  CHECK_NOTHROW(check_budget(1000, budget));
  CHECK_NOTHROW(check_budget(900, budget, 100));
  try {
    check_budget(901, budget, 100);
    FAIL("expected TooLong");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLong);
  }
}
