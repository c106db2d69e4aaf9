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
#include <functional>
#include <string_view>

namespace narnet {

// Context and output ceilings for one model call.
struct TokenBudget {
  int64_t max_context_tokens = 1'000'000;
  int64_t max_output_tokens = 8'000;

  // Throws Error(InvalidArgument) unless both are positive and the output
  // budget fits inside the context budget.
  void validate() const;
};

using TokenEstimator = std::function<int64_t(std::string_view)>;

// ceil(word_count * 3.2), computed in exact integer arithmetic (16/5).
// A real tokenizer can be swapped in wherever a TokenEstimator is taken.
int64_t estimate_tokens(std::string_view text);

// Throws Error(TooLong) when tokens + overhead exceed the context budget.
// The boundary is inclusive: a total equal to the limit passes.
void check_budget(int64_t tokens, const TokenBudget& budget, int64_t overhead_tokens = 0);

}  // namespace narnet
