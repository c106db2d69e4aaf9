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

#include <string>

#include "error.hpp"
#include "text_util.hpp"

namespace narnet {

void TokenBudget::validate() const {
  if (max_context_tokens <= 0 || max_output_tokens <= 0) {
    throw Error(ErrorCode::InvalidArgument, "token budgets must be positive");
  }
  if (max_output_tokens > max_context_tokens) {
    throw Error(ErrorCode::InvalidArgument,
                "output budget exceeds context budget");
  }
}

int64_t estimate_tokens(std::string_view text) {
  int64_t words = count_words(text);
  return (words * 16 + 4) / 5;  // ceil(words * 16/5)
}

void check_budget(int64_t tokens, const TokenBudget& budget, int64_t overhead_tokens) {
  budget.validate();
  int64_t total = tokens + overhead_tokens;
  if (total > budget.max_context_tokens) {
    throw Error(ErrorCode::TooLong,
                "volume needs " + std::to_string(total) + " tokens, limit is " +
                    std::to_string(budget.max_context_tokens));
  }
}

}  // namespace narnet
