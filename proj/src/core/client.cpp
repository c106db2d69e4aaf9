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

#include "client.hpp"

namespace narnet {

std::string_view to_string(FinishReason reason) {
  switch (reason) {
    case FinishReason::Completed: return "completed";
    case FinishReason::OutputLimit: return "output_limit";
    case FinishReason::ContentFilter: return "content_filter";
    case FinishReason::Error: return "error";
  }
  return "";
}

std::optional<FinishReason> parse_finish_reason(std::string_view s) {
  if (s == "completed") return FinishReason::Completed;
  if (s == "output_limit") return FinishReason::OutputLimit;
  if (s == "content_filter") return FinishReason::ContentFilter;
  if (s == "error") return FinishReason::Error;
  return std::nullopt;
}

}  // namespace narnet
