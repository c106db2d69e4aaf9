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
#include <string>
#include <string_view>

#include <json.hpp>

namespace narnet {

// Why a model call stopped. The failure modes have to stay distinguishable:
// output-limit responses are kept (flagged truncated), filter rejections are
// permanent, transport errors are retried once.
enum class FinishReason { Completed, OutputLimit, ContentFilter, Error };

std::string_view to_string(FinishReason reason);
std::optional<FinishReason> parse_finish_reason(std::string_view s);

struct ClientRequest {
  std::string volume_id;
  std::string prompt;
  nlohmann::ordered_json schema;
  int64_t max_output_tokens = 8'000;
};

struct ModelResponse {
  std::string text;
  FinishReason finish_reason = FinishReason::Error;
  std::string detail;
};

// A structured-output backend. Implementations must be callable from
// multiple worker threads at once.
class StructuredOutputClient {
 public:
  virtual ~StructuredOutputClient() = default;
  virtual ModelResponse generate(const ClientRequest& request) = 0;
};

}  // namespace narnet
