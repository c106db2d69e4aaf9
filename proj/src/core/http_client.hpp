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

#include <string>

#include "client.hpp"

namespace narnet {

// Configuration for the JSON-over-HTTP structured-output backend.
// url is the full endpoint, e.g. "http://localhost:8089/v1/generate".
struct HttpClientConfig {
  std::string url;
  std::string api_key;  // sent as "Authorization: Bearer <key>" when non-empty
  std::string model = "gemini-1.5-flash";
  int timeout_seconds = 300;
};

// POSTs {"model", "prompt", "response_schema", "max_output_tokens"} and expects
// {"text", "finish_reason", "detail"?} back. Transport failures, non-2xx
// statuses, and unparseable bodies all surface as FinishReason::Error so the
// extraction layer can apply its retry policy uniformly.
class HttpClient final : public StructuredOutputClient {
 public:
  explicit HttpClient(HttpClientConfig config);

  ModelResponse generate(const ClientRequest& request) override;

 private:
  HttpClientConfig config_;
  std::string host_;  // scheme://host[:port]
  std::string path_;  // leading-slash resource path
};

}  // namespace narnet
