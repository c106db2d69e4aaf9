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

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "client.hpp"

namespace narnet {

// Fixture-driven backend. The fixture file is a JSON object mapping
// volume_id to a scripted response, or to an array of responses consumed
// one per call (the last one repeats once exhausted):
//
//   {
//     "v1": {"finish_reason": "completed", "text": "[ ... ]"},
//     "v2": [{"finish_reason": "error", "detail": "boom"},
//            {"finish_reason": "completed", "text": "[]"}]
//   }
//
// Volumes without a script produce an error response.
class MockClient : public StructuredOutputClient {
 public:
  // Throws Error(Io) / Error(Parse).
  explicit MockClient(const std::filesystem::path& fixture_path);
  explicit MockClient(const nlohmann::json& fixtures);

  ModelResponse generate(const ClientRequest& request) override;

 private:
  void load(const nlohmann::json& fixtures);

  std::map<std::string, std::vector<ModelResponse>> scripts_;
  std::map<std::string, size_t> call_counts_;
  std::mutex mutex_;
};

}  // namespace narnet
