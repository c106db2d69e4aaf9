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

#include "mock_client.hpp"

#include <fstream>

#include "error.hpp"

namespace narnet {

namespace {

ModelResponse response_from_json(const nlohmann::json& entry, const std::string& volume_id) {
  if (!entry.is_object() || !entry.contains("finish_reason")) {
    throw Error(ErrorCode::Parse,
                "fixture for " + volume_id + ": expected object with finish_reason");
  }
  auto reason = parse_finish_reason(entry["finish_reason"].get<std::string>());
  if (!reason) {
    throw Error(ErrorCode::Parse, "fixture for " + volume_id + ": unknown finish_reason \"" +
                                       entry["finish_reason"].get<std::string>() + "\"");
  }
  ModelResponse response;
  response.finish_reason = *reason;
  if (entry.contains("text")) response.text = entry["text"].get<std::string>();
  if (entry.contains("detail")) response.detail = entry["detail"].get<std::string>();
  return response;
}

}  // namespace

MockClient::MockClient(const std::filesystem::path& fixture_path) {
  std::ifstream in(fixture_path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot read fixture " + fixture_path.string());
  }
  nlohmann::json fixtures = nlohmann::json::parse(in, nullptr, false);
  if (fixtures.is_discarded()) {
    throw Error(ErrorCode::Parse, "fixture " + fixture_path.string() + " is not valid JSON");
  }
  load(fixtures);
}

MockClient::MockClient(const nlohmann::json& fixtures) { load(fixtures); }

void MockClient::load(const nlohmann::json& fixtures) {
  if (!fixtures.is_object()) {
    throw Error(ErrorCode::Parse, "fixture root must be an object keyed by volume_id");
  }
  for (const auto& [volume_id, value] : fixtures.items()) {
    std::vector<ModelResponse>& script = scripts_[volume_id];
    if (value.is_array()) {
      for (const auto& entry : value) {
        script.push_back(response_from_json(entry, volume_id));
      }
      if (script.empty()) {
        throw Error(ErrorCode::Parse, "fixture for " + volume_id + " is an empty array");
      }
    } else {
      script.push_back(response_from_json(value, volume_id));
    }
  }
}

ModelResponse MockClient::generate(const ClientRequest& request) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = scripts_.find(request.volume_id);
  if (it == scripts_.end()) {
    ModelResponse response;
    response.finish_reason = FinishReason::Error;
    response.detail = "no scripted response for volume " + request.volume_id;
    return response;
  }
  size_t call = call_counts_[request.volume_id]++;
  const std::vector<ModelResponse>& script = it->second;
  return script[std::min(call, script.size() - 1)];
}

}  // namespace narnet
