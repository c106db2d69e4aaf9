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

#include "http_client.hpp"

#include <httplib.h>

#include <json.hpp>

#include "error.hpp"

namespace narnet {

namespace {

// Splits a URL into the scheme://host[:port] part httplib wants and the
// resource path. "http://h:1234/v1/gen" -> ("http://h:1234", "/v1/gen").
std::pair<std::string, std::string> split_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "endpoint URL missing scheme: " + url);
  }
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    return {url, "/"};
  }
  return {url.substr(0, path_start), url.substr(path_start)};
}

ModelResponse transport_error(std::string detail) {
  ModelResponse response;
  response.finish_reason = FinishReason::Error;
  response.detail = std::move(detail);
  return response;
}

}  // namespace

HttpClient::HttpClient(HttpClientConfig config) : config_(std::move(config)) {
  if (config_.url.empty()) {
    throw Error(ErrorCode::InvalidArgument, "HTTP backend requires an endpoint URL");
  }
  std::tie(host_, path_) = split_url(config_.url);
}

ModelResponse HttpClient::generate(const ClientRequest& request) {
  nlohmann::ordered_json body;
  body["model"] = config_.model;
  body["prompt"] = request.prompt;
  body["response_schema"] = request.schema;
  body["max_output_tokens"] = request.max_output_tokens;

  // A fresh connection per call keeps this trivially safe to use from
  // multiple workers; extraction throughput is model-bound anyway.
  httplib::Client client(host_);
  client.set_connection_timeout(config_.timeout_seconds, 0);
  client.set_read_timeout(config_.timeout_seconds, 0);
  client.set_write_timeout(config_.timeout_seconds, 0);
  httplib::Headers headers;
  if (!config_.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + config_.api_key);
  }

  auto result = client.Post(path_, headers, body.dump(), "application/json");
  if (!result) {
    return transport_error("HTTP request failed: " + httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    return transport_error("HTTP status " + std::to_string(result->status) + ": " + result->body);
  }

  nlohmann::json parsed = nlohmann::json::parse(result->body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    return transport_error("response body is not a JSON object");
  }
  if (!parsed.contains("finish_reason") || !parsed["finish_reason"].is_string()) {
    return transport_error("response body missing finish_reason");
  }
  auto reason = parse_finish_reason(parsed["finish_reason"].get<std::string>());
  if (!reason) {
    return transport_error("unknown finish_reason \"" +
                           parsed["finish_reason"].get<std::string>() + "\"");
  }

  ModelResponse response;
  response.finish_reason = *reason;
  if (parsed.contains("text") && parsed["text"].is_string()) {
    response.text = parsed["text"].get<std::string>();
  }
  if (parsed.contains("detail") && parsed["detail"].is_string()) {
    response.detail = parsed["detail"].get<std::string>();
  }
  return response;
}

}  // namespace narnet
