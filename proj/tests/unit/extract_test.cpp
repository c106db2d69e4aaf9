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

#include "extract.hpp"

#include <doctest.h>
#include <json.hpp>

#include "error.hpp"
#include "mock_client.hpp"

using namespace narnet;
using nlohmann::json;

namespace {

json record_json(const char* a, const char* b, const char* fine) {
  return {{"character_1", a},      {"character_2", b},
          {"affinity", "neutral"}, {"coarse_category", "social"},
          {"fine_category", fine}};
}

}  // namespace

TEST_CASE("finish reasons round-trip") {
  for (FinishReason reason : {FinishReason::Completed, FinishReason::OutputLimit,
                              FinishReason::ContentFilter, FinishReason::Error}) {
    CHECK(parse_finish_reason(to_string(reason)) == reason);
  }
  CHECK(to_string(FinishReason::OutputLimit) == "output_limit");
  CHECK(!parse_finish_reason("stopped"));
}

TEST_CASE("parse_model_output accepts a clean array") {
  json body = json::array({record_json("A", "B", "friend")});
  ParsedOutput parsed = parse_model_output(body.dump());
  REQUIRE(parsed.records.size() == 1);
  CHECK(parsed.malformed_records_dropped == 0);
  CHECK(parsed.records[0].character_1 == "A");
}

TEST_CASE("parse_model_output accepts an empty array") {
  ParsedOutput parsed = parse_model_output("[]");
  CHECK(parsed.records.empty());
  CHECK(parsed.malformed_records_dropped == 0);
}

TEST_CASE("invalid records are dropped and counted, not fatal") {
  json bad = record_json("A", "B", "friend");
  bad["affinity"] = "mixed";
  json body = json::array({record_json("A", "B", "friend"), bad, 17});
  ParsedOutput parsed = parse_model_output(body.dump());
  CHECK(parsed.records.size() == 1);
  CHECK(parsed.malformed_records_dropped == 2);
}

TEST_CASE("truncated arrays salvage their complete objects") {
  json first = record_json("A", "B", "friend");
  json second = record_json("C{braces}", "D\"quote", "enemy");
  std::string cut = "[" + first.dump() + "," + second.dump() + ",{\"character_1\": \"E";
  ParsedOutput parsed = parse_model_output(cut);
  REQUIRE(parsed.records.size() == 2);
  CHECK(parsed.records[1].character_1 == "C{braces}");
  CHECK(parsed.records[1].character_2 == "D\"quote");
}

TEST_CASE("unrecoverable text is MalformedOutput") {
  for (const char* raw : {"no json here", "{\"not\": \"an array\"}", "[", "[\"cut"}) {
    try {
      parse_model_output(raw);
      FAIL("expected MalformedOutput for: " << raw);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedOutput);
    }
  }
}

TEST_CASE("mock client plays scripts in order and repeats the last") {
  json fixtures = {{"v1", json::array({
                              {{"finish_reason", "error"}, {"detail", "flaky"}},
                              {{"finish_reason", "completed"}, {"text", "[]"}},
                          })}};
  MockClient client(fixtures);
  ClientRequest request;
  request.volume_id = "v1";
  CHECK(client.generate(request).finish_reason == FinishReason::Error);
  CHECK(client.generate(request).finish_reason == FinishReason::Completed);
  CHECK(client.generate(request).finish_reason == FinishReason::Completed);

  request.volume_id = "unknown";
  CHECK(client.generate(request).finish_reason == FinishReason::Error);
}

TEST_CASE("extract_network retries exactly once after a transport error") {
  json body = json::array({record_json("A", "B", "friend")});
  json fixtures = {{"v", json::array({
                             {{"finish_reason", "error"}, {"detail", "hiccup"}},
                             {{"finish_reason", "completed"}, {"text", body.dump()}},
                         })}};
  MockClient client(fixtures);
  ExtractionOutcome outcome = extract_network("v", "some text", client, TokenBudget{});
  REQUIRE(outcome.ok());
  CHECK(outcome.network.records.size() == 1);
  CHECK(outcome.network.volume_id == "v");
}

TEST_CASE("two transport errors in a row reject the volume") {
  json fixtures = {{"v", {{"finish_reason", "error"}, {"detail", "down"}}}};
  MockClient client(fixtures);
  ExtractionOutcome outcome = extract_network("v", "text", client, TokenBudget{});
  CHECK(outcome.status == ExtractStatus::Transport);
  CHECK(outcome.detail == "down");
  CHECK(rejection_reason(outcome.status) == "transport");
}

TEST_CASE("content filtering is terminal, no retry") {
  // A completed follow-up would be consumed if a retry happened.
  json fixtures = {{"v", json::array({
                             {{"finish_reason", "content_filter"}},
                             {{"finish_reason", "completed"}, {"text", "[]"}},
                         })}};
  MockClient client(fixtures);
  ExtractionOutcome outcome = extract_network("v", "text", client, TokenBudget{});
  CHECK(outcome.status == ExtractStatus::ContentFiltered);

  // The second scripted response went unused, which the next call proves.
  ClientRequest request;
  request.volume_id = "v";
  CHECK(client.generate(request).finish_reason == FinishReason::Completed);
}

TEST_CASE("output-limit responses are kept and flagged truncated") {
  json body = json::array({record_json("A", "B", "friend")});
  json fixtures = {
      {"v", {{"finish_reason", "output_limit"}, {"text", body.dump() + ", {\"chara"}}}};
  MockClient client(fixtures);
  ExtractionOutcome outcome = extract_network("v", "text", client, TokenBudget{});
  CHECK(outcome.ok());
  CHECK(outcome.truncated);
  CHECK(outcome.network.records.size() == 1);
}

TEST_CASE("over-budget volumes are rejected before any model call") {
  MockClient client(json::object());  // would answer with an error response
  TokenBudget tiny{200, 10};
  std::string text = "word word word word word word word word word word";
  ExtractionOutcome outcome = extract_network("v", text, client, tiny);
  CHECK(outcome.status == ExtractStatus::TooLong);
  CHECK(rejection_reason(outcome.status) == "too_long");
}

TEST_CASE("extraction repairs labels and drops duplicate pairs") {
  json wrong_coarse = record_json("A", "B", "husband");  // says social
  json duplicate = record_json("B", "A", "wife");
  json self_pair = record_json("C", "c", "friend");
  json body = json::array({wrong_coarse, duplicate, self_pair});
  json fixtures = {{"v", {{"finish_reason", "completed"}, {"text", body.dump()}}}};
  MockClient client(fixtures);
  ExtractionOutcome outcome = extract_network("v", "text", client, TokenBudget{});
  REQUIRE(outcome.ok());
  REQUIRE(outcome.network.records.size() == 1);
  CHECK(outcome.network.records[0].coarse_category == CoarseCategory::Familial);
  CHECK(outcome.duplicate_pairs_dropped == 2);
}

TEST_CASE("prompt overhead uses the estimator it is given") {
  int64_t real = prompt_overhead_tokens();
  CHECK(real > 1000);  // the instructions alone are far beyond this
  auto constant = [](std::string_view) -> int64_t { return 42; };
  CHECK(prompt_overhead_tokens(constant) == 42);
}
