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

#include <json.hpp>

#include "error.hpp"
#include "jsonl.hpp"
#include "prompt.hpp"

namespace narnet {

namespace {

using ordered_json = nlohmann::ordered_json;

// Scans `raw` from just past the first '[' and returns each complete
// top-level {...} object as its own substring. String literals and escapes
// are honored so braces inside names do not confuse the balance count.
// A trailing object cut off mid-way is simply not returned.
std::vector<std::string_view> salvage_objects(std::string_view raw) {
  std::vector<std::string_view> objects;
  size_t start = raw.find('[');
  if (start == std::string_view::npos) return objects;

  int depth = 0;
  bool in_string = false;
  bool escaped = false;
  size_t object_begin = 0;
  for (size_t i = start + 1; i < raw.size(); ++i) {
    char c = raw[i];
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      if (depth == 0) object_begin = i;
      ++depth;
    } else if (c == '}') {
      if (depth > 0 && --depth == 0) {
        objects.push_back(raw.substr(object_begin, i - object_begin + 1));
      }
    } else if (c == ']' && depth == 0) {
      break;  // array closed; anything after it is not ours
    }
  }
  return objects;
}

void append_record(ParsedOutput& out, const ordered_json& value) {
  try {
    out.records.push_back(record_from_json(value));
  } catch (const Error&) {
    ++out.malformed_records_dropped;
  }
}

}  // namespace

ParsedOutput parse_model_output(std::string_view raw) {
  ParsedOutput out;
  ordered_json parsed = ordered_json::parse(raw, nullptr, false);
  if (!parsed.is_discarded() && parsed.is_array()) {
    for (const auto& entry : parsed) {
      append_record(out, entry);
    }
    return out;
  }

  // Not a clean array; recover whatever complete objects precede the cut.
  std::vector<std::string_view> chunks = salvage_objects(raw);
  if (chunks.empty()) {
    throw Error(ErrorCode::MalformedOutput, "response is not a JSON array of records");
  }
  for (std::string_view chunk : chunks) {
    ordered_json value = ordered_json::parse(chunk, nullptr, false);
    if (value.is_discarded()) {
      ++out.malformed_records_dropped;
      continue;
    }
    append_record(out, value);
  }
  return out;
}

std::string_view rejection_reason(ExtractStatus status) {
  switch (status) {
    case ExtractStatus::Ok: return "";
    case ExtractStatus::TooLong: return "too_long";
    case ExtractStatus::ContentFiltered: return "content_filtered";
    case ExtractStatus::Transport: return "transport";
    case ExtractStatus::Malformed: return "malformed";
  }
  return "";
}

int64_t prompt_overhead_tokens(const TokenEstimator& estimator) {
  return estimator(prompt_shell());
}

ExtractionOutcome extract_network(const std::string& volume_id, const std::string& text,
                                  StructuredOutputClient& client, const TokenBudget& budget,
                                  const TokenEstimator& estimator) {
  ExtractionOutcome outcome;
  outcome.network.volume_id = volume_id;

  try {
    check_budget(estimator(text), budget, prompt_overhead_tokens(estimator));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLong) throw;
    outcome.status = ExtractStatus::TooLong;
    outcome.detail = e.what();
    return outcome;
  }

  ClientRequest request;
  request.volume_id = volume_id;
  request.prompt = build_prompt(text);
  request.schema = output_schema();
  request.max_output_tokens = budget.max_output_tokens;

  ModelResponse response = client.generate(request);
  if (response.finish_reason == FinishReason::Error) {
    response = client.generate(request);  // one retry on transport trouble
  }
  switch (response.finish_reason) {
    case FinishReason::Error:
      outcome.status = ExtractStatus::Transport;
      outcome.detail = response.detail;
      return outcome;
    case FinishReason::ContentFilter:
      outcome.status = ExtractStatus::ContentFiltered;
      outcome.detail = response.detail;
      return outcome;
    case FinishReason::OutputLimit:
      outcome.truncated = true;
      break;
    case FinishReason::Completed:
      break;
  }

  ParsedOutput parsed;
  try {
    parsed = parse_model_output(response.text);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MalformedOutput) throw;
    outcome.status = ExtractStatus::Malformed;
    outcome.detail = e.what();
    return outcome;
  }
  outcome.malformed_records_dropped = parsed.malformed_records_dropped;

  CharacterNetwork net;
  net.volume_id = volume_id;
  net.records = std::move(parsed.records);
  for (RelationshipRecord& record : net.records) {
    record = repair(std::move(record));
  }
  DedupeResult deduped = dedupe_network(net);
  outcome.network = std::move(deduped.network);
  outcome.duplicate_pairs_dropped = deduped.dropped;
  return outcome;
}

}  // namespace narnet
