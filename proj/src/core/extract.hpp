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
#include <string>
#include <string_view>
#include <vector>

#include "client.hpp"
#include "records.hpp"
#include "tokens.hpp"

namespace narnet {

// Result of a tolerant parse of model output text.
struct ParsedOutput {
  std::vector<RelationshipRecord> records;
  int64_t malformed_records_dropped = 0;
};

// Parses the model's response as a JSON array of relationship records.
// Records that fail field validation are dropped and counted rather than
// failing the whole response. When the text is not a well-formed array
// (typically an output cut off mid-array), complete leading objects after
// the first '[' are salvaged. Throws Error(MalformedOutput) only when the
// text is not an array and no complete object can be recovered.
ParsedOutput parse_model_output(std::string_view raw);

enum class ExtractStatus {
  Ok,
  TooLong,          // estimated tokens exceed the context budget
  ContentFiltered,  // backend refused the text; never retried
  Transport,        // backend error after one retry
  Malformed,        // response had no recoverable record
};

// Reason string for the rejection log: "too_long", "content_filtered",
// "transport", or "malformed". Empty for Ok.
std::string_view rejection_reason(ExtractStatus status);

struct ExtractionOutcome {
  ExtractStatus status = ExtractStatus::Ok;
  CharacterNetwork network;  // repaired and pair-deduped; valid when ok()
  bool truncated = false;    // backend stopped at the output-token limit
  int64_t malformed_records_dropped = 0;
  int64_t duplicate_pairs_dropped = 0;  // self-pairs and repeated pairs
  std::string detail;                   // failure description for the log

  bool ok() const { return status == ExtractStatus::Ok; }
};

// Tokens consumed by the prompt template itself (instructions, example,
// schema) as seen by the given estimator; added on top of each volume's
// own estimate when checking the context budget.
int64_t prompt_overhead_tokens(const TokenEstimator& estimator = estimate_tokens);

// Runs the full per-volume pipeline: budget check, prompt build, one
// model call (with a single retry after a transport error), tolerant
// parse, record repair, and pair dedup. Failures are reported in the
// outcome rather than thrown so corpus runs can log and continue.
ExtractionOutcome extract_network(const std::string& volume_id, const std::string& text,
                                  StructuredOutputClient& client, const TokenBudget& budget,
                                  const TokenEstimator& estimator = estimate_tokens);

}  // namespace narnet
