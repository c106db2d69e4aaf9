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
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "records.hpp"

namespace narnet {

// Networks travel as JSON Lines: one object per line with fields
// `volume_id` and `records`; each record carries exactly the five
// annotation field names.

struct JsonlReadResult {
  std::vector<CharacterNetwork> networks;
  int64_t bad_lines = 0;               // unparseable or wrongly shaped lines
  int64_t invalid_records_dropped = 0; // records failing field validation
  std::vector<std::string> messages;   // one note per problem, with line numbers
};

// Converts one parsed JSON value into a validated record. Throws Error
// (MissingField, InvalidEnum, EmptyName, Parse) so callers can count
// dropped records uniformly.
RelationshipRecord record_from_json(const nlohmann::ordered_json& value);

JsonlReadResult parse_networks_jsonl(std::string_view content);

// Throws Error(Io) when the file cannot be read.
JsonlReadResult read_networks_jsonl(const std::filesystem::path& path);

std::string network_to_jsonl_line(const CharacterNetwork& net);

// Throws Error(Io) when the file cannot be written.
void write_networks_jsonl(const std::filesystem::path& path,
                          const std::vector<CharacterNetwork>& nets);

}  // namespace narnet
