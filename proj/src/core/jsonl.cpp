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

#include "jsonl.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace narnet {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* const kRecordFields[] = {"character_1", "character_2", "affinity",
                                     "coarse_category", "fine_category"};

}  // namespace

RelationshipRecord record_from_json(const nlohmann::ordered_json& value) {
  if (!value.is_object()) {
    throw Error(ErrorCode::Parse, "record is not an object");
  }
  std::map<std::string, std::string> raw;
  for (const char* field : kRecordFields) {
    if (value.contains(field) && value[field].is_string()) {
      raw[field] = value[field].get<std::string>();
    }
  }
  return parse_record(raw);
}

JsonlReadResult parse_networks_jsonl(std::string_view content) {
  JsonlReadResult result;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= content.size()) {
    size_t eol = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    ordered_json parsed = ordered_json::parse(line, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object() ||
        !parsed.contains("volume_id") || !parsed["volume_id"].is_string() ||
        !parsed.contains("records") || !parsed["records"].is_array()) {
      ++result.bad_lines;
      result.messages.push_back("line " + std::to_string(line_no) +
                                ": not a network object");
      continue;
    }

    CharacterNetwork net;
    net.volume_id = parsed["volume_id"].get<std::string>();
    for (const auto& entry : parsed["records"]) {
      try {
        net.records.push_back(record_from_json(entry));
      } catch (const Error& e) {
        ++result.invalid_records_dropped;
        result.messages.push_back("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    result.networks.push_back(std::move(net));
  }
  return result;
}

JsonlReadResult read_networks_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_networks_jsonl(buffer.str());
}

std::string network_to_jsonl_line(const CharacterNetwork& net) {
  ordered_json obj;
  obj["volume_id"] = net.volume_id;
  ordered_json records = ordered_json::array();
  for (const RelationshipRecord& record : net.records) {
    ordered_json entry;
    entry["character_1"] = record.character_1;
    entry["character_2"] = record.character_2;
    entry["affinity"] = std::string(to_string(record.affinity));
    entry["coarse_category"] = std::string(to_string(record.coarse_category));
    entry["fine_category"] = std::string(to_string(record.fine_category));
    records.push_back(std::move(entry));
  }
  obj["records"] = std::move(records);
  return obj.dump();
}

void write_networks_jsonl(const std::filesystem::path& path,
                          const std::vector<CharacterNetwork>& nets) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::Io, "cannot write " + path.string());
  }
  for (const CharacterNetwork& net : nets) {
    out << network_to_jsonl_line(net) << '\n';
  }
}

}  // namespace narnet
