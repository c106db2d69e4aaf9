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

#include "prompt.hpp"

#include "error.hpp"
#include "labels.hpp"

namespace narnet {

namespace {
#include "prompt_template.inc"
}

std::string build_prompt(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::EmptyText, "narrative text is empty");
  }
  std::string prompt;
  prompt.reserve(kPromptPrefix.size() + text.size() + kPromptSuffix.size());
  prompt.append(kPromptPrefix);
  prompt.append(text);
  prompt.append(kPromptSuffix);
  return prompt;
}

std::string prompt_shell() {
  std::string shell;
  shell.reserve(kPromptPrefix.size() + kPromptSuffix.size());
  shell.append(kPromptPrefix);
  shell.append(kPromptSuffix);
  return shell;
}

const nlohmann::ordered_json& output_schema() {
  static const nlohmann::ordered_json schema = [] {
    using json = nlohmann::ordered_json;
    json properties;
    properties["character_1"] = {
        {"type", "string"}, {"description", "First character in the relationship"}};
    properties["character_2"] = {
        {"type", "string"}, {"description", "Second character in the relationship"}};
    properties["affinity"] = {
        {"type", "string"},
        {"enum", {"positive", "negative", "neutral"}},
        {"description", "The nature of the relationship between characters"}};
    properties["coarse_category"] = {
        {"type", "string"},
        {"enum", {"professional", "social", "familial"}},
        {"description", "Broad category of the relationship"}};
    json fine_labels = json::array();
    for (FineCategory fine : all_fine_categories()) {
      fine_labels.push_back(std::string(to_string(fine)));
    }
    properties["fine_category"] = {{"type", "string"},
                                   {"description", "Specific type of relationship"},
                                   {"enum", std::move(fine_labels)}};

    json schema_doc;
    schema_doc["$schema"] = "http://json-schema.org/draft-07/schema#";
    schema_doc["type"] = "object";
    schema_doc["title"] = "Character Relationship Schema";
    schema_doc["description"] =
        "Schema for describing relationships between literary characters";
    schema_doc["required"] = {"character_1", "character_2", "affinity",
                              "coarse_category", "fine_category"};
    schema_doc["properties"] = std::move(properties);
    schema_doc["additionalProperties"] = false;
    return schema_doc;
  }();
  return schema;
}

}  // namespace narnet
