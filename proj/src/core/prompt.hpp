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
#include <string_view>

#include <json.hpp>

namespace narnet {

// Renders the annotation prompt with the narrative text substituted between
// the [begin text]/[end text] markers. Throws Error(EmptyText).
std::string build_prompt(std::string_view text);

// The structured-output schema for one relationship object: five required
// fields, closed enums, additionalProperties false.
const nlohmann::ordered_json& output_schema();

// Template rendered around an empty text slot; used to measure the fixed
// prompt overhead in tokens.
std::string prompt_shell();

}  // namespace narnet
