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

namespace narnet {

// Decodes UTF-8 into codepoints. Invalid bytes decode to U+FFFD one byte at
// a time so normalization stays total over arbitrary input.
std::vector<uint32_t> utf8_decode(std::string_view text);

std::string utf8_encode(const std::vector<uint32_t>& codepoints);

// Simple case fold covering ASCII, Latin-1, Latin Extended-A, Greek and
// Cyrillic letters. Codepoints outside those ranges pass through unchanged.
uint32_t fold_codepoint(uint32_t cp);

bool is_space_codepoint(uint32_t cp);

// Case-folds and collapses every internal whitespace run to a single space;
// leading and trailing whitespace is removed.
std::string fold_and_collapse(std::string_view text);

// fold_and_collapse plus stripping of leading/trailing punctuation.
std::string normalize_for_match(std::string_view text);

std::string trim(std::string_view text);

// Number of whitespace-separated word runs.
int64_t count_words(std::string_view text);

}  // namespace narnet
