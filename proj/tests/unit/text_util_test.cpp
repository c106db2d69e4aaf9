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

#include "text_util.hpp"

#include <doctest.h>

using namespace narnet;

TEST_CASE("utf8 round trip") {
  std::string text = "caf\xC3\xA9 \xE2\x80\x99quote\xE2\x80\x99 \xF0\x9F\x99\x82";
  auto cps = utf8_decode(text);
  CHECK(utf8_encode(cps) == text);
}

TEST_CASE("utf8 decode replaces invalid bytes one at a time") {
  // 0xFF can never start a sequence; a truncated two-byte lead decays too.
  auto cps = utf8_decode("a\xFF\xC3");
  REQUIRE(cps.size() == 3);
  CHECK(cps[0] == 'a');
  CHECK(cps[1] == 0xFFFD);
  CHECK(cps[2] == 0xFFFD);
}

TEST_CASE("case folding covers ascii and latin-1") {
  CHECK(fold_codepoint('A') == 'a');
  CHECK(fold_codepoint('z') == 'z');
  CHECK(fold_codepoint(0xC9) == 0xE9);  // E acute
  CHECK(fold_codepoint(0xD7) == 0xD7);  // multiplication sign untouched
  CHECK(fold_codepoint(0x391) == 0x3B1);  // alpha
  CHECK(fold_codepoint(0x410) == 0x430);  // Cyrillic A
  CHECK(fold_codepoint('7') == '7');
}

TEST_CASE("fold_and_collapse") {
  CHECK(fold_and_collapse("  Don   QUIXOTE ") == "don quixote");
  CHECK(fold_and_collapse("A\tB\nC") == "a b c");
  CHECK(fold_and_collapse("") == "");
  CHECK(fold_and_collapse(" \t\n ") == "");
  // No-break space counts as whitespace.
  CHECK(fold_and_collapse("a\xC2\xA0\x62") == "a b");
}

TEST_CASE("normalize_for_match strips outer punctuation only") {
  CHECK(normalize_for_match("\"Don Quixote,\"") == "don quixote");
  CHECK(normalize_for_match("(Anna)") == "anna");
  CHECK(normalize_for_match("O'Brien") == "o'brien");  // interior kept
  CHECK(normalize_for_match("...") == "");
}

TEST_CASE("trim and count_words") {
  CHECK(trim("  a b  ") == "a b");
  CHECK(trim("") == "");
  CHECK(count_words("one two  three\n") == 3);
  CHECK(count_words("") == 0);
  CHECK(count_words("   ") == 0);
  CHECK(count_words("word") == 1);
}
