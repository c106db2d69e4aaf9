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

#include "csv.hpp"

#include <doctest.h>

using namespace narnet;

TEST_CASE("parse_csv handles quoting, escapes, and CRLF") {
  auto rows = parse_csv("a,b,c\r\n\"x,y\",\"he said \"\"hi\"\"\",\n1,2,3\n");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"a", "b", "c"});
  CHECK(rows[1] == std::vector<std::string>{"x,y", "he said \"hi\"", ""});
  CHECK(rows[2] == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("parse_csv keeps newlines inside quotes") {
  auto rows = parse_csv("a\n\"line\nbreak\",2\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][0] == "line\nbreak");
}

TEST_CASE("csv_field quotes only when needed") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("with,comma") == "\"with,comma\"");
  CHECK(csv_field("with\"quote") == "\"with\"\"quote\"");
  CHECK(csv_field("with\nnewline") == "\"with\nnewline\"");
  CHECK(csv_field("") == "");
}

TEST_CASE("csv_row joins fields") {
  CHECK(csv_row({"a", "b,c", ""}) == "a,\"b,c\",");
}

TEST_CASE("round trip through csv_row and parse_csv") {
  std::vector<std::string> fields = {"x", "a,b", "q\"q", "multi\nline", ""};
  auto rows = parse_csv(csv_row(fields) + "\n");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == fields);
}

TEST_CASE("CsvTable column lookup") {
  CsvTable table;
  table.header = {"volume_id", "title"};
  CHECK(table.column("title") == 1);
  CHECK(table.column("year") == -1);
}
