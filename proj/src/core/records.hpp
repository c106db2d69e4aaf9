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

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "labels.hpp"

namespace narnet {

// One annotated character pair.
struct RelationshipRecord {
  std::string character_1;
  std::string character_2;
  Affinity affinity = Affinity::Neutral;
  CoarseCategory coarse_category = CoarseCategory::Social;
  FineCategory fine_category = FineCategory::Friend;

  bool operator==(const RelationshipRecord&) const = default;
};

// A volume id plus its relationship records; the source of all graph views.
struct CharacterNetwork {
  std::string volume_id;
  std::vector<RelationshipRecord> records;

  bool operator==(const CharacterNetwork&) const = default;
};

// Canonical unordered pair key: case-folded, whitespace-collapsed names in
// lexicographic order. first == second marks a self-pair.
struct PairKey {
  std::string first;
  std::string second;

  auto operator<=>(const PairKey&) const = default;
};

// Canonical form of a character name. Throws Error(EmptyName) when nothing
// remains after normalization.
std::string canonical_name(std::string_view name);

PairKey canonical_pair(std::string_view a, std::string_view b);
PairKey canonical_pair(const RelationshipRecord& record);

// Builds a validated record from raw string fields. Throws
// Error(MissingField), Error(InvalidEnum) or Error(EmptyName).
RelationshipRecord parse_record(const std::map<std::string, std::string>& raw);

// Replaces the coarse label with the one implied by the fine label.
// Idempotent; every other field is untouched.
RelationshipRecord repair(RelationshipRecord record);

// True when the record's coarse label already matches its fine label.
bool is_coarse_consistent(const RelationshipRecord& record);

struct DedupeResult {
  CharacterNetwork network;
  int64_t dropped = 0;  // duplicate-pair and self-pair records removed
};

// Keeps the first record per canonical pair; drops later duplicates and
// self-pairs, counting both.
DedupeResult dedupe_network(const CharacterNetwork& net);

// Collapses networks whose canonical relationship sets are identical to the
// first occurrence, preserving input order.
std::vector<CharacterNetwork> dedupe_corpus(const std::vector<CharacterNetwork>& nets);

}  // namespace narnet
