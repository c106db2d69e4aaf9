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

#include "records.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "error.hpp"
#include "text_util.hpp"

namespace narnet {

std::string canonical_name(std::string_view name) {
  std::string canonical = fold_and_collapse(name);
  if (canonical.empty()) {
    throw Error(ErrorCode::EmptyName, "character name is empty after normalization");
  }
  return canonical;
}

PairKey canonical_pair(std::string_view a, std::string_view b) {
  std::string ca = canonical_name(a);
  std::string cb = canonical_name(b);
  if (cb < ca) std::swap(ca, cb);
  return PairKey{std::move(ca), std::move(cb)};
}

PairKey canonical_pair(const RelationshipRecord& record) {
  return canonical_pair(record.character_1, record.character_2);
}

namespace {

const std::string& require_field(const std::map<std::string, std::string>& raw,
                                 const std::string& name) {
  auto it = raw.find(name);
  if (it == raw.end()) {
    throw Error(ErrorCode::MissingField, "missing field: " + name);
  }
  return it->second;
}

}  // namespace

RelationshipRecord parse_record(const std::map<std::string, std::string>& raw) {
  RelationshipRecord record;
  record.character_1 = trim(require_field(raw, "character_1"));
  record.character_2 = trim(require_field(raw, "character_2"));
  if (record.character_1.empty() || record.character_2.empty()) {
    throw Error(ErrorCode::EmptyName, "character name is blank");
  }

  const std::string& affinity = require_field(raw, "affinity");
  const std::string& coarse = require_field(raw, "coarse_category");
  const std::string& fine = require_field(raw, "fine_category");

  auto parsed_affinity = parse_affinity(affinity);
  if (!parsed_affinity) {
    throw Error(ErrorCode::InvalidEnum, "invalid affinity: \"" + affinity + "\"");
  }
  auto parsed_coarse = parse_coarse_category(coarse);
  if (!parsed_coarse) {
    throw Error(ErrorCode::InvalidEnum, "invalid coarse_category: \"" + coarse + "\"");
  }
  auto parsed_fine = parse_fine_category(fine);
  if (!parsed_fine) {
    throw Error(ErrorCode::InvalidEnum, "invalid fine_category: \"" + fine + "\"");
  }

  record.affinity = *parsed_affinity;
  record.coarse_category = *parsed_coarse;
  record.fine_category = *parsed_fine;
  return record;
}

RelationshipRecord repair(RelationshipRecord record) {
  record.coarse_category = coarse_of(record.fine_category);
  return record;
}

bool is_coarse_consistent(const RelationshipRecord& record) {
  return record.coarse_category == coarse_of(record.fine_category);
}

DedupeResult dedupe_network(const CharacterNetwork& net) {
  DedupeResult result;
  result.network.volume_id = net.volume_id;
  std::set<PairKey> seen;
  for (const RelationshipRecord& record : net.records) {
    PairKey key = canonical_pair(record);
    if (key.first == key.second) {
      ++result.dropped;  // self-pair
      continue;
    }
    if (!seen.insert(std::move(key)).second) {
      ++result.dropped;
      continue;
    }
    result.network.records.push_back(record);
  }
  return result;
}

namespace {

// Identity of a network for corpus-level dedup: the set of
// (pair key, affinity, fine label) tuples.
using RelationshipSet = std::set<std::tuple<PairKey, Affinity, FineCategory>>;

RelationshipSet relationship_set(const CharacterNetwork& net) {
  RelationshipSet out;
  for (const RelationshipRecord& record : net.records) {
    out.emplace(canonical_pair(record), record.affinity, record.fine_category);
  }
  return out;
}

}  // namespace

std::vector<CharacterNetwork> dedupe_corpus(const std::vector<CharacterNetwork>& nets) {
  std::vector<CharacterNetwork> out;
  std::set<RelationshipSet> seen;
  for (const CharacterNetwork& net : nets) {
    if (seen.insert(relationship_set(net)).second) {
      out.push_back(net);
    }
  }
  return out;
}

}  // namespace narnet
