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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace narnet {

// Valence of a relationship.
enum class Affinity : uint8_t { Positive, Negative, Neutral };

// Broad relationship class.
enum class CoarseCategory : uint8_t { Social, Professional, Familial };

// Specific relationship label. Order matches the annotation schema: the
// first 6 are social, the next 9 professional, the remaining 19 familial.
enum class FineCategory : uint8_t {
  Friend,
  Enemy,
  Acquaintance,
  Lovers,
  UnrequitedLoveInterest,
  Rivals,
  Employer,
  Employee,
  Colleague,
  Servant,
  Master,
  Student,
  Teacher,
  Client,
  ServiceProvider,  // "person offering service to client"
  Husband,
  Wife,
  Brother,
  Sister,
  Cousin,
  Uncle,
  Aunt,
  Niece,
  Nephew,
  Child,
  Parent,
  Grandchild,
  Grandparent,
  Orphan,
  FosterParent,
  StepChild,
  StepParent,
  InLawRelation,
  HalfRelation,
};

inline constexpr size_t kFineCategoryCount = 34;
inline constexpr size_t kCoarseCategoryCount = 3;
inline constexpr size_t kAffinityCount = 3;

std::string_view to_string(Affinity a);
std::string_view to_string(CoarseCategory c);
std::string_view to_string(FineCategory f);

std::optional<Affinity> parse_affinity(std::string_view s);
std::optional<CoarseCategory> parse_coarse_category(std::string_view s);
std::optional<FineCategory> parse_fine_category(std::string_view s);

// The coarse class a fine label belongs to. Total over the enumeration.
CoarseCategory coarse_of(FineCategory fine);

// All fine labels in schema order.
const std::array<FineCategory, kFineCategoryCount>& all_fine_categories();
const std::array<CoarseCategory, kCoarseCategoryCount>& all_coarse_categories();
const std::array<Affinity, kAffinityCount>& all_affinities();

}  // namespace narnet
