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

#include "labels.hpp"

namespace narnet {

namespace {

struct FineEntry {
  std::string_view label;
  CoarseCategory coarse;
};

constexpr std::array<FineEntry, kFineCategoryCount> kFineTable = {{
    {"friend", CoarseCategory::Social},
    {"enemy", CoarseCategory::Social},
    {"acquaintance", CoarseCategory::Social},
    {"lovers", CoarseCategory::Social},
    {"unrequited love interest", CoarseCategory::Social},
    {"rivals", CoarseCategory::Social},
    {"employer", CoarseCategory::Professional},
    {"employee", CoarseCategory::Professional},
    {"colleague", CoarseCategory::Professional},
    {"servant", CoarseCategory::Professional},
    {"master", CoarseCategory::Professional},
    {"student", CoarseCategory::Professional},
    {"teacher", CoarseCategory::Professional},
    {"client", CoarseCategory::Professional},
    {"person offering service to client", CoarseCategory::Professional},
    {"husband", CoarseCategory::Familial},
    {"wife", CoarseCategory::Familial},
    {"brother", CoarseCategory::Familial},
    {"sister", CoarseCategory::Familial},
    {"cousin", CoarseCategory::Familial},
    {"uncle", CoarseCategory::Familial},
    {"aunt", CoarseCategory::Familial},
    {"niece", CoarseCategory::Familial},
    {"nephew", CoarseCategory::Familial},
    {"child", CoarseCategory::Familial},
    {"parent", CoarseCategory::Familial},
    {"grandchild", CoarseCategory::Familial},
    {"grandparent", CoarseCategory::Familial},
    {"orphan", CoarseCategory::Familial},
    {"foster parent", CoarseCategory::Familial},
    {"step-child", CoarseCategory::Familial},
    {"step-parent", CoarseCategory::Familial},
    {"in-law relation", CoarseCategory::Familial},
    {"half relation", CoarseCategory::Familial},
}};

}  // namespace

std::string_view to_string(Affinity a) {
  switch (a) {
    case Affinity::Positive: return "positive";
    case Affinity::Negative: return "negative";
    case Affinity::Neutral: return "neutral";
  }
  return "";
}

std::string_view to_string(CoarseCategory c) {
  switch (c) {
    case CoarseCategory::Social: return "social";
    case CoarseCategory::Professional: return "professional";
    case CoarseCategory::Familial: return "familial";
  }
  return "";
}

std::string_view to_string(FineCategory f) {
  return kFineTable[static_cast<size_t>(f)].label;
}

std::optional<Affinity> parse_affinity(std::string_view s) {
  if (s == "positive") return Affinity::Positive;
  if (s == "negative") return Affinity::Negative;
  if (s == "neutral") return Affinity::Neutral;
  return std::nullopt;
}

std::optional<CoarseCategory> parse_coarse_category(std::string_view s) {
  if (s == "social") return CoarseCategory::Social;
  if (s == "professional") return CoarseCategory::Professional;
  if (s == "familial") return CoarseCategory::Familial;
  return std::nullopt;
}

std::optional<FineCategory> parse_fine_category(std::string_view s) {
  for (size_t i = 0; i < kFineTable.size(); ++i) {
    if (kFineTable[i].label == s) return static_cast<FineCategory>(i);
  }
  return std::nullopt;
}

CoarseCategory coarse_of(FineCategory fine) {
  return kFineTable[static_cast<size_t>(fine)].coarse;
}

const std::array<FineCategory, kFineCategoryCount>& all_fine_categories() {
  static const auto labels = [] {
    std::array<FineCategory, kFineCategoryCount> out{};
    for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<FineCategory>(i);
    return out;
  }();
  return labels;
}

const std::array<CoarseCategory, kCoarseCategoryCount>& all_coarse_categories() {
  static const std::array<CoarseCategory, kCoarseCategoryCount> cats = {
      CoarseCategory::Social, CoarseCategory::Professional, CoarseCategory::Familial};
  return cats;
}

const std::array<Affinity, kAffinityCount>& all_affinities() {
  static const std::array<Affinity, kAffinityCount> values = {
      Affinity::Positive, Affinity::Negative, Affinity::Neutral};
  return values;
}

}  // namespace narnet
