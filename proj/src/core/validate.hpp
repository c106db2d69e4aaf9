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
#include <vector>

#include "records.hpp"

namespace narnet {

// Gold and predicted annotations for one matched character pair. Records
// are scored exactly as given; no repair happens here, so coarse labels
// can disagree even where fine labels agree.
struct MatchedPair {
  RelationshipRecord gold;
  RelationshipRecord pred;
};

struct PairAlignment {
  std::vector<MatchedPair> matched;
  int64_t unmatched_gold = 0;
  int64_t unmatched_pred = 0;
};

// Matches records across two pair-deduped networks of the same volume by
// equal canonical pair keys. With fuzzy enabled, leftover records on both
// sides are then paired greedily by descending combined name similarity
// when both name similarities strictly exceed 0.8 in the best of the two
// endpoint orientations.
PairAlignment align_pairs(const CharacterNetwork& gold, const CharacterNetwork& pred,
                          bool fuzzy = false);

enum class RecordAttribute { Affinity, Coarse, Fine };

// Fraction of matched pairs whose attribute values agree.
// Throws Error(NoMatches) when there are no matched pairs.
double attribute_accuracy(const std::vector<MatchedPair>& pairs, RecordAttribute attribute);

// Cohen's kappa between gold and predicted labels over matched pairs, with
// expected agreement from both sides' marginal label frequencies. Perfect
// observed agreement returns 1 even when expected agreement is also 1.
// Throws Error(NoMatches) when there are no matched pairs.
double cohen_kappa(const std::vector<MatchedPair>& pairs, RecordAttribute attribute);

struct AttributeScore {
  int64_t matched = 0;
  int64_t correct = 0;
  double accuracy = 0.0;  // meaningful only when matched > 0
  double kappa = 0.0;     // meaningful only when matched > 0
  int64_t unmatched_gold = 0;
  int64_t unmatched_pred = 0;
};

struct AccuracyReport {
  AttributeScore affinity;
  AttributeScore coarse;
  AttributeScore fine;
};

// Aligns one gold/pred network pair and scores all three attributes.
AccuracyReport score_networks(const CharacterNetwork& gold, const CharacterNetwork& pred,
                              bool fuzzy = false);

// Scores attributes over an already-pooled set of matched pairs (used for
// corpus aggregates across volumes).
AccuracyReport score_matched(const std::vector<MatchedPair>& pairs, int64_t unmatched_gold,
                             int64_t unmatched_pred);

}  // namespace narnet
