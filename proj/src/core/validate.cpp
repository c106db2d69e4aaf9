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

#include "validate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "align.hpp"
#include "error.hpp"

namespace narnet {

namespace {

std::string attribute_label(const RelationshipRecord& record, RecordAttribute attribute) {
  switch (attribute) {
    case RecordAttribute::Affinity: return std::string(to_string(record.affinity));
    case RecordAttribute::Coarse: return std::string(to_string(record.coarse_category));
    case RecordAttribute::Fine: return std::string(to_string(record.fine_category));
  }
  return {};
}

bool attribute_equal(const MatchedPair& pair, RecordAttribute attribute) {
  switch (attribute) {
    case RecordAttribute::Affinity: return pair.gold.affinity == pair.pred.affinity;
    case RecordAttribute::Coarse:
      return pair.gold.coarse_category == pair.pred.coarse_category;
    case RecordAttribute::Fine: return pair.gold.fine_category == pair.pred.fine_category;
  }
  return false;
}

// Best-orientation name similarities for a fuzzy candidate; both must
// strictly exceed the threshold for the candidate to qualify.
struct FuzzyScore {
  double combined = 0.0;
  bool qualifies = false;
};

FuzzyScore fuzzy_score(const RelationshipRecord& gold, const RelationshipRecord& pred,
                       double threshold) {
  double s11 = similarity(gold.character_1, pred.character_1);
  double s22 = similarity(gold.character_2, pred.character_2);
  double s12 = similarity(gold.character_1, pred.character_2);
  double s21 = similarity(gold.character_2, pred.character_1);

  FuzzyScore straight{s11 + s22, s11 > threshold && s22 > threshold};
  FuzzyScore crossed{s12 + s21, s12 > threshold && s21 > threshold};
  if (straight.qualifies && crossed.qualifies) {
    return straight.combined >= crossed.combined ? straight : crossed;
  }
  return straight.qualifies ? straight : crossed;
}

}  // namespace

PairAlignment align_pairs(const CharacterNetwork& gold, const CharacterNetwork& pred,
                          bool fuzzy) {
  PairAlignment result;

  std::map<PairKey, size_t> pred_by_key;
  for (size_t i = 0; i < pred.records.size(); ++i) {
    pred_by_key.emplace(canonical_pair(pred.records[i]), i);
  }

  std::vector<bool> pred_used(pred.records.size(), false);
  std::vector<size_t> gold_left;
  for (size_t i = 0; i < gold.records.size(); ++i) {
    auto it = pred_by_key.find(canonical_pair(gold.records[i]));
    if (it != pred_by_key.end() && !pred_used[it->second]) {
      result.matched.push_back({gold.records[i], pred.records[it->second]});
      pred_used[it->second] = true;
    } else {
      gold_left.push_back(i);
    }
  }

  if (fuzzy) {
    constexpr double kThreshold = 0.8;
    std::vector<size_t> pred_left;
    for (size_t i = 0; i < pred.records.size(); ++i) {
      if (!pred_used[i]) pred_left.push_back(i);
    }

    struct Candidate {
      double combined;
      size_t gold_index;
      size_t pred_index;
    };
    std::vector<Candidate> candidates;
    for (size_t gi : gold_left) {
      for (size_t pi : pred_left) {
        FuzzyScore score = fuzzy_score(gold.records[gi], pred.records[pi], kThreshold);
        if (score.qualifies) {
          candidates.push_back({score.combined, gi, pi});
        }
      }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      if (a.combined != b.combined) return a.combined > b.combined;
      if (a.gold_index != b.gold_index) return a.gold_index < b.gold_index;
      return a.pred_index < b.pred_index;
    });

    std::map<size_t, bool> gold_taken;
    for (const Candidate& c : candidates) {
      if (gold_taken[c.gold_index] || pred_used[c.pred_index]) continue;
      gold_taken[c.gold_index] = true;
      pred_used[c.pred_index] = true;
      result.matched.push_back({gold.records[c.gold_index], pred.records[c.pred_index]});
    }
    gold_left.erase(std::remove_if(gold_left.begin(), gold_left.end(),
                                   [&](size_t gi) { return gold_taken[gi]; }),
                    gold_left.end());
  }

  result.unmatched_gold = static_cast<int64_t>(gold_left.size());
  result.unmatched_pred =
      static_cast<int64_t>(std::count(pred_used.begin(), pred_used.end(), false));
  return result;
}

double attribute_accuracy(const std::vector<MatchedPair>& pairs, RecordAttribute attribute) {
  if (pairs.empty()) {
    throw Error(ErrorCode::NoMatches, "no matched pairs to score");
  }
  int64_t correct = 0;
  for (const MatchedPair& pair : pairs) {
    if (attribute_equal(pair, attribute)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(pairs.size());
}

double cohen_kappa(const std::vector<MatchedPair>& pairs, RecordAttribute attribute) {
  if (pairs.empty()) {
    throw Error(ErrorCode::NoMatches, "no matched pairs to score");
  }
  const double n = static_cast<double>(pairs.size());
  int64_t agree = 0;
  std::map<std::string, int64_t> gold_counts, pred_counts;
  for (const MatchedPair& pair : pairs) {
    if (attribute_equal(pair, attribute)) ++agree;
    ++gold_counts[attribute_label(pair.gold, attribute)];
    ++pred_counts[attribute_label(pair.pred, attribute)];
  }
  double observed = static_cast<double>(agree) / n;
  if (observed == 1.0) return 1.0;

  double expected = 0.0;
  for (const auto& [label, count] : gold_counts) {
    auto it = pred_counts.find(label);
    if (it == pred_counts.end()) continue;
    expected += (static_cast<double>(count) / n) * (static_cast<double>(it->second) / n);
  }
  return (observed - expected) / (1.0 - expected);
}

AccuracyReport score_matched(const std::vector<MatchedPair>& pairs, int64_t unmatched_gold,
                             int64_t unmatched_pred) {
  AccuracyReport report;
  auto score_one = [&](RecordAttribute attribute) {
    AttributeScore score;
    score.matched = static_cast<int64_t>(pairs.size());
    score.unmatched_gold = unmatched_gold;
    score.unmatched_pred = unmatched_pred;
    if (!pairs.empty()) {
      int64_t correct = 0;
      for (const MatchedPair& pair : pairs) {
        if (attribute_equal(pair, attribute)) ++correct;
      }
      score.correct = correct;
      score.accuracy = attribute_accuracy(pairs, attribute);
      score.kappa = cohen_kappa(pairs, attribute);
    }
    return score;
  };
  report.affinity = score_one(RecordAttribute::Affinity);
  report.coarse = score_one(RecordAttribute::Coarse);
  report.fine = score_one(RecordAttribute::Fine);
  return report;
}

AccuracyReport score_networks(const CharacterNetwork& gold, const CharacterNetwork& pred,
                              bool fuzzy) {
  PairAlignment alignment = align_pairs(gold, pred, fuzzy);
  return score_matched(alignment.matched, alignment.unmatched_gold, alignment.unmatched_pred);
}

}  // namespace narnet
