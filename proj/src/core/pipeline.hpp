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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "http_client.hpp"
#include "metrics.hpp"
#include "tokens.hpp"
#include "validate.hpp"

namespace narnet {

// The file-based corpus workflows behind the command-line stages. Each run
// writes its outputs plus a JSON manifest (inputs, outputs, config digest,
// counts) and returns the same counts to the caller. Per-volume problems
// are recorded, never thrown; exceptions mean configuration or input-file
// trouble that invalidates the whole run.

enum class Backend { Mock, Http };

struct ExtractJob {
  std::filesystem::path corpus_dir;    // exactly one of corpus_dir and
  std::filesystem::path manifest_csv;  // manifest_csv must be set
  Backend backend = Backend::Mock;
  std::filesystem::path fixtures;  // mock backend response script
  HttpClientConfig http;           // http backend endpoint
  TokenBudget budget;
  std::filesystem::path out_jsonl;
  std::filesystem::path rejects_csv;
  int threads = 0;  // 0 picks a small pool automatically
};

struct ExtractSummary {
  int64_t volumes_total = 0;
  int64_t networks_written = 0;
  int64_t rejected = 0;
  int64_t rejected_too_long = 0;
  int64_t rejected_content_filtered = 0;
  int64_t rejected_transport = 0;
  int64_t rejected_malformed = 0;
  int64_t truncated = 0;  // networks kept despite the output-token cutoff
  int64_t malformed_records_dropped = 0;
  int64_t duplicate_pairs_dropped = 0;
  std::vector<std::string> truncated_volumes;
};

// Runs the model over every volume and writes the networks JSONL plus a
// rejection log CSV (volume_id, reason, detail).
ExtractSummary run_extract(const ExtractJob& job);

struct CleanSummary {
  int64_t lines_bad = 0;
  int64_t networks_in = 0;
  int64_t networks_out = 0;
  int64_t invalid_records_dropped = 0;  // records that failed validation on read
  int64_t repaired_records = 0;         // coarse labels rewritten from fine
  int64_t dropped_records = 0;          // self-pairs and duplicate pairs
  int64_t dropped_networks = 0;         // corpus-level duplicate networks

  // A nonblank input line either parses into a network or counts as bad.
  bool parsed_nothing() const { return networks_in == 0 && lines_bad > 0; }
};

// Repairs, pair-dedupes, and corpus-dedupes a networks file. Running it
// on its own output changes nothing.
CleanSummary run_clean(const std::filesystem::path& in, const std::filesystem::path& out);

struct AnalyzeJob {
  std::filesystem::path networks_jsonl;
  std::filesystem::path metadata_csv;  // may be empty: metrics only
  std::filesystem::path out_dir;
  bool svg = false;
  int threads = 0;
};

struct AnalyzeSummary {
  int64_t networks = 0;
  int64_t with_metadata = 0;
  int64_t comparison_rows = 0;
  int64_t trend_rows = 0;
  // One line per skipped statistic (missing metadata, too few decades,
  // constant samples, ...); also stored in the manifest.
  std::vector<std::string> notices;
};

// Computes per-network metrics and community partitions, group
// comparisons, and decade trends; optionally renders one histogram SVG
// per metric. Writes metrics.csv, communities.csv, comparison.csv,
// trends.csv and manifest.json into out_dir.
AnalyzeSummary run_analyze(const AnalyzeJob& job);

struct ValidateSummary {
  int64_t shared_volumes = 0;
  int64_t gold_only = 0;
  int64_t pred_only = 0;
  AccuracyReport aggregate;
};

// Scores predictions against gold annotations for every shared volume and
// writes per-volume plus aggregate rows. Throws Error(NoMatches) when the
// files share no volume ids.
ValidateSummary run_validate(const std::filesystem::path& gold,
                             const std::filesystem::path& pred,
                             const std::filesystem::path& out_csv, bool fuzzy);

struct AlignSummary {
  int64_t rows = 0;
  int64_t matched = 0;
  int64_t unmatched = 0;
};

// Finds each left-catalog row's best right-catalog match above the
// threshold and writes the match CSV; unmatched rows keep empty match
// cells.
AlignSummary run_align(const std::filesystem::path& left, const std::filesystem::path& right,
                       double threshold, const std::filesystem::path& out_csv);

// Column names of the flattened per-volume metrics table, in CSV order
// (volume_id excluded).
const std::vector<std::string>& metric_columns();

// The metrics flattened to match metric_columns(); absent optionals stay
// absent and serialize as empty cells.
std::vector<std::optional<double>> metric_values(const NetworkMetrics& m);

}  // namespace narnet
