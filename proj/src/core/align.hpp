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
#include <string_view>
#include <vector>

namespace narnet {

// Catalog metadata for one volume. year and is_fiction may be absent in
// sparse catalogs; decade is always derived from year, never stored.
struct VolumeMetadata {
  std::string volume_id;
  std::string title;
  std::string author;
  std::string language;
  std::optional<int> year;
  std::optional<bool> is_fiction;

  std::optional<int> decade() const;
};

// floor(year / 10) * 10, correct for years before the epoch too.
int decade_of(int year);

struct MatchCandidate {
  std::string catalog_id;
  double title_similarity = 0.0;
  double author_similarity = 0.0;
};

// Minimal number of single-codepoint insertions, deletions and
// substitutions turning a into b. Operates on UTF-8 codepoints, so one
// accented character counts as one edit.
int64_t levenshtein(std::string_view a, std::string_view b);

// 1 - levenshtein/max(len) over normalized strings (case-folded,
// whitespace-collapsed, outer punctuation stripped); 1.0 when both
// normalize to empty.
double similarity(std::string_view a, std::string_view b);

struct MatchOptions {
  double threshold = 0.8;  // both similarities must strictly exceed this
  // Skip candidates whose length difference alone already caps the
  // similarity at or below the threshold. Never changes the result.
  bool length_prefilter = true;
};

// Scans the catalog for the entry maximizing title + author similarity
// among those where both strictly exceed the threshold. Ties go to the
// lowest catalog index. No qualifying entry is a normal empty result.
std::optional<MatchCandidate> best_match(const VolumeMetadata& volume,
                                         const std::vector<VolumeMetadata>& catalog,
                                         const MatchOptions& options = {});

// Reads a catalog CSV with headers
// volume_id,title,author,language,year,is_fiction. Empty year or
// is_fiction cells become absent values. Throws Error(Io) on unreadable
// files and Error(Parse) on missing headers or unparseable cells.
std::vector<VolumeMetadata> read_metadata_csv(const std::filesystem::path& path);

}  // namespace narnet
