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

#include "align.hpp"

#include <algorithm>
#include <cctype>

#include "csv.hpp"
#include "error.hpp"
#include "text_util.hpp"

namespace narnet {

namespace {

int64_t levenshtein_codepoints(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  const size_t n = b.size();
  std::vector<int64_t> prev(n + 1), curr(n + 1);
  for (size_t j = 0; j <= n; ++j) prev[j] = static_cast<int64_t>(j);
  for (size_t i = 1; i <= a.size(); ++i) {
    curr[0] = static_cast<int64_t>(i);
    for (size_t j = 1; j <= n; ++j) {
      int64_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, prev[j - 1] + cost});
    }
    std::swap(prev, curr);
  }
  return prev[n];
}

double similarity_codepoints(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein_codepoints(a, b)) / static_cast<double>(longest);
}

// Largest similarity still possible given only the two lengths; the edit
// distance is at least the length difference.
double similarity_upper_bound(size_t len_a, size_t len_b) {
  size_t longest = std::max(len_a, len_b);
  if (longest == 0) return 1.0;
  size_t diff = len_a > len_b ? len_a - len_b : len_b - len_a;
  return 1.0 - static_cast<double>(diff) / static_cast<double>(longest);
}

}  // namespace

std::optional<int> VolumeMetadata::decade() const {
  if (!year) return std::nullopt;
  return decade_of(*year);
}

int decade_of(int year) {
  int d = year / 10;
  if (year < 0 && year % 10 != 0) --d;  // truncation rounds toward zero
  return d * 10;
}

int64_t levenshtein(std::string_view a, std::string_view b) {
  return levenshtein_codepoints(utf8_decode(a), utf8_decode(b));
}

double similarity(std::string_view a, std::string_view b) {
  return similarity_codepoints(utf8_decode(normalize_for_match(a)),
                               utf8_decode(normalize_for_match(b)));
}

std::optional<MatchCandidate> best_match(const VolumeMetadata& volume,
                                         const std::vector<VolumeMetadata>& catalog,
                                         const MatchOptions& options) {
  const std::vector<uint32_t> title = utf8_decode(normalize_for_match(volume.title));
  const std::vector<uint32_t> author = utf8_decode(normalize_for_match(volume.author));

  std::optional<MatchCandidate> best;
  double best_score = 0.0;
  for (const VolumeMetadata& entry : catalog) {
    std::vector<uint32_t> cand_title = utf8_decode(normalize_for_match(entry.title));
    std::vector<uint32_t> cand_author = utf8_decode(normalize_for_match(entry.author));
    if (options.length_prefilter) {
      // The small slack keeps rounding from ever skipping a candidate that
      // full computation would accept.
      if (similarity_upper_bound(title.size(), cand_title.size()) <=
              options.threshold - 1e-9 ||
          similarity_upper_bound(author.size(), cand_author.size()) <=
              options.threshold - 1e-9) {
        continue;
      }
    }
    double title_sim = similarity_codepoints(title, cand_title);
    if (title_sim <= options.threshold) continue;
    double author_sim = similarity_codepoints(author, cand_author);
    if (author_sim <= options.threshold) continue;
    double score = title_sim + author_sim;
    if (!best || score > best_score) {
      best = MatchCandidate{entry.volume_id, title_sim, author_sim};
      best_score = score;
    }
  }
  return best;
}

std::vector<VolumeMetadata> read_metadata_csv(const std::filesystem::path& path) {
  CsvTable table = read_csv(path);
  const char* const required[] = {"volume_id", "title",  "author",
                                  "language",  "year",   "is_fiction"};
  int cols[6];
  for (int i = 0; i < 6; ++i) {
    cols[i] = table.column(required[i]);
    if (cols[i] < 0) {
      throw Error(ErrorCode::Parse,
                  path.string() + ": missing column " + required[i]);
    }
  }

  std::vector<VolumeMetadata> entries;
  entries.reserve(table.rows.size());
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    auto cell = [&](int c) -> std::string {
      return c < static_cast<int>(row.size()) ? row[c] : std::string();
    };
    VolumeMetadata entry;
    entry.volume_id = cell(cols[0]);
    entry.title = cell(cols[1]);
    entry.author = cell(cols[2]);
    entry.language = cell(cols[3]);

    std::string year = trim(cell(cols[4]));
    if (!year.empty()) {
      try {
        entry.year = std::stoi(year);
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, path.string() + " row " + std::to_string(r + 2) +
                                          ": bad year \"" + year + "\"");
      }
    }

    std::string fiction = trim(cell(cols[5]));
    std::transform(fiction.begin(), fiction.end(), fiction.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (fiction == "true" || fiction == "1") {
      entry.is_fiction = true;
    } else if (fiction == "false" || fiction == "0") {
      entry.is_fiction = false;
    } else if (!fiction.empty()) {
      throw Error(ErrorCode::Parse, path.string() + " row " + std::to_string(r + 2) +
                                        ": bad is_fiction \"" + fiction + "\"");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace narnet
