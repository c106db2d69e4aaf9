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

#include "pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "align.hpp"
#include "community.hpp"
#include "csv.hpp"
#include "error.hpp"
#include "extract.hpp"
#include "jsonl.hpp"
#include "mock_client.hpp"
#include "stats.hpp"
#include "svg.hpp"

namespace narnet {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

uint64_t fnv1a64(std::string_view data) {
  uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string config_digest(const std::vector<std::string>& parts) {
  std::string joined;
  for (const std::string& part : parts) {
    joined += part;
    joined += '\n';
  }
  char buffer[24];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(fnv1a64(joined)));
  return buffer;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::Io, "cannot write " + path.string());
  }
  out << content;
  if (!out) {
    throw Error(ErrorCode::Io, "failed while writing " + path.string());
  }
}

void write_manifest(const std::filesystem::path& path, const ordered_json& manifest) {
  write_text_file(path, manifest.dump(2) + "\n");
}

int pick_threads(int requested, size_t work_items) {
  if (work_items == 0) return 1;
  int threads = requested;
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = static_cast<int>(hw == 0 ? 4 : std::min(hw, 8u));
  }
  return std::max(1, std::min<int>(threads, static_cast<int>(work_items)));
}

// Index-claiming worker pool; results land at their input index so output
// order never depends on scheduling. The first worker exception aborts the
// run after all workers stop.
template <typename Fn>
void parallel_for(size_t count, int threads, Fn&& fn) {
  if (count == 0) return;
  if (threads <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          next.store(count);  // drain remaining work
          return;
        }
      }
    });
  }
  for (std::thread& worker : pool) worker.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct VolumeSource {
  std::string volume_id;
  std::filesystem::path path;
};

std::vector<VolumeSource> list_corpus(const ExtractJob& job) {
  std::vector<VolumeSource> sources;
  const bool has_dir = !job.corpus_dir.empty();
  const bool has_manifest = !job.manifest_csv.empty();
  if (has_dir == has_manifest) {
    throw Error(ErrorCode::InvalidArgument,
                "provide exactly one of a corpus directory and a manifest CSV");
  }

  if (has_dir) {
    if (!std::filesystem::is_directory(job.corpus_dir)) {
      throw Error(ErrorCode::Io, job.corpus_dir.string() + " is not a directory");
    }
    for (const auto& entry : std::filesystem::directory_iterator(job.corpus_dir)) {
      if (!entry.is_regular_file()) continue;
      sources.push_back({entry.path().stem().string(), entry.path()});
    }
    std::sort(sources.begin(), sources.end(),
              [](const VolumeSource& a, const VolumeSource& b) {
                return a.path.filename().string() < b.path.filename().string();
              });
    return sources;
  }

  CsvTable table = read_csv(job.manifest_csv);
  int id_col = table.column("volume_id");
  int path_col = table.column("path");
  if (id_col < 0 || path_col < 0) {
    throw Error(ErrorCode::Parse,
                job.manifest_csv.string() + ": manifest needs volume_id and path columns");
  }
  const std::filesystem::path base = job.manifest_csv.parent_path();
  for (const auto& row : table.rows) {
    if (static_cast<int>(row.size()) <= std::max(id_col, path_col)) continue;
    std::filesystem::path p = row[path_col];
    if (p.is_relative()) p = base / p;
    sources.push_back({row[id_col], std::move(p)});
  }
  return sources;
}

ordered_json summary_counts(const ExtractSummary& s) {
  ordered_json counts;
  counts["volumes_total"] = s.volumes_total;
  counts["networks_written"] = s.networks_written;
  counts["rejected"] = s.rejected;
  counts["rejected_too_long"] = s.rejected_too_long;
  counts["rejected_content_filtered"] = s.rejected_content_filtered;
  counts["rejected_transport"] = s.rejected_transport;
  counts["rejected_malformed"] = s.rejected_malformed;
  counts["truncated"] = s.truncated;
  counts["malformed_records_dropped"] = s.malformed_records_dropped;
  counts["duplicate_pairs_dropped"] = s.duplicate_pairs_dropped;
  return counts;
}

}  // namespace

const std::vector<std::string>& metric_columns() {
  static const std::vector<std::string> columns = {
      "node_count",
      "edge_count",
      "component_count",
      "transitivity",
      "average_degree",
      "mean_betweenness",
      "mean_eigenvector",
      "star_edit_distance",
      "star_edit_distance_normalized",
      "protagonism",
      "mediatedness",
      "affinity_proportions_positive",
      "affinity_proportions_negative",
      "affinity_proportions_neutral",
      "coarse_proportions_social",
      "coarse_proportions_professional",
      "coarse_proportions_familial",
      "community_count_overall",
      "community_count_social",
      "community_count_professional",
      "community_count_familial",
  };
  return columns;
}

std::vector<std::optional<double>> metric_values(const NetworkMetrics& m) {
  std::vector<std::optional<double>> values;
  values.reserve(metric_columns().size());
  auto opt_int = [](const std::optional<int64_t>& v) -> std::optional<double> {
    if (!v) return std::nullopt;
    return static_cast<double>(*v);
  };
  values.push_back(static_cast<double>(m.node_count));
  values.push_back(static_cast<double>(m.edge_count));
  values.push_back(static_cast<double>(m.component_count));
  values.push_back(m.transitivity);
  values.push_back(m.average_degree);
  values.push_back(m.mean_betweenness);
  values.push_back(m.mean_eigenvector);
  values.push_back(opt_int(m.star_edit_distance));
  values.push_back(m.star_edit_distance_normalized);
  values.push_back(m.protagonism);
  values.push_back(m.mediatedness);
  if (m.affinity_proportions) {
    values.push_back(m.affinity_proportions->positive);
    values.push_back(m.affinity_proportions->negative);
    values.push_back(m.affinity_proportions->neutral);
  } else {
    values.insert(values.end(), 3, std::nullopt);
  }
  if (m.coarse_proportions) {
    values.push_back(m.coarse_proportions->social);
    values.push_back(m.coarse_proportions->professional);
    values.push_back(m.coarse_proportions->familial);
  } else {
    values.insert(values.end(), 3, std::nullopt);
  }
  values.push_back(static_cast<double>(m.community_count_overall));
  values.push_back(static_cast<double>(m.community_count_social));
  values.push_back(static_cast<double>(m.community_count_professional));
  values.push_back(static_cast<double>(m.community_count_familial));
  return values;
}

ExtractSummary run_extract(const ExtractJob& job) {
  job.budget.validate();
  if (job.out_jsonl.empty() || job.rejects_csv.empty()) {
    throw Error(ErrorCode::InvalidArgument, "extract needs both output paths");
  }

  std::unique_ptr<StructuredOutputClient> client;
  if (job.backend == Backend::Mock) {
    if (job.fixtures.empty()) {
      throw Error(ErrorCode::InvalidArgument, "mock backend needs a fixtures file");
    }
    client = std::make_unique<MockClient>(job.fixtures);
  } else {
    client = std::make_unique<HttpClient>(job.http);
  }

  std::vector<VolumeSource> sources = list_corpus(job);
  std::vector<ExtractionOutcome> outcomes(sources.size());
  parallel_for(sources.size(), pick_threads(job.threads, sources.size()), [&](size_t i) {
    std::string text = read_text_file(sources[i].path);
    if (text.empty()) {
      outcomes[i].network.volume_id = sources[i].volume_id;
      outcomes[i].status = ExtractStatus::Malformed;
      outcomes[i].detail = "volume text is empty";
      return;
    }
    outcomes[i] = extract_network(sources[i].volume_id, text, *client, job.budget);
  });

  ExtractSummary summary;
  summary.volumes_total = static_cast<int64_t>(sources.size());

  std::string jsonl;
  std::vector<std::vector<std::string>> reject_rows;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    const ExtractionOutcome& outcome = outcomes[i];
    if (outcome.ok()) {
      ++summary.networks_written;
      summary.malformed_records_dropped += outcome.malformed_records_dropped;
      summary.duplicate_pairs_dropped += outcome.duplicate_pairs_dropped;
      if (outcome.truncated) {
        ++summary.truncated;
        summary.truncated_volumes.push_back(sources[i].volume_id);
      }
      jsonl += network_to_jsonl_line(outcome.network);
      jsonl += '\n';
      continue;
    }
    ++summary.rejected;
    switch (outcome.status) {
      case ExtractStatus::TooLong: ++summary.rejected_too_long; break;
      case ExtractStatus::ContentFiltered: ++summary.rejected_content_filtered; break;
      case ExtractStatus::Transport: ++summary.rejected_transport; break;
      case ExtractStatus::Malformed: ++summary.rejected_malformed; break;
      case ExtractStatus::Ok: break;
    }
    reject_rows.push_back({sources[i].volume_id, std::string(rejection_reason(outcome.status)),
                           outcome.detail});
  }

  write_text_file(job.out_jsonl, jsonl);
  write_csv(job.rejects_csv, {"volume_id", "reason", "detail"}, reject_rows);

  ordered_json manifest;
  manifest["command"] = "extract";
  manifest["inputs"] = ordered_json::object();
  if (!job.corpus_dir.empty()) manifest["inputs"]["corpus"] = job.corpus_dir.string();
  if (!job.manifest_csv.empty()) manifest["inputs"]["manifest"] = job.manifest_csv.string();
  if (!job.fixtures.empty()) manifest["inputs"]["fixtures"] = job.fixtures.string();
  manifest["outputs"] = {{"networks", job.out_jsonl.string()},
                         {"rejects", job.rejects_csv.string()}};
  manifest["config_digest"] = config_digest(
      {"extract", job.corpus_dir.string(), job.manifest_csv.string(),
       job.backend == Backend::Mock ? "mock" : "http", job.fixtures.string(), job.http.url,
       job.http.model, std::to_string(job.budget.max_context_tokens),
       std::to_string(job.budget.max_output_tokens)});
  manifest["counts"] = summary_counts(summary);
  manifest["truncated_volumes"] = summary.truncated_volumes;
  write_manifest(job.out_jsonl.string() + ".manifest.json", manifest);
  return summary;
}

CleanSummary run_clean(const std::filesystem::path& in, const std::filesystem::path& out) {
  JsonlReadResult input = read_networks_jsonl(in);

  CleanSummary summary;
  summary.lines_bad = input.bad_lines;
  summary.networks_in = static_cast<int64_t>(input.networks.size());
  summary.invalid_records_dropped = input.invalid_records_dropped;

  std::vector<CharacterNetwork> cleaned;
  cleaned.reserve(input.networks.size());
  for (CharacterNetwork& net : input.networks) {
    for (RelationshipRecord& record : net.records) {
      if (!is_coarse_consistent(record)) {
        ++summary.repaired_records;
        record = repair(std::move(record));
      }
    }
    DedupeResult deduped = dedupe_network(net);
    summary.dropped_records += deduped.dropped;
    cleaned.push_back(std::move(deduped.network));
  }

  std::vector<CharacterNetwork> unique = dedupe_corpus(cleaned);
  summary.dropped_networks = static_cast<int64_t>(cleaned.size() - unique.size());
  summary.networks_out = static_cast<int64_t>(unique.size());

  write_networks_jsonl(out, unique);

  ordered_json manifest;
  manifest["command"] = "clean";
  manifest["inputs"] = {{"networks", in.string()}};
  manifest["outputs"] = {{"networks", out.string()}};
  manifest["config_digest"] = config_digest({"clean", in.string(), out.string()});
  ordered_json counts;
  counts["lines_bad"] = summary.lines_bad;
  counts["networks_in"] = summary.networks_in;
  counts["networks_out"] = summary.networks_out;
  counts["invalid_records_dropped"] = summary.invalid_records_dropped;
  counts["repaired_records"] = summary.repaired_records;
  counts["dropped_records"] = summary.dropped_records;
  counts["dropped_networks"] = summary.dropped_networks;
  manifest["counts"] = counts;
  write_manifest(out.string() + ".manifest.json", manifest);
  return summary;
}

namespace {

struct PartitionRow {
  std::string scope;
  std::string node;
  int community = 0;
};

void append_partition_rows(std::vector<PartitionRow>& rows, const std::string& scope,
                           const TypedMultigraph& g) {
  SimpleGraph simple = simple_projection(g);
  Partition partition = louvain(simple);
  for (size_t v = 0; v < simple.nodes.size(); ++v) {
    rows.push_back({scope, simple.nodes[v], partition.assignment[v]});
  }
}

}  // namespace

AnalyzeSummary run_analyze(const AnalyzeJob& job) {
  JsonlReadResult input = read_networks_jsonl(job.networks_jsonl);
  AnalyzeSummary summary;
  summary.networks = static_cast<int64_t>(input.networks.size());
  if (input.bad_lines > 0) {
    summary.notices.push_back(std::to_string(input.bad_lines) + " input line(s) skipped");
  }
  if (input.invalid_records_dropped > 0) {
    summary.notices.push_back(std::to_string(input.invalid_records_dropped) +
                              " invalid record(s) dropped on read");
  }

  std::map<std::string, VolumeMetadata> metadata;
  if (!job.metadata_csv.empty()) {
    for (VolumeMetadata& entry : read_metadata_csv(job.metadata_csv)) {
      metadata.emplace(entry.volume_id, std::move(entry));
    }
  }

  std::filesystem::create_directories(job.out_dir);

  const std::vector<CharacterNetwork>& nets = input.networks;
  std::vector<NetworkMetrics> metrics(nets.size());
  std::vector<std::vector<PartitionRow>> partitions(nets.size());
  parallel_for(nets.size(), pick_threads(job.threads, nets.size()), [&](size_t i) {
    metrics[i] = compute_metrics(nets[i]);
    if (!nets[i].records.empty()) {
      TypedMultigraph full = build_graph(nets[i]);
      append_partition_rows(partitions[i], "full", full);
      append_partition_rows(partitions[i], "social",
                            subgraph_by_coarse(full, CoarseCategory::Social));
      append_partition_rows(partitions[i], "professional",
                            subgraph_by_coarse(full, CoarseCategory::Professional));
      append_partition_rows(partitions[i], "familial",
                            subgraph_by_coarse(full, CoarseCategory::Familial));
    }
  });

  // Per-volume metrics table.
  std::vector<std::string> metrics_header = {"volume_id"};
  for (const std::string& column : metric_columns()) metrics_header.push_back(column);
  std::vector<std::vector<std::string>> metrics_rows;
  metrics_rows.reserve(nets.size());
  for (size_t i = 0; i < nets.size(); ++i) {
    std::vector<std::string> row = {nets[i].volume_id};
    for (const std::optional<double>& value : metric_values(metrics[i])) {
      row.push_back(value ? format_double(*value) : std::string());
    }
    metrics_rows.push_back(std::move(row));
  }
  write_csv(job.out_dir / "metrics.csv", metrics_header, metrics_rows);

  // Louvain partitions for every scope.
  std::vector<std::vector<std::string>> community_rows;
  for (size_t i = 0; i < nets.size(); ++i) {
    for (const PartitionRow& row : partitions[i]) {
      community_rows.push_back(
          {nets[i].volume_id, row.node, std::to_string(row.community), row.scope});
    }
  }
  write_csv(job.out_dir / "communities.csv",
            {"volume_id", "node", "community_id", "graph_scope"}, community_rows);

  // Joined observations per metric drive the group statistics.
  std::vector<std::optional<bool>> fiction_of(nets.size());
  std::vector<std::optional<int>> decade_of_net(nets.size());
  for (size_t i = 0; i < nets.size(); ++i) {
    auto it = metadata.find(nets[i].volume_id);
    if (it == metadata.end()) continue;
    ++summary.with_metadata;
    fiction_of[i] = it->second.is_fiction;
    decade_of_net[i] = it->second.decade();
  }

  std::vector<std::vector<std::optional<double>>> values(nets.size());
  for (size_t i = 0; i < nets.size(); ++i) values[i] = metric_values(metrics[i]);

  std::vector<std::vector<std::string>> comparison_rows;
  std::vector<std::vector<std::string>> trend_rows;
  for (size_t c = 0; c < metric_columns().size(); ++c) {
    const std::string& metric = metric_columns()[c];
    std::vector<Observation> observations(nets.size());
    for (size_t i = 0; i < nets.size(); ++i) {
      observations[i] = {fiction_of[i], decade_of_net[i], values[i][c]};
    }

    try {
      GroupCompareResult compare = group_compare(observations);
      comparison_rows.push_back({metric, format_double(compare.test.mean_x),
                                 format_double(compare.test.mean_y),
                                 format_double(compare.test.t), format_double(compare.test.df),
                                 format_double(compare.test.p),
                                 std::to_string(compare.test.n_x),
                                 std::to_string(compare.test.n_y)});
    } catch (const Error& e) {
      summary.notices.push_back("comparison " + metric + ": " + e.what());
    }

    for (bool fiction : {true, false}) {
      const char* group = fiction ? "fiction" : "nonfiction";
      try {
        CorrelationResult trend = decade_trend(observations, fiction);
        trend_rows.push_back({metric, group, format_double(trend.r), format_double(trend.p),
                              std::to_string(trend.n)});
      } catch (const Error& e) {
        summary.notices.push_back("trend " + metric + " (" + group + "): " + e.what());
      }
    }

    if (job.svg) {
      HistogramGroup fiction_group{"fiction", {}};
      HistogramGroup nonfiction_group{"nonfiction", {}};
      for (const Observation& row : observations) {
        if (!row.value || !row.is_fiction) continue;
        (*row.is_fiction ? fiction_group : nonfiction_group).values.push_back(*row.value);
      }
      write_text_file(job.out_dir / ("hist_" + metric + ".svg"),
                      grouped_histogram_svg(metric, {fiction_group, nonfiction_group}));
    }
  }
  summary.comparison_rows = static_cast<int64_t>(comparison_rows.size());
  summary.trend_rows = static_cast<int64_t>(trend_rows.size());

  write_csv(job.out_dir / "comparison.csv",
            {"metric", "fiction_mean", "nonfiction_mean", "t", "df", "p", "n_fiction",
             "n_nonfiction"},
            comparison_rows);
  write_csv(job.out_dir / "trends.csv", {"metric", "group", "r", "p", "n_decades"}, trend_rows);

  ordered_json manifest;
  manifest["command"] = "analyze";
  manifest["inputs"] = ordered_json::object();
  manifest["inputs"]["networks"] = job.networks_jsonl.string();
  if (!job.metadata_csv.empty()) manifest["inputs"]["metadata"] = job.metadata_csv.string();
  manifest["outputs"] = {{"out_dir", job.out_dir.string()}};
  manifest["config_digest"] =
      config_digest({"analyze", job.networks_jsonl.string(), job.metadata_csv.string(),
                     job.out_dir.string(), job.svg ? "svg" : ""});
  ordered_json counts;
  counts["networks"] = summary.networks;
  counts["with_metadata"] = summary.with_metadata;
  counts["comparison_rows"] = summary.comparison_rows;
  counts["trend_rows"] = summary.trend_rows;
  manifest["counts"] = counts;
  manifest["notices"] = summary.notices;
  write_manifest(job.out_dir / "manifest.json", manifest);
  return summary;
}

namespace {

void append_score_rows(std::vector<std::vector<std::string>>& rows,
                       const std::string& volume_id, const AccuracyReport& report) {
  auto append = [&](const char* attribute, const AttributeScore& score) {
    std::vector<std::string> row = {volume_id, attribute, std::to_string(score.matched),
                                    std::to_string(score.correct)};
    if (score.matched > 0) {
      row.push_back(format_double(score.accuracy));
      row.push_back(format_double(score.kappa));
    } else {
      row.push_back("");
      row.push_back("");
    }
    row.push_back(std::to_string(score.unmatched_gold));
    row.push_back(std::to_string(score.unmatched_pred));
    rows.push_back(std::move(row));
  };
  append("affinity", report.affinity);
  append("coarse_category", report.coarse);
  append("fine_category", report.fine);
}

}  // namespace

ValidateSummary run_validate(const std::filesystem::path& gold,
                             const std::filesystem::path& pred,
                             const std::filesystem::path& out_csv, bool fuzzy) {
  JsonlReadResult gold_input = read_networks_jsonl(gold);
  JsonlReadResult pred_input = read_networks_jsonl(pred);

  std::map<std::string, const CharacterNetwork*> pred_by_id;
  for (const CharacterNetwork& net : pred_input.networks) {
    pred_by_id.emplace(net.volume_id, &net);
  }

  ValidateSummary summary;
  std::vector<MatchedPair> pooled;
  int64_t pooled_unmatched_gold = 0;
  int64_t pooled_unmatched_pred = 0;
  std::vector<std::vector<std::string>> rows;
  std::set<std::string> shared_ids;
  for (const CharacterNetwork& gold_net : gold_input.networks) {
    auto it = pred_by_id.find(gold_net.volume_id);
    if (it == pred_by_id.end()) {
      ++summary.gold_only;
      continue;
    }
    shared_ids.insert(gold_net.volume_id);
    ++summary.shared_volumes;
    PairAlignment alignment = align_pairs(gold_net, *it->second, fuzzy);
    append_score_rows(rows, gold_net.volume_id,
                      score_matched(alignment.matched, alignment.unmatched_gold,
                                    alignment.unmatched_pred));
    pooled.insert(pooled.end(), alignment.matched.begin(), alignment.matched.end());
    pooled_unmatched_gold += alignment.unmatched_gold;
    pooled_unmatched_pred += alignment.unmatched_pred;
  }
  for (const CharacterNetwork& net : pred_input.networks) {
    if (!shared_ids.count(net.volume_id)) ++summary.pred_only;
  }

  if (summary.shared_volumes == 0) {
    throw Error(ErrorCode::NoMatches, "the gold and prediction files share no volume ids");
  }

  summary.aggregate = score_matched(pooled, pooled_unmatched_gold, pooled_unmatched_pred);
  append_score_rows(rows, "aggregate", summary.aggregate);

  write_csv(out_csv,
            {"volume_id", "attribute", "matched", "correct", "accuracy", "kappa",
             "unmatched_gold", "unmatched_pred"},
            rows);

  ordered_json manifest;
  manifest["command"] = "validate";
  manifest["inputs"] = {{"gold", gold.string()}, {"pred", pred.string()}};
  manifest["outputs"] = {{"report", out_csv.string()}};
  manifest["config_digest"] = config_digest(
      {"validate", gold.string(), pred.string(), out_csv.string(), fuzzy ? "fuzzy" : ""});
  ordered_json counts;
  counts["shared_volumes"] = summary.shared_volumes;
  counts["gold_only"] = summary.gold_only;
  counts["pred_only"] = summary.pred_only;
  manifest["counts"] = counts;
  write_manifest(out_csv.string() + ".manifest.json", manifest);
  return summary;
}

AlignSummary run_align(const std::filesystem::path& left, const std::filesystem::path& right,
                       double threshold, const std::filesystem::path& out_csv) {
  std::vector<VolumeMetadata> volumes = read_metadata_csv(left);
  std::vector<VolumeMetadata> catalog = read_metadata_csv(right);

  MatchOptions options;
  options.threshold = threshold;

  std::vector<std::optional<MatchCandidate>> matches(volumes.size());
  parallel_for(volumes.size(), pick_threads(0, volumes.size()), [&](size_t i) {
    matches[i] = best_match(volumes[i], catalog, options);
  });

  AlignSummary summary;
  summary.rows = static_cast<int64_t>(volumes.size());
  std::vector<std::vector<std::string>> rows;
  rows.reserve(volumes.size());
  for (size_t i = 0; i < volumes.size(); ++i) {
    if (matches[i]) {
      ++summary.matched;
      rows.push_back({volumes[i].volume_id, matches[i]->catalog_id,
                      format_double(matches[i]->title_similarity),
                      format_double(matches[i]->author_similarity)});
    } else {
      ++summary.unmatched;
      rows.push_back({volumes[i].volume_id, "", "", ""});
    }
  }
  write_csv(out_csv, {"volume_id", "catalog_id", "title_similarity", "author_similarity"},
            rows);

  ordered_json manifest;
  manifest["command"] = "align";
  manifest["inputs"] = {{"left", left.string()}, {"right", right.string()}};
  manifest["outputs"] = {{"matches", out_csv.string()}};
  manifest["config_digest"] = config_digest(
      {"align", left.string(), right.string(), format_double(threshold), out_csv.string()});
  ordered_json counts;
  counts["rows"] = summary.rows;
  counts["matched"] = summary.matched;
  counts["unmatched"] = summary.unmatched;
  manifest["counts"] = counts;
  write_manifest(out_csv.string() + ".manifest.json", manifest);
  return summary;
}

}  // namespace narnet
