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

#include "narrative_net.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "align.hpp"
#include "error.hpp"
#include "jsonl.hpp"
#include "metrics.hpp"
#include "pipeline.hpp"
#include "prompt.hpp"
#include "records.hpp"
#include "stats.hpp"
#include "text_util.hpp"
#include "tokens.hpp"

namespace {

thread_local std::string g_last_error;

nn_status status_of(narnet::ErrorCode code) {
  using narnet::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::MissingField:
    case ErrorCode::InvalidEnum:
    case ErrorCode::EmptyName:
    case ErrorCode::EmptyText:
    case ErrorCode::SelfLoop:
    case ErrorCode::LengthMismatch:
      return NN_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse:
    case ErrorCode::MalformedOutput:
      return NN_ERR_PARSE;
    case ErrorCode::Io:
    case ErrorCode::Transport:
      return NN_ERR_IO;
    case ErrorCode::NoMatches:
    case ErrorCode::MissingMetadata:
      return NN_ERR_NO_DATA;
    default:
      return NN_ERR_DOMAIN;
  }
}

// Runs fn under the library's exception wall: exceptions become status
// codes and a thread-local message. fn may itself return a status to
// signal failures that are not exceptional in the C++ layer.
template <typename Fn>
nn_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const narnet::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NN_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return NN_ERR_INTERNAL;
  }
}

nn_status fail(nn_status status, const char* message) {
  g_last_error = message;
  return status;
}

// C-owned copy; freed by the caller through nn_string_free (plain free
// would also work, but the header promises only nn_string_free).
char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) {
    std::memcpy(out, s.c_str(), s.size() + 1);
  }
  return out;
}

std::string from_c(const char* s) { return s == nullptr ? std::string() : std::string(s); }

void copy_score(const narnet::AttributeScore& in, nn_attribute_score& out) {
  out.matched = in.matched;
  out.correct = in.correct;
  out.accuracy = in.accuracy;
  out.kappa = in.kappa;
  out.unmatched_gold = in.unmatched_gold;
  out.unmatched_pred = in.unmatched_pred;
}

}  // namespace

struct nn_corpus {
  std::vector<narnet::CharacterNetwork> networks;
  std::mutex mutex;
  // Flattened metric values, computed lazily per network.
  std::vector<std::optional<std::vector<std::optional<double>>>> values;
};

extern "C" {

const char* nn_status_name(nn_status status) {
  switch (status) {
    case NN_OK: return "ok";
    case NN_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case NN_ERR_PARSE: return "parse_error";
    case NN_ERR_IO: return "io_error";
    case NN_ERR_DOMAIN: return "domain_error";
    case NN_ERR_NO_DATA: return "no_data";
    case NN_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* nn_last_error(void) { return g_last_error.c_str(); }

const char* nn_version(void) { return "0.1.0"; }

void nn_string_free(char* s) { std::free(s); }

nn_status nn_run_extract(const nn_extract_options* options, nn_extract_summary* summary) {
  return guarded([&]() -> nn_status {
    if (options == nullptr) {
      return fail(NN_ERR_INVALID_ARGUMENT, "options must not be NULL");
    }
    narnet::ExtractJob job;
    job.corpus_dir = from_c(options->corpus_dir);
    job.manifest_csv = from_c(options->manifest_csv);
    job.backend = options->use_http_backend ? narnet::Backend::Http : narnet::Backend::Mock;
    job.fixtures = from_c(options->fixtures);
    job.http.url = from_c(options->http_url);
    job.http.api_key = from_c(options->http_api_key);
    if (options->http_model != nullptr) job.http.model = options->http_model;
    if (options->max_context_tokens > 0) {
      job.budget.max_context_tokens = options->max_context_tokens;
    }
    if (options->max_output_tokens > 0) {
      job.budget.max_output_tokens = options->max_output_tokens;
    }
    job.out_jsonl = from_c(options->out_jsonl);
    job.rejects_csv = from_c(options->rejects_csv);
    job.threads = options->threads;

    narnet::ExtractSummary result = narnet::run_extract(job);
    if (summary != nullptr) {
      summary->volumes_total = result.volumes_total;
      summary->networks_written = result.networks_written;
      summary->rejected = result.rejected;
      summary->rejected_too_long = result.rejected_too_long;
      summary->rejected_content_filtered = result.rejected_content_filtered;
      summary->rejected_transport = result.rejected_transport;
      summary->rejected_malformed = result.rejected_malformed;
      summary->truncated = result.truncated;
      summary->malformed_records_dropped = result.malformed_records_dropped;
      summary->duplicate_pairs_dropped = result.duplicate_pairs_dropped;
    }
    return NN_OK;
  });
}

nn_status nn_run_clean(const char* in_jsonl, const char* out_jsonl,
                       nn_clean_summary* summary) {
  return guarded([&]() -> nn_status {
    if (in_jsonl == nullptr || out_jsonl == nullptr) {
      return fail(NN_ERR_INVALID_ARGUMENT, "input and output paths must not be NULL");
    }
    narnet::CleanSummary result = narnet::run_clean(in_jsonl, out_jsonl);
    if (summary != nullptr) {
      summary->lines_bad = result.lines_bad;
      summary->networks_in = result.networks_in;
      summary->networks_out = result.networks_out;
      summary->invalid_records_dropped = result.invalid_records_dropped;
      summary->repaired_records = result.repaired_records;
      summary->dropped_records = result.dropped_records;
      summary->dropped_networks = result.dropped_networks;
    }
    if (result.parsed_nothing()) {
      return fail(NN_ERR_NO_DATA, "no input line parsed as a network");
    }
    return NN_OK;
  });
}

nn_status nn_run_analyze(const nn_analyze_options* options, nn_analyze_summary* summary,
                         char** notices) {
  return guarded([&]() -> nn_status {
    if (options == nullptr) {
      return fail(NN_ERR_INVALID_ARGUMENT, "options must not be NULL");
    }
    narnet::AnalyzeJob job;
    job.networks_jsonl = from_c(options->networks_jsonl);
    job.metadata_csv = from_c(options->metadata_csv);
    job.out_dir = from_c(options->out_dir);
    job.svg = options->svg != 0;
    job.threads = options->threads;

    narnet::AnalyzeSummary result = narnet::run_analyze(job);
    if (summary != nullptr) {
      summary->networks = result.networks;
      summary->with_metadata = result.with_metadata;
      summary->comparison_rows = result.comparison_rows;
      summary->trend_rows = result.trend_rows;
    }
    if (notices != nullptr) {
      if (result.notices.empty()) {
        *notices = nullptr;
      } else {
        std::string joined;
        for (size_t i = 0; i < result.notices.size(); ++i) {
          if (i > 0) joined += '\n';
          joined += result.notices[i];
        }
        *notices = dup_string(joined);
      }
    }
    return NN_OK;
  });
}

nn_status nn_run_validate(const char* gold_jsonl, const char* pred_jsonl,
                          const char* out_csv, int fuzzy_pairs,
                          nn_validate_summary* summary) {
  return guarded([&]() -> nn_status {
    if (gold_jsonl == nullptr || pred_jsonl == nullptr || out_csv == nullptr) {
      return fail(NN_ERR_INVALID_ARGUMENT, "paths must not be NULL");
    }
    narnet::ValidateSummary result =
        narnet::run_validate(gold_jsonl, pred_jsonl, out_csv, fuzzy_pairs != 0);
    if (summary != nullptr) {
      summary->shared_volumes = result.shared_volumes;
      summary->gold_only = result.gold_only;
      summary->pred_only = result.pred_only;
      copy_score(result.aggregate.affinity, summary->affinity);
      copy_score(result.aggregate.coarse, summary->coarse_category);
      copy_score(result.aggregate.fine, summary->fine_category);
    }
    return NN_OK;
  });
}

nn_status nn_run_align(const char* left_csv, const char* right_csv, double threshold,
                       const char* out_csv, nn_align_summary* summary) {
  return guarded([&]() -> nn_status {
    if (left_csv == nullptr || right_csv == nullptr || out_csv == nullptr) {
      return fail(NN_ERR_INVALID_ARGUMENT, "paths must not be NULL");
    }
    narnet::AlignSummary result = narnet::run_align(left_csv, right_csv, threshold, out_csv);
    if (summary != nullptr) {
      summary->rows = result.rows;
      summary->matched = result.matched;
      summary->unmatched = result.unmatched;
    }
    return NN_OK;
  });
}

nn_status nn_corpus_open(const char* networks_jsonl, nn_corpus** out) {
  return guarded([&]() -> nn_status {
    if (networks_jsonl == nullptr || out == nullptr) {
      return fail(NN_ERR_INVALID_ARGUMENT, "path and out-handle must not be NULL");
    }
    narnet::JsonlReadResult input = narnet::read_networks_jsonl(networks_jsonl);
    auto* corpus = new nn_corpus;
    corpus->networks = std::move(input.networks);
    corpus->values.resize(corpus->networks.size());
    *out = corpus;
    return NN_OK;
  });
}

void nn_corpus_close(nn_corpus* corpus) { delete corpus; }

size_t nn_corpus_size(const nn_corpus* corpus) {
  return corpus == nullptr ? 0 : corpus->networks.size();
}

const char* nn_corpus_volume_id(const nn_corpus* corpus, size_t index) {
  if (corpus == nullptr || index >= corpus->networks.size()) return nullptr;
  return corpus->networks[index].volume_id.c_str();
}

int64_t nn_corpus_record_count(const nn_corpus* corpus, size_t index) {
  if (corpus == nullptr || index >= corpus->networks.size()) return -1;
  return static_cast<int64_t>(corpus->networks[index].records.size());
}

size_t nn_metric_count(void) { return narnet::metric_columns().size(); }

const char* nn_metric_name(size_t index) {
  const std::vector<std::string>& columns = narnet::metric_columns();
  if (index >= columns.size()) return nullptr;
  return columns[index].c_str();
}

nn_status nn_corpus_metric(nn_corpus* corpus, size_t index, const char* metric,
                           double* out) {
  return guarded([&]() -> nn_status {
    if (corpus == nullptr || metric == nullptr || out == nullptr) {
      return fail(NN_ERR_INVALID_ARGUMENT, "corpus, metric and out must not be NULL");
    }
    if (index >= corpus->networks.size()) {
      return fail(NN_ERR_INVALID_ARGUMENT, "network index out of range");
    }
    const std::vector<std::string>& columns = narnet::metric_columns();
    size_t column = columns.size();
    for (size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == metric) {
        column = i;
        break;
      }
    }
    if (column == columns.size()) {
      return fail(NN_ERR_INVALID_ARGUMENT, "unknown metric name");
    }

    std::lock_guard<std::mutex> lock(corpus->mutex);
    if (!corpus->values[index]) {
      corpus->values[index] =
          narnet::metric_values(narnet::compute_metrics(corpus->networks[index]));
    }
    const std::optional<double>& value = (*corpus->values[index])[column];
    if (!value) {
      return fail(NN_ERR_NO_DATA, "metric undefined for this network");
    }
    *out = *value;
    return NN_OK;
  });
}

int64_t nn_count_words(const char* text) {
  return text == nullptr ? 0 : narnet::count_words(text);
}

int64_t nn_estimate_tokens(const char* text) {
  return text == nullptr ? 0 : narnet::estimate_tokens(text);
}

nn_status nn_build_prompt(const char* text, char** out) {
  return guarded([&]() -> nn_status {
    if (text == nullptr || out == nullptr) {
      return fail(NN_ERR_INVALID_ARGUMENT, "text and out must not be NULL");
    }
    *out = dup_string(narnet::build_prompt(text));
    return NN_OK;
  });
}

nn_status nn_output_schema(char** out) {
  return guarded([&]() -> nn_status {
    if (out == nullptr) {
      return fail(NN_ERR_INVALID_ARGUMENT, "out must not be NULL");
    }
    *out = dup_string(narnet::output_schema().dump(2));
    return NN_OK;
  });
}

nn_status nn_canonical_name(const char* name, char** out) {
  return guarded([&]() -> nn_status {
    if (name == nullptr || out == nullptr) {
      return fail(NN_ERR_INVALID_ARGUMENT, "name and out must not be NULL");
    }
    *out = dup_string(narnet::canonical_name(name));
    return NN_OK;
  });
}

int64_t nn_levenshtein(const char* a, const char* b) {
  return static_cast<int64_t>(narnet::levenshtein(from_c(a), from_c(b)));
}

double nn_name_similarity(const char* a, const char* b) {
  return narnet::similarity(from_c(a), from_c(b));
}

nn_status nn_welch_t_test(const double* xs, size_t n_x, const double* ys, size_t n_y,
                          double* t, double* df, double* p) {
  return guarded([&]() -> nn_status {
    if ((xs == nullptr && n_x > 0) || (ys == nullptr && n_y > 0)) {
      return fail(NN_ERR_INVALID_ARGUMENT, "sample pointers must not be NULL");
    }
    narnet::TTestResult result = narnet::welch_t_test(std::vector<double>(xs, xs + n_x),
                                                      std::vector<double>(ys, ys + n_y));
    if (t != nullptr) *t = result.t;
    if (df != nullptr) *df = result.df;
    if (p != nullptr) *p = result.p;
    return NN_OK;
  });
}

nn_status nn_pearson(const double* xs, const double* ys, size_t n, double* r, double* p) {
  return guarded([&]() -> nn_status {
    if (n > 0 && (xs == nullptr || ys == nullptr)) {
      return fail(NN_ERR_INVALID_ARGUMENT, "sample pointers must not be NULL");
    }
    narnet::CorrelationResult result =
        narnet::pearson(std::vector<double>(xs, xs + n), std::vector<double>(ys, ys + n));
    if (r != nullptr) *r = result.r;
    if (p != nullptr) *p = result.p;
    return NN_OK;
  });
}

}  // extern "C"
