/* Copyright 2026 The narrative-net Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the narrative-net library.
 *
 * Every function either succeeds and returns NN_OK (or a plain value) or
 * fails with a nonzero nn_status; nn_last_error() then holds a message for
 * the calling thread. Strings returned through a char** out-parameter are
 * heap-allocated; release them with nn_string_free(). Handles are opaque
 * and must be released with their matching close function. All paths and
 * strings are UTF-8. Unless noted otherwise, functions are safe to call
 * from multiple threads as long as each handle is used by one thread at a
 * time.
 */

#ifndef NARRATIVE_NET_H_
#define NARRATIVE_NET_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NN_API __declspec(dllexport)
#else
#define NN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nn_status {
  NN_OK = 0,
  NN_ERR_INVALID_ARGUMENT = 1, /* bad option, field, label, or name */
  NN_ERR_PARSE = 2,            /* malformed CSV, JSON, or model output */
  NN_ERR_IO = 3,               /* unreadable or unwritable file, transport */
  NN_ERR_DOMAIN = 4,           /* input outside a computation's domain */
  NN_ERR_NO_DATA = 5,          /* nothing to work on (no overlap, no rows) */
  NN_ERR_INTERNAL = 6
} nn_status;

/* Stable name for a status code, e.g. "invalid_argument". */
NN_API const char* nn_status_name(nn_status status);

/* Message describing this thread's most recent failure; empty after a
 * success. The pointer stays valid until the thread's next library call. */
NN_API const char* nn_last_error(void);

NN_API const char* nn_version(void);

/* Releases a string returned through a char** out-parameter. */
NN_API void nn_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Corpus workflows. Each run writes its output files plus a JSON      */
/* manifest next to them and fills the summary struct when non-NULL.   */
/* ------------------------------------------------------------------ */

typedef struct nn_extract_options {
  const char* corpus_dir;   /* directory of plain-text volumes, or NULL */
  const char* manifest_csv; /* volume_id,path listing, or NULL          */
                            /* (exactly one of the two must be set)     */
  int use_http_backend;     /* 0: scripted mock backend, 1: HTTP        */
  const char* fixtures;     /* mock response script (JSON), mock only   */
  const char* http_url;     /* endpoint URL, http only                  */
  const char* http_api_key; /* bearer token; NULL or "" sends none      */
  const char* http_model;   /* NULL keeps the default model name        */
  int64_t max_context_tokens; /* <= 0 keeps the default of 1000000      */
  int64_t max_output_tokens;  /* <= 0 keeps the default of 8000         */
  const char* out_jsonl;    /* networks output, one JSON object a line  */
  const char* rejects_csv;  /* rejection log: volume_id,reason,detail   */
  int threads;              /* parallel volumes; 0 picks automatically  */
} nn_extract_options;

typedef struct nn_extract_summary {
  int64_t volumes_total;
  int64_t networks_written;
  int64_t rejected;
  int64_t rejected_too_long;
  int64_t rejected_content_filtered;
  int64_t rejected_transport;
  int64_t rejected_malformed;
  int64_t truncated; /* networks kept despite hitting the output limit */
  int64_t malformed_records_dropped;
  int64_t duplicate_pairs_dropped;
} nn_extract_summary;

NN_API nn_status nn_run_extract(const nn_extract_options* options,
                                nn_extract_summary* summary);

typedef struct nn_clean_summary {
  int64_t lines_bad;
  int64_t networks_in;
  int64_t networks_out;
  int64_t invalid_records_dropped;
  int64_t repaired_records;
  int64_t dropped_records;
  int64_t dropped_networks;
} nn_clean_summary;

/* Repairs coarse labels, drops self and duplicate pairs, and removes
 * corpus-level duplicate networks. Returns NN_ERR_NO_DATA when the input
 * has lines but none of them parse. */
NN_API nn_status nn_run_clean(const char* in_jsonl, const char* out_jsonl,
                              nn_clean_summary* summary);

typedef struct nn_analyze_options {
  const char* networks_jsonl;
  const char* metadata_csv; /* NULL: per-network metrics only */
  const char* out_dir;
  int svg;     /* nonzero renders one histogram SVG per metric */
  int threads; /* 0 picks automatically */
} nn_analyze_options;

typedef struct nn_analyze_summary {
  int64_t networks;
  int64_t with_metadata;
  int64_t comparison_rows;
  int64_t trend_rows;
} nn_analyze_summary;

/* Writes metrics.csv, communities.csv, comparison.csv, trends.csv and
 * manifest.json into out_dir. When notices is non-NULL it receives a
 * newline-joined list of skipped statistics (NULL when none). */
NN_API nn_status nn_run_analyze(const nn_analyze_options* options,
                                nn_analyze_summary* summary, char** notices);

typedef struct nn_attribute_score {
  int64_t matched;
  int64_t correct;
  double accuracy; /* meaningful only when matched > 0 */
  double kappa;    /* meaningful only when matched > 0 */
  int64_t unmatched_gold;
  int64_t unmatched_pred;
} nn_attribute_score;

typedef struct nn_validate_summary {
  int64_t shared_volumes;
  int64_t gold_only;
  int64_t pred_only;
  nn_attribute_score affinity;
  nn_attribute_score coarse_category;
  nn_attribute_score fine_category;
} nn_validate_summary;

/* Scores predicted networks against gold annotations volume by volume and
 * writes the report CSV. Returns NN_ERR_NO_DATA when the two files share
 * no volume ids. fuzzy_pairs nonzero also matches character pairs whose
 * names agree only approximately. */
NN_API nn_status nn_run_validate(const char* gold_jsonl, const char* pred_jsonl,
                                 const char* out_csv, int fuzzy_pairs,
                                 nn_validate_summary* summary);

typedef struct nn_align_summary {
  int64_t rows;
  int64_t matched;
  int64_t unmatched;
} nn_align_summary;

/* Matches each left-catalog volume to its best right-catalog entry by
 * title and author similarity, both strictly above the threshold. */
NN_API nn_status nn_run_align(const char* left_csv, const char* right_csv,
                              double threshold, const char* out_csv,
                              nn_align_summary* summary);

/* ------------------------------------------------------------------ */
/* Network corpus handle: read a networks JSONL file and query metrics */
/* volume by volume without going through the filesystem again.        */
/* ------------------------------------------------------------------ */

typedef struct nn_corpus nn_corpus;

/* Opens a networks JSONL file, skipping unparseable lines and invalid
 * records the same way the workflows do. */
NN_API nn_status nn_corpus_open(const char* networks_jsonl, nn_corpus** out);

NN_API void nn_corpus_close(nn_corpus* corpus);

NN_API size_t nn_corpus_size(const nn_corpus* corpus);

/* Volume id of the given network; NULL when the index is out of range.
 * The pointer stays valid until the corpus is closed. */
NN_API const char* nn_corpus_volume_id(const nn_corpus* corpus, size_t index);

/* Number of relationship records in the given network; -1 when the index
 * is out of range. */
NN_API int64_t nn_corpus_record_count(const nn_corpus* corpus, size_t index);

/* Flattened per-network metrics table: nn_metric_count() columns, named
 * by nn_metric_name(). Order matches the metrics.csv written by the
 * analyze workflow. */
NN_API size_t nn_metric_count(void);
NN_API const char* nn_metric_name(size_t index);

/* Value of one metric for one network. Returns NN_ERR_NO_DATA when the
 * metric is undefined for that network (for example transitivity of an
 * empty network). Metrics are computed on first use and cached; this call
 * may therefore be expensive once per network. */
NN_API nn_status nn_corpus_metric(nn_corpus* corpus, size_t index,
                                  const char* metric, double* out);

/* ------------------------------------------------------------------ */
/* Computation kernels, exposed for reuse and language bindings.       */
/* ------------------------------------------------------------------ */

/* Whitespace-delimited word count. */
NN_API int64_t nn_count_words(const char* text);

/* Token estimate for a text at the fixed 3.2 tokens-per-word rate. */
NN_API int64_t nn_estimate_tokens(const char* text);

/* Builds the full extraction prompt around a volume text. Fails with
 * NN_ERR_INVALID_ARGUMENT when the text is empty. */
NN_API nn_status nn_build_prompt(const char* text, char** out);

/* JSON schema the extraction backend is asked to enforce. */
NN_API nn_status nn_output_schema(char** out);

/* Case-folded, whitespace-collapsed form of a character name. */
NN_API nn_status nn_canonical_name(const char* name, char** out);

/* Edit distance over Unicode code points; invalid bytes decode to the
 * replacement character. */
NN_API int64_t nn_levenshtein(const char* a, const char* b);

/* Normalized similarity in [0, 1]: 1 - distance / max length, computed on
 * the canonical forms; 1.0 when both normalize to empty. */
NN_API double nn_name_similarity(const char* a, const char* b);

/* Welch's unequal-variance t-test. Any output pointer may be NULL. */
NN_API nn_status nn_welch_t_test(const double* xs, size_t n_x, const double* ys,
                                 size_t n_y, double* t, double* df, double* p);

/* Pearson correlation with two-sided significance. Any output pointer may
 * be NULL. */
NN_API nn_status nn_pearson(const double* xs, const double* ys, size_t n,
                            double* r, double* p);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NARRATIVE_NET_H_ */
