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

// Command-line front end. Everything goes through the public C interface
// in narrative_net.h; this file deliberately knows nothing about the
// library's internals.

#include <cinttypes>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "narrative_net.h"

namespace {

int report_failure(const char* command, nn_status status) {
  std::fprintf(stderr, "narrative-net %s: %s (%s)\n", command, nn_last_error(),
               nn_status_name(status));
  return 1;
}

struct ExtractArgs {
  std::string corpus;
  std::string manifest;
  std::string backend = "mock";
  std::string fixtures;
  std::string api_url;
  std::string api_key;
  std::string model;
  int64_t max_context_tokens = 1000000;
  int64_t max_output_tokens = 8000;
  std::string out;
  std::string rejects;
  int threads = 0;
};

int run_extract(const ExtractArgs& args) {
  if (args.corpus.empty() == args.manifest.empty()) {
    std::fprintf(stderr, "narrative-net extract: give exactly one of --corpus and --manifest\n");
    return 1;
  }
  const bool http = args.backend == "http";
  if (http && args.api_url.empty()) {
    std::fprintf(stderr,
                 "narrative-net extract: the http backend needs --api-url or "
                 "NARRATIVE_NET_API_URL\n");
    return 1;
  }
  if (!http && args.fixtures.empty()) {
    std::fprintf(stderr, "narrative-net extract: the mock backend needs --fixtures\n");
    return 1;
  }

  nn_extract_options options{};
  options.corpus_dir = args.corpus.empty() ? nullptr : args.corpus.c_str();
  options.manifest_csv = args.manifest.empty() ? nullptr : args.manifest.c_str();
  options.use_http_backend = http ? 1 : 0;
  options.fixtures = args.fixtures.empty() ? nullptr : args.fixtures.c_str();
  options.http_url = args.api_url.empty() ? nullptr : args.api_url.c_str();
  options.http_api_key = args.api_key.empty() ? nullptr : args.api_key.c_str();
  options.http_model = args.model.empty() ? nullptr : args.model.c_str();
  options.max_context_tokens = args.max_context_tokens;
  options.max_output_tokens = args.max_output_tokens;
  options.out_jsonl = args.out.c_str();
  options.rejects_csv = args.rejects.c_str();
  options.threads = args.threads;

  nn_extract_summary summary{};
  nn_status status = nn_run_extract(&options, &summary);
  if (status != NN_OK) return report_failure("extract", status);

  std::printf("volumes           %" PRId64 "\n", summary.volumes_total);
  std::printf("networks written  %" PRId64 "\n", summary.networks_written);
  std::printf("rejected          %" PRId64
              " (too_long %" PRId64 ", content_filtered %" PRId64 ", transport %" PRId64
              ", malformed %" PRId64 ")\n",
              summary.rejected, summary.rejected_too_long, summary.rejected_content_filtered,
              summary.rejected_transport, summary.rejected_malformed);
  std::printf("truncated kept    %" PRId64 "\n", summary.truncated);
  std::printf("records dropped   %" PRId64 " malformed, %" PRId64 " duplicate pairs\n",
              summary.malformed_records_dropped, summary.duplicate_pairs_dropped);
  return 0;
}

struct CleanArgs {
  std::string in;
  std::string out;
};

int run_clean(const CleanArgs& args) {
  nn_clean_summary summary{};
  nn_status status = nn_run_clean(args.in.c_str(), args.out.c_str(), &summary);
  if (status != NN_OK) return report_failure("clean", status);

  std::printf("networks in       %" PRId64 " (%" PRId64 " bad line(s) skipped)\n",
              summary.networks_in, summary.lines_bad);
  std::printf("networks out      %" PRId64 "\n", summary.networks_out);
  std::printf("repaired records  %" PRId64 "\n", summary.repaired_records);
  std::printf("dropped           %" PRId64 " invalid, %" PRId64 " self/duplicate pair(s), %" PRId64
              " duplicate network(s)\n",
              summary.invalid_records_dropped, summary.dropped_records,
              summary.dropped_networks);
  return 0;
}

struct AnalyzeArgs {
  std::string networks;
  std::string metadata;
  std::string out_dir;
  bool svg = false;
  int threads = 0;
};

int run_analyze(const AnalyzeArgs& args) {
  nn_analyze_options options{};
  options.networks_jsonl = args.networks.c_str();
  options.metadata_csv = args.metadata.empty() ? nullptr : args.metadata.c_str();
  options.out_dir = args.out_dir.c_str();
  options.svg = args.svg ? 1 : 0;
  options.threads = args.threads;

  nn_analyze_summary summary{};
  char* notices = nullptr;
  nn_status status = nn_run_analyze(&options, &summary, &notices);
  if (status != NN_OK) return report_failure("analyze", status);

  if (notices != nullptr) {
    std::fprintf(stderr, "%s\n", notices);
    nn_string_free(notices);
  }
  std::printf("networks          %" PRId64 " (%" PRId64 " with metadata)\n", summary.networks,
              summary.with_metadata);
  std::printf("comparison rows   %" PRId64 "\n", summary.comparison_rows);
  std::printf("trend rows        %" PRId64 "\n", summary.trend_rows);
  return 0;
}

struct ValidateArgs {
  std::string gold;
  std::string pred;
  std::string out;
  bool fuzzy = false;
};

void print_score(const char* name, const nn_attribute_score& score) {
  if (score.matched > 0) {
    std::printf("%-16s accuracy %.4f  kappa %.4f  (%" PRId64 "/%" PRId64 " matched)\n", name,
                score.accuracy, score.kappa, score.correct, score.matched);
  } else {
    std::printf("%-16s no matched pairs\n", name);
  }
}

int run_validate(const ValidateArgs& args) {
  nn_validate_summary summary{};
  nn_status status = nn_run_validate(args.gold.c_str(), args.pred.c_str(), args.out.c_str(),
                                     args.fuzzy ? 1 : 0, &summary);
  if (status != NN_OK) return report_failure("validate", status);

  std::printf("shared volumes    %" PRId64 " (gold only %" PRId64 ", pred only %" PRId64 ")\n",
              summary.shared_volumes, summary.gold_only, summary.pred_only);
  print_score("affinity", summary.affinity);
  print_score("coarse_category", summary.coarse_category);
  print_score("fine_category", summary.fine_category);
  return 0;
}

struct AlignArgs {
  std::string left;
  std::string right;
  double threshold = 0.8;
  std::string out;
};

int run_align(const AlignArgs& args) {
  nn_align_summary summary{};
  nn_status status = nn_run_align(args.left.c_str(), args.right.c_str(), args.threshold,
                                  args.out.c_str(), &summary);
  if (status != NN_OK) return report_failure("align", status);

  std::printf("rows              %" PRId64 "\n", summary.rows);
  std::printf("matched           %" PRId64 "\n", summary.matched);
  std::printf("unmatched         %" PRId64 "\n", summary.unmatched);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character-network extraction and analysis for narrative corpora"};
  app.require_subcommand(1);
  // Flags beat environment variables beat the config file.
  app.set_config("--config", "", "Read option defaults from an INI or TOML file");

  ExtractArgs extract_args;
  CLI::App* extract = app.add_subcommand("extract", "Run the model over a corpus of volumes");
  extract->add_option("--corpus", extract_args.corpus, "Directory of plain-text volumes");
  extract->add_option("--manifest", extract_args.manifest,
                      "CSV listing volume_id,path (paths relative to the CSV)");
  extract->add_option("--backend", extract_args.backend, "Model backend")
      ->check(CLI::IsMember({"mock", "http"}))
      ->capture_default_str();
  extract->add_option("--fixtures", extract_args.fixtures,
                      "Scripted responses for the mock backend (JSON)");
  extract->add_option("--api-url", extract_args.api_url, "HTTP backend endpoint")
      ->envname("NARRATIVE_NET_API_URL");
  extract->add_option("--api-key", extract_args.api_key, "HTTP backend bearer token")
      ->envname("NARRATIVE_NET_API_KEY");
  extract->add_option("--model", extract_args.model, "Model name sent to the HTTP backend");
  extract->add_option("--max-context-tokens", extract_args.max_context_tokens,
                      "Context window budget")
      ->capture_default_str();
  extract->add_option("--max-output-tokens", extract_args.max_output_tokens,
                      "Response token budget")
      ->capture_default_str();
  extract->add_option("--out", extract_args.out, "Networks JSONL output")->required();
  extract->add_option("--rejects", extract_args.rejects, "Rejection log CSV output")
      ->required();
  extract->add_option("--threads", extract_args.threads,
                      "Parallel volumes (0 picks automatically)");

  CleanArgs clean_args;
  CLI::App* clean = app.add_subcommand("clean", "Repair and dedupe a networks file");
  clean->add_option("--in", clean_args.in, "Networks JSONL input")->required();
  clean->add_option("--out", clean_args.out, "Cleaned JSONL output")->required();

  AnalyzeArgs analyze_args;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Compute metrics, communities, and group statistics");
  analyze->add_option("--networks", analyze_args.networks, "Networks JSONL input")->required();
  analyze->add_option("--metadata", analyze_args.metadata,
                      "Volume metadata CSV (omit to skip group statistics)");
  analyze->add_option("--out-dir", analyze_args.out_dir, "Report output directory")
      ->required();
  analyze->add_flag("--svg", analyze_args.svg, "Render one histogram SVG per metric");
  analyze->add_option("--threads", analyze_args.threads,
                      "Parallel networks (0 picks automatically)");

  ValidateArgs validate_args;
  CLI::App* validate =
      app.add_subcommand("validate", "Score predicted networks against gold annotations");
  validate->add_option("--gold", validate_args.gold, "Gold networks JSONL")->required();
  validate->add_option("--pred", validate_args.pred, "Predicted networks JSONL")->required();
  validate->add_option("--out", validate_args.out, "Accuracy report CSV output")->required();
  validate->add_flag("--fuzzy-pairs", validate_args.fuzzy,
                     "Also match pairs whose names agree only approximately");

  AlignArgs align_args;
  CLI::App* align =
      app.add_subcommand("align", "Match volumes against a catalog by title and author");
  align->add_option("--left", align_args.left, "Volume metadata CSV")->required();
  align->add_option("--right", align_args.right, "Catalog metadata CSV")->required();
  align->add_option("--threshold", align_args.threshold,
                    "Both similarities must strictly exceed this")
      ->capture_default_str();
  align->add_option("--out", align_args.out, "Match CSV output")->required();

  CLI11_PARSE(app, argc, argv);

  if (extract->parsed()) return run_extract(extract_args);
  if (clean->parsed()) return run_clean(clean_args);
  if (analyze->parsed()) return run_analyze(analyze_args);
  if (validate->parsed()) return run_validate(validate_args);
  if (align->parsed()) return run_align(align_args);
  return 0;
}
