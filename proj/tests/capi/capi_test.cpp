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

// Exercises the shared library strictly through its public C header, the
// way an external binding would.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <narrative_net.h>
#include <unistd.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;

  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           fs::path("narnet_capi_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

const char* kNetworkLine =
    R"({"volume_id": "v1", "records": [)"
    R"({"character_1": "Anna", "character_2": "Boris", "affinity": "positive", )"
    R"("coarse_category": "social", "fine_category": "friend"}, )"
    R"({"character_1": "Anna", "character_2": "Clara", "affinity": "negative", )"
    R"("coarse_category": "social", "fine_category": "rivals"}]})";

}  // namespace

TEST_CASE("version and status names") {
  REQUIRE(nn_version() != nullptr);
  CHECK(std::strlen(nn_version()) > 0);
  CHECK(std::string(nn_status_name(NN_OK)) == "ok");
  CHECK(std::string(nn_status_name(NN_ERR_INVALID_ARGUMENT)) == "invalid_argument");
  CHECK(std::string(nn_status_name(NN_ERR_PARSE)) == "parse_error");
  CHECK(std::string(nn_status_name(NN_ERR_IO)) == "io_error");
  CHECK(std::string(nn_status_name(NN_ERR_DOMAIN)) == "domain_error");
  CHECK(std::string(nn_status_name(NN_ERR_NO_DATA)) == "no_data");
  CHECK(std::string(nn_status_name(NN_ERR_INTERNAL)) == "internal_error");
}

TEST_CASE("null arguments fail with a message") {
  CHECK(nn_build_prompt(nullptr, nullptr) == NN_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(nn_last_error()) > 0);

  char* out = nullptr;
  CHECK(nn_build_prompt("", &out) == NN_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);

  CHECK(nn_canonical_name(nullptr, &out) == NN_ERR_INVALID_ARGUMENT);
  CHECK(nn_run_clean(nullptr, "x", nullptr) == NN_ERR_INVALID_ARGUMENT);

  // A success clears the sticky message.
  CHECK(nn_canonical_name("  Anna  KARENINA ", &out) == NN_OK);
  CHECK(std::string(nn_last_error()).empty());
  CHECK(std::string(out) == "anna karenina");
  nn_string_free(out);
}

TEST_CASE("prompt and schema kernels") {
  char* prompt = nullptr;
  REQUIRE(nn_build_prompt("Anna met Boris by the track.", &prompt) == NN_OK);
  std::string p(prompt);
  nn_string_free(prompt);
  CHECK(p.find("[begin text]") != std::string::npos);
  CHECK(p.find("Anna met Boris by the track.") != std::string::npos);
  CHECK(p.find("[end text]") != std::string::npos);
  CHECK(p.rfind("Begin the task!") == p.size() - std::strlen("Begin the task!"));

  char* schema = nullptr;
  REQUIRE(nn_output_schema(&schema) == NN_OK);
  std::string s(schema);
  nn_string_free(schema);
  CHECK(s.find("\"character_1\"") != std::string::npos);
  CHECK(s.find("\"fine_category\"") != std::string::npos);
  CHECK(s.find("unrequited love interest") != std::string::npos);
}

TEST_CASE("text kernels") {
  CHECK(nn_count_words("one two  three\n") == 3);
  CHECK(nn_count_words("") == 0);
  CHECK(nn_estimate_tokens("") == 0);
  CHECK(nn_estimate_tokens("a b c d e f g h i j") == 32);  // 10 words

  CHECK(nn_levenshtein("kitten", "sitting") == 3);
  CHECK(nn_levenshtein("", "abc") == 3);
  CHECK(nn_name_similarity("Anna Karenina", "Anna Karenin") ==
        doctest::Approx(1.0 - 1.0 / 13.0));
  CHECK(nn_name_similarity("X", "X") == 1.0);
}

TEST_CASE("statistics kernels") {
  const double xs[] = {1.0, 2.0, 3.0, 4.0, 5.0};
  const double ys[] = {2.0, 4.0, 5.0, 4.0, 5.0};

  double t = 0.0, df = 0.0, p = 0.0;
  REQUIRE(nn_welch_t_test(xs, 5, ys, 5, &t, &df, &p) == NN_OK);
  CHECK(t == doctest::Approx(-1.118033988749895).epsilon(1e-12));
  CHECK(df == doctest::Approx(7.529411764705885).epsilon(1e-12));
  CHECK(p == doctest::Approx(0.29795168786685805).epsilon(1e-9));

  double r = 0.0, rp = 0.0;
  REQUIRE(nn_pearson(xs, ys, 5, &r, &rp) == NN_OK);
  CHECK(r == doctest::Approx(0.7745966692414834).epsilon(1e-12));
  CHECK(rp == doctest::Approx(0.1240270626575546).epsilon(1e-9));

  // Output pointers are optional.
  CHECK(nn_welch_t_test(xs, 5, ys, 5, nullptr, nullptr, nullptr) == NN_OK);

  CHECK(nn_welch_t_test(nullptr, 5, ys, 5, &t, &df, &p) == NN_ERR_INVALID_ARGUMENT);
  CHECK(nn_welch_t_test(xs, 1, ys, 5, &t, &df, &p) == NN_ERR_DOMAIN);
  const double flat[] = {1.0, 1.0, 1.0};
  CHECK(nn_welch_t_test(flat, 3, flat, 3, &t, &df, &p) == NN_ERR_DOMAIN);
  CHECK(nn_pearson(xs, ys, 2, &r, &rp) == NN_ERR_DOMAIN);
}

TEST_CASE("corpus handle reads networks and serves cached metrics") {
  TempDir tmp;
  std::string jsonl = std::string(kNetworkLine) + "\n" +
                      R"({"volume_id": "v2", "records": []})" + "\n";
  write_file(tmp.path / "networks.jsonl", jsonl);

  nn_corpus* corpus = nullptr;
  REQUIRE(nn_corpus_open((tmp.path / "networks.jsonl").c_str(), &corpus) == NN_OK);
  REQUIRE(corpus != nullptr);

  CHECK(nn_corpus_size(corpus) == 2);
  CHECK(std::string(nn_corpus_volume_id(corpus, 0)) == "v1");
  CHECK(std::string(nn_corpus_volume_id(corpus, 1)) == "v2");
  CHECK(nn_corpus_volume_id(corpus, 2) == nullptr);
  CHECK(nn_corpus_record_count(corpus, 0) == 2);
  CHECK(nn_corpus_record_count(corpus, 1) == 0);
  CHECK(nn_corpus_record_count(corpus, 9) == -1);

  REQUIRE(nn_metric_count() == 21);
  CHECK(std::string(nn_metric_name(0)) == "node_count");
  CHECK(nn_metric_name(21) == nullptr);

  double value = 0.0;
  REQUIRE(nn_corpus_metric(corpus, 0, "node_count", &value) == NN_OK);
  CHECK(value == 3.0);
  REQUIRE(nn_corpus_metric(corpus, 0, "average_degree", &value) == NN_OK);
  CHECK(value == doctest::Approx(4.0 / 3.0));
  REQUIRE(nn_corpus_metric(corpus, 0, "affinity_proportions_positive", &value) == NN_OK);
  CHECK(value == doctest::Approx(0.5));

  // v2 has no records: counts are defined, analytic metrics are not.
  REQUIRE(nn_corpus_metric(corpus, 1, "edge_count", &value) == NN_OK);
  CHECK(value == 0.0);
  CHECK(nn_corpus_metric(corpus, 1, "transitivity", &value) == NN_ERR_NO_DATA);

  CHECK(nn_corpus_metric(corpus, 0, "no_such_metric", &value) == NN_ERR_INVALID_ARGUMENT);
  CHECK(nn_corpus_metric(corpus, 5, "node_count", &value) == NN_ERR_INVALID_ARGUMENT);

  nn_corpus_close(corpus);
  nn_corpus_close(nullptr);  // harmless
}

TEST_CASE("corpus open reports missing files") {
  nn_corpus* corpus = nullptr;
  CHECK(nn_corpus_open("/definitely/not/here.jsonl", &corpus) == NN_ERR_IO);
  CHECK(corpus == nullptr);
}

TEST_CASE("clean workflow through the C surface") {
  TempDir tmp;
  write_file(tmp.path / "in.jsonl",
             std::string(kNetworkLine) + "\nnot a network at all\n");

  nn_clean_summary summary;
  REQUIRE(nn_run_clean((tmp.path / "in.jsonl").c_str(), (tmp.path / "out.jsonl").c_str(),
                       &summary) == NN_OK);
  CHECK(summary.lines_bad == 1);
  CHECK(summary.networks_in == 1);
  CHECK(summary.networks_out == 1);

  write_file(tmp.path / "junk.jsonl", "junk\n");
  CHECK(nn_run_clean((tmp.path / "junk.jsonl").c_str(), (tmp.path / "out2.jsonl").c_str(),
                     nullptr) == NN_ERR_NO_DATA);
}

TEST_CASE("validate workflow through the C surface") {
  TempDir tmp;
  write_file(tmp.path / "gold.jsonl", std::string(kNetworkLine) + "\n");
  write_file(tmp.path / "pred.jsonl", std::string(kNetworkLine) + "\n");

  nn_validate_summary summary;
  REQUIRE(nn_run_validate((tmp.path / "gold.jsonl").c_str(),
                          (tmp.path / "pred.jsonl").c_str(),
                          (tmp.path / "report.csv").c_str(), 0, &summary) == NN_OK);
  CHECK(summary.shared_volumes == 1);
  CHECK(summary.affinity.matched == 2);
  CHECK(summary.affinity.accuracy == 1.0);
  CHECK(summary.affinity.kappa == 1.0);
  CHECK(summary.fine_category.correct == 2);
  CHECK(fs::exists(tmp.path / "report.csv"));

  // Disjoint volume ids: nothing to score.
  write_file(tmp.path / "other.jsonl",
             R"({"volume_id": "zzz", "records": []})" "\n");
  CHECK(nn_run_validate((tmp.path / "gold.jsonl").c_str(),
                        (tmp.path / "other.jsonl").c_str(),
                        (tmp.path / "report2.csv").c_str(), 0, nullptr) == NN_ERR_NO_DATA);
}

TEST_CASE("extract and analyze workflows through the C surface") {
  TempDir tmp;
  fs::path corpus = tmp.path / "corpus";
  fs::create_directories(corpus);
  write_file(corpus / "vol.txt", "Anna met Boris. Clara watched them both.");
  write_file(tmp.path / "fixture.json",
             R"({"vol": {"finish_reason": "completed", "text":)"
             R"( "[{\"character_1\": \"Anna\", \"character_2\": \"Boris\",)"
             R"( \"affinity\": \"positive\", \"coarse_category\": \"social\",)"
             R"( \"fine_category\": \"friend\"}]"}})");

  nn_extract_options options;
  std::memset(&options, 0, sizeof options);
  std::string corpus_str = corpus.string();
  std::string fixtures_str = (tmp.path / "fixture.json").string();
  std::string out_str = (tmp.path / "networks.jsonl").string();
  std::string rejects_str = (tmp.path / "rejects.csv").string();
  options.corpus_dir = corpus_str.c_str();
  options.fixtures = fixtures_str.c_str();
  options.out_jsonl = out_str.c_str();
  options.rejects_csv = rejects_str.c_str();

  nn_extract_summary extract_summary;
  REQUIRE(nn_run_extract(&options, &extract_summary) == NN_OK);
  CHECK(extract_summary.volumes_total == 1);
  CHECK(extract_summary.networks_written == 1);
  CHECK(extract_summary.rejected == 0);

  nn_analyze_options analyze;
  std::memset(&analyze, 0, sizeof analyze);
  std::string report_dir = (tmp.path / "report").string();
  analyze.networks_jsonl = out_str.c_str();
  analyze.out_dir = report_dir.c_str();

  nn_analyze_summary analyze_summary;
  char* notices = nullptr;
  REQUIRE(nn_run_analyze(&analyze, &analyze_summary, &notices) == NN_OK);
  CHECK(analyze_summary.networks == 1);
  CHECK(analyze_summary.with_metadata == 0);
  // Without metadata every statistic is skipped, so notices must arrive.
  REQUIRE(notices != nullptr);
  CHECK(std::strlen(notices) > 0);
  nn_string_free(notices);
  CHECK(fs::exists(tmp.path / "report" / "metrics.csv"));
}

TEST_CASE("align workflow through the C surface") {
  TempDir tmp;
  write_file(tmp.path / "left.csv",
             "volume_id,title,author,language,year,is_fiction\n"
             "a1,Anna Karenina,Leo Tolstoy,en,1877,true\n");
  write_file(tmp.path / "right.csv",
             "volume_id,title,author,language,year,is_fiction\n"
             "b1,Anna Karenin,Leo Tolstoi,en,,\n");

  nn_align_summary summary;
  REQUIRE(nn_run_align((tmp.path / "left.csv").c_str(), (tmp.path / "right.csv").c_str(),
                       0.8, (tmp.path / "matches.csv").c_str(), &summary) == NN_OK);
  CHECK(summary.rows == 1);
  CHECK(summary.matched == 1);
  CHECK(summary.unmatched == 0);
}
