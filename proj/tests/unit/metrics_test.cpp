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

#include "metrics.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

#include "error.hpp"
#include "example_volume.hpp"
#include "graph_oracles.hpp"

using namespace narnet;

namespace {

SimpleGraph path3() { return simple_graph_from_edges(3, {{0, 1}, {1, 2}}); }
SimpleGraph triangle() { return simple_graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }
SimpleGraph star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return simple_graph_from_edges(leaves + 1, edges);
}

}  // namespace

TEST_CASE("connected_components") {
  SimpleGraph g = simple_graph_from_edges(5, {{0, 1}, {3, 4}});
  ComponentsResult components = connected_components(g);
  CHECK(components.count == 3);
  CHECK(components.assignment == std::vector<int>{0, 0, 1, 2, 2});
}

TEST_CASE("transitivity pins") {
  CHECK(transitivity(triangle()) == 1.0);
  CHECK(transitivity(path3()) == 0.0);
  CHECK(transitivity(simple_graph_from_edges(2, {{0, 1}})) == 0.0);  // no triples
}

TEST_CASE("transitivity matches triple enumeration on random graphs") {
  std::mt19937 rng(1301);
  for (int trial = 0; trial < 200; ++trial) {
    SimpleGraph g = oracle::random_graph(rng, 2, 8);
    CHECK(transitivity(g) == doctest::Approx(oracle::transitivity(g)).epsilon(1e-12));
  }
}

TEST_CASE("betweenness pins and oracle agreement") {
  auto center_heavy = betweenness_centrality(path3());
  CHECK(center_heavy == std::vector<double>{0.0, 1.0, 0.0});
  CHECK(betweenness_centrality(simple_graph_from_edges(2, {{0, 1}})) ==
        std::vector<double>{0.0, 0.0});

  std::mt19937 rng(1302);
  for (int trial = 0; trial < 60; ++trial) {
    SimpleGraph g = oracle::random_graph(rng, 3, 8);  // disconnected allowed
    auto fast = betweenness_centrality(g);
    auto slow = oracle::betweenness(g);
    REQUIRE(fast.size() == slow.size());
    for (size_t v = 0; v < fast.size(); ++v) {
      CHECK(fast[v] == doctest::Approx(slow[v]).epsilon(1e-9));
    }
  }
}

TEST_CASE("eigenvector centrality handles bipartite components") {
  // A star is bipartite; plain power iteration on A would oscillate.
  EigenvectorResult result = eigenvector_centrality(star(3));
  CHECK(result.converged);
  double hub = result.values[0];
  for (int leaf = 1; leaf <= 3; ++leaf) {
    CHECK(result.values[leaf] == doctest::Approx(result.values[1]));
    CHECK(hub > result.values[leaf]);
  }
  double norm = 0.0;
  for (double v : result.values) norm += v * v;
  CHECK(norm == doctest::Approx(1.0));
}

TEST_CASE("eigenvector matches the dense oracle per component") {
  std::mt19937 rng(1303);
  for (int trial = 0; trial < 40; ++trial) {
    SimpleGraph g = oracle::random_graph(rng, 1, 7);
    EigenvectorResult fast = eigenvector_centrality(g);
    auto slow = oracle::eigenvector(g, 10000);
    REQUIRE(fast.values.size() == slow.size());
    for (size_t v = 0; v < slow.size(); ++v) {
      CHECK(fast.values[v] == doctest::Approx(slow[v]).epsilon(1e-6));
    }
  }
}

TEST_CASE("isolated nodes get eigenvector value from their singleton component") {
  SimpleGraph g = simple_graph_from_edges(3, {{0, 1}});
  EigenvectorResult result = eigenvector_centrality(g);
  // Two components scale each unit block by 1/sqrt(2).
  CHECK(result.values[2] == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("star distance is zero exactly on stars") {
  CHECK(star_edit_distance(star(1)).raw == 0);  // K2
  CHECK(star_edit_distance(star(4)).raw == 0);
  CHECK(star_edit_distance(simple_graph_from_edges(1, {})).raw == 0);  // K1
  CHECK(star_edit_distance(triangle()).raw == 1);
  StarDistance d = star_edit_distance(triangle());
  CHECK(d.normalized == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("star distance matches the per-center oracle on all graphs up to 5 nodes") {
  for (int n = 1; n <= 5; ++n) {
    uint64_t masks = uint64_t{1} << (n * (n - 1) / 2);
    for (uint64_t mask = 0; mask < masks; ++mask) {
      SimpleGraph g = oracle::graph_from_mask(n, mask);
      CHECK(star_edit_distance(g).raw == oracle::star_edit_distance(g));
    }
  }
}

TEST_CASE("protagonism and mediatedness") {
  CHECK(protagonism(star(3)) == doctest::Approx(0.5));
  CHECK(protagonism(triangle()) == doctest::Approx(1.0 / 3.0));
  CHECK(mediatedness(path3()) == doctest::Approx(1.0));
  CHECK(mediatedness(triangle()) == doctest::Approx(0.0));
  CHECK_THROWS_AS(protagonism(simple_graph_from_edges(2, {})), Error);
}

TEST_CASE("proportions for the worked example") {
  CharacterNetwork net = fixtures::example_network();
  AffinityProportions affinity = affinity_proportions(net);
  CHECK(affinity.positive == doctest::Approx(4.0 / 12.0));
  CHECK(affinity.negative == doctest::Approx(2.0 / 12.0));
  CHECK(affinity.neutral == doctest::Approx(6.0 / 12.0));

  // Proportions read the stored coarse label, so the inconsistent
  // Rocinante entry counts as professional until it is repaired.
  CoarseProportions raw = coarse_proportions(net);
  CHECK(raw.social == doctest::Approx(8.0 / 12.0));
  CHECK(raw.professional == doctest::Approx(4.0 / 12.0));

  for (RelationshipRecord& record : net.records) record = repair(std::move(record));
  CoarseProportions repaired = coarse_proportions(net);
  CHECK(repaired.social == doctest::Approx(9.0 / 12.0));
  CHECK(repaired.professional == doctest::Approx(3.0 / 12.0));
  CHECK(repaired.familial == doctest::Approx(0.0));

  CharacterNetwork empty;
  empty.volume_id = "e";
  CHECK_THROWS_AS(affinity_proportions(empty), Error);
}

TEST_CASE("compute_metrics on an empty network leaves optionals absent") {
  CharacterNetwork empty;
  empty.volume_id = "e";
  NetworkMetrics m = compute_metrics(empty);
  CHECK(m.node_count == 0);
  CHECK(m.edge_count == 0);
  CHECK(m.component_count == 0);
  CHECK(!m.transitivity.has_value());
  CHECK(!m.average_degree.has_value());
  CHECK(!m.mean_betweenness.has_value());
  CHECK(!m.mean_eigenvector.has_value());
  CHECK(!m.star_edit_distance.has_value());
  CHECK(!m.star_edit_distance_normalized.has_value());
  CHECK(!m.protagonism.has_value());
  CHECK(!m.mediatedness.has_value());
  CHECK(!m.affinity_proportions.has_value());
  CHECK(!m.coarse_proportions.has_value());
  CHECK(m.community_count_overall == 0);
}

TEST_CASE("compute_metrics on the worked example fills everything") {
  NetworkMetrics m = compute_metrics(fixtures::example_network());
  CHECK(m.node_count == 12);
  CHECK(m.edge_count == 12);
  CHECK(m.component_count == 2);  // Cervantes and Benengeli sit apart
  CHECK(m.transitivity.has_value());
  CHECK(m.average_degree == doctest::Approx(2.0));
  CHECK(m.mean_betweenness.has_value());
  CHECK(m.mean_eigenvector.has_value());
  CHECK(m.star_edit_distance.has_value());
  CHECK(m.protagonism.has_value());
  CHECK(m.mediatedness.has_value());
  REQUIRE(m.coarse_proportions.has_value());
  CHECK(m.coarse_proportions->familial == 0.0);
  CHECK(m.community_count_overall >= 2);
  CHECK(m.community_count_familial == 0);  // empty familial subgraph
}
