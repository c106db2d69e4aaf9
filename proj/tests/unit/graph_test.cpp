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

#include "graph.hpp"

#include <doctest.h>

#include "error.hpp"
#include "example_volume.hpp"
#include "records.hpp"

using namespace narnet;

namespace {

RelationshipRecord rec(const char* a, const char* b,
                       FineCategory fine = FineCategory::Friend) {
  RelationshipRecord r;
  r.character_1 = a;
  r.character_2 = b;
  r.fine_category = fine;
  r.coarse_category = coarse_of(fine);
  return r;
}

}  // namespace

TEST_CASE("build_graph canonicalizes and sorts nodes") {
  CharacterNetwork net;
  net.volume_id = "v";
  net.records = {rec("Zoe", "anna"), rec("ANNA", "Mira")};
  TypedMultigraph g = build_graph(net);
  REQUIRE(g.node_count() == 3);
  CHECK(g.nodes == std::vector<std::string>{"anna", "mira", "zoe"});
  REQUIRE(g.edge_count() == 2);
  for (const TypedEdge& e : g.edges) CHECK(e.a < e.b);
}

TEST_CASE("records collapsing to one name are a SelfLoop error") {
  CharacterNetwork net;
  net.volume_id = "v";
  net.records = {rec("Anna", " ANNA  ")};
  try {
    build_graph(net);
    FAIL("expected SelfLoop");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SelfLoop);
  }
}

TEST_CASE("parallel typed edges project to one simple edge") {
  CharacterNetwork net;
  net.volume_id = "v";
  net.records = {rec("A", "B", FineCategory::Friend), rec("B", "A", FineCategory::Employer),
                 rec("B", "C", FineCategory::Wife)};
  TypedMultigraph g = build_graph(net);
  CHECK(g.edge_count() == 3);
  SimpleGraph simple = simple_projection(g);
  CHECK(simple.edge_count() == 2);
  CHECK(simple.degree(1) == 2);  // b sees both a and c
  // Adjacency lists stay sorted.
  for (const auto& neighbors : simple.adjacency) {
    CHECK(std::is_sorted(neighbors.begin(), neighbors.end()));
  }
}

TEST_CASE("coarse subgraphs drop isolated nodes but keep node order") {
  CharacterNetwork net;
  net.volume_id = "v";
  net.records = {rec("A", "B", FineCategory::Friend), rec("C", "D", FineCategory::Wife),
                 rec("A", "D", FineCategory::Employer)};
  TypedMultigraph g = build_graph(net);
  REQUIRE(g.node_count() == 4);

  TypedMultigraph familial = subgraph_by_coarse(g, CoarseCategory::Familial);
  CHECK(familial.nodes == std::vector<std::string>{"c", "d"});
  CHECK(familial.edge_count() == 1);

  TypedMultigraph social = subgraph_by_coarse(g, CoarseCategory::Social);
  CHECK(social.nodes == std::vector<std::string>{"a", "b"});

  TypedMultigraph professional = subgraph_by_coarse(g, CoarseCategory::Professional);
  CHECK(professional.nodes == std::vector<std::string>{"a", "d"});
  REQUIRE(professional.edge_count() == 1);
  CHECK(professional.edges[0].a == 0);
  CHECK(professional.edges[0].b == 1);
}

TEST_CASE("simple_graph_from_edges validates and dedupes") {
  SimpleGraph g = simple_graph_from_edges(4, {{2, 1}, {1, 2}, {0, 3}});
  CHECK(g.edge_count() == 2);
  CHECK(g.nodes[0] == "n000000");
  CHECK_THROWS_AS(simple_graph_from_edges(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(simple_graph_from_edges(3, {{0, 5}}), Error);
}

TEST_CASE("edge list export is tab separated") {
  CharacterNetwork net;
  net.volume_id = "v";
  net.records = {rec("B", "A", FineCategory::Employer)};
  std::string tsv = edge_list_tsv(build_graph(net));
  CHECK(tsv == "a\tb\tneutral\temployer\n");
}

TEST_CASE("the example volume builds a 12-node graph") {
  CharacterNetwork net = fixtures::example_network();
  TypedMultigraph g = build_graph(net);
  CHECK(g.node_count() == 12);
  CHECK(g.edge_count() == 12);
  SimpleGraph simple = simple_projection(g);
  CHECK(simple.edge_count() == 12);  // all pairs distinct in the example
}
