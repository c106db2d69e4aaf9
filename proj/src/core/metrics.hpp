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
#include <optional>
#include <vector>

#include "graph.hpp"
#include "records.hpp"

namespace narnet {

struct ComponentsResult {
  int64_t count = 0;
  std::vector<int> assignment;  // node id -> component id, dense from 0
};

// Standard undirected connectivity. Component ids follow the order in
// which components are first reached when scanning nodes in id order.
ComponentsResult connected_components(const SimpleGraph& g);

// Global transitivity: 3 * triangles / connected triples; 0 when the graph
// has no connected triples.
double transitivity(const SimpleGraph& g);

// 2|E| / |V|. Throws Error(EmptyGraph) when the graph has no nodes.
double average_degree(const SimpleGraph& g);

// Shortest-path betweenness per node (Brandes), normalized by
// (n-1)(n-2)/2. Graphs with fewer than 3 nodes get all-zero values.
std::vector<double> betweenness_centrality(const SimpleGraph& g);

struct EigenvectorResult {
  std::vector<double> values;  // unit Euclidean norm overall (when nonempty)
  bool converged = true;
  int iterations = 0;  // largest iteration count over components
};

// Power-iteration eigenvector centrality, computed per connected component
// and then concatenated and scaled to unit Euclidean norm. Iteration runs
// on the component adjacency plus the identity; the shift leaves the
// dominant eigenvector unchanged but keeps bipartite components (stars,
// paths) from oscillating forever. When any component fails to reach tol
// within max_iter the last iterate is still returned with converged=false.
EigenvectorResult eigenvector_centrality(const SimpleGraph& g, double tol = 1e-8,
                                         int max_iter = 1000);

struct StarDistance {
  int64_t raw = 0;
  double normalized = 0.0;  // raw / |V|
};

// Edge edits to reach a star: |V| + |E| - 2*max_degree - 1.
// Throws Error(EmptyGraph) when the graph has no nodes.
StarDistance star_edit_distance(const SimpleGraph& g);

// max_degree / (2|E|): the best-connected character's share of all edge
// endpoints. Throws Error(NoEdges) when the graph has no edges.
double protagonism(const SimpleGraph& g);

// Maximum normalized betweenness over nodes. Throws Error(EmptyGraph)
// when the graph has no nodes.
double mediatedness(const SimpleGraph& g);

struct AffinityProportions {
  double positive = 0.0;
  double negative = 0.0;
  double neutral = 0.0;
};

struct CoarseProportions {
  double social = 0.0;
  double professional = 0.0;
  double familial = 0.0;
};

// Per-affinity record shares; sums to 1. Throws Error(NoRecords) on an
// empty record list.
AffinityProportions affinity_proportions(const CharacterNetwork& net);

// Per-coarse-category record shares over repaired records; sums to 1.
// Throws Error(NoRecords) on an empty record list.
CoarseProportions coarse_proportions(const CharacterNetwork& net);

// The full per-network metric vector. Optional fields are absent exactly
// when their operation is undefined for the input (an empty network leaves
// every optional absent; a network always has edges otherwise, since every
// record contributes one).
struct NetworkMetrics {
  int64_t node_count = 0;
  int64_t edge_count = 0;
  int64_t component_count = 0;
  std::optional<double> transitivity;
  std::optional<double> average_degree;
  std::optional<double> mean_betweenness;
  std::optional<double> mean_eigenvector;
  std::optional<int64_t> star_edit_distance;
  std::optional<double> star_edit_distance_normalized;
  std::optional<double> protagonism;
  std::optional<double> mediatedness;
  std::optional<AffinityProportions> affinity_proportions;
  std::optional<CoarseProportions> coarse_proportions;
  int64_t community_count_overall = 0;
  int64_t community_count_social = 0;
  int64_t community_count_professional = 0;
  int64_t community_count_familial = 0;
};

// Computes every metric for one repaired, pair-deduped network.
// Degenerate networks produce absent optionals, never errors.
NetworkMetrics compute_metrics(const CharacterNetwork& net);

}  // namespace narnet
