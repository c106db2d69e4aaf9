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
#include <string>
#include <utility>
#include <vector>

#include "records.hpp"

namespace narnet {

// One undirected typed edge; endpoints index the owning graph's node list
// with a < b.
struct TypedEdge {
  int a = 0;
  int b = 0;
  Affinity affinity = Affinity::Neutral;
  CoarseCategory coarse = CoarseCategory::Social;
  FineCategory fine = FineCategory::Friend;
};

// Undirected multigraph with typed edges and no self-loops. Nodes are
// canonical character keys stored in ascending order, so index order and
// key order coincide and equal graphs compare equal.
struct TypedMultigraph {
  std::vector<std::string> nodes;
  std::vector<TypedEdge> edges;

  int64_t node_count() const { return static_cast<int64_t>(nodes.size()); }
  int64_t edge_count() const { return static_cast<int64_t>(edges.size()); }
};

// Unweighted simple graph: at most one edge per unordered pair, no
// self-loops. Neighbor lists and the edge list are kept sorted.
struct SimpleGraph {
  std::vector<std::string> nodes;
  std::vector<std::vector<int>> adjacency;
  std::vector<std::pair<int, int>> edges;  // a < b, lexicographically sorted

  int64_t node_count() const { return static_cast<int64_t>(nodes.size()); }
  int64_t edge_count() const { return static_cast<int64_t>(edges.size()); }
  int64_t degree(int node) const { return static_cast<int64_t>(adjacency[node].size()); }
};

// One node per distinct canonical character key, one typed edge per record.
// Throws Error(SelfLoop) when a record's endpoints collapse to the same
// key; such records must be removed by pair dedup before graph building.
TypedMultigraph build_graph(const CharacterNetwork& net);

// Same node set; a pair is adjacent iff at least one typed edge joins it.
SimpleGraph simple_projection(const TypedMultigraph& g);

// Keeps edges of one coarse category; nodes are restricted to the
// endpoints of surviving edges, so the result has no isolated nodes.
TypedMultigraph subgraph_by_coarse(const TypedMultigraph& g, CoarseCategory c);

// Builds a simple graph over synthetic node labels from an abstract edge
// list; convenient for tools and tests that start from topology alone.
// Duplicate pairs collapse; throws Error(SelfLoop) on a == b and
// Error(InvalidArgument) on out-of-range endpoints.
SimpleGraph simple_graph_from_edges(int node_count,
                                    const std::vector<std::pair<int, int>>& edges);

// Tab-separated edge list: node_a, node_b, affinity, fine_category.
std::string edge_list_tsv(const TypedMultigraph& g);

}  // namespace narnet
