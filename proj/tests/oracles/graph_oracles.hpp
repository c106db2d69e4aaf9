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

// Brute-force reference implementations for the graph computations. They
// favor obviousness over speed: triangle counting by triple enumeration,
// betweenness by pairwise path-count arithmetic, modularity maxima by
// enumerating every partition. Test code compares the fast library
// implementations against these on small graphs.

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace oracle {

// Edge mask enumeration: bit k of `mask` is the k-th pair (i, j), i < j,
// in lexicographic order.
narnet::SimpleGraph graph_from_mask(int n, uint64_t mask);

bool is_connected(const narnet::SimpleGraph& g);

// Every connected simple graph on n labeled vertices (n <= 6 stays small:
// 2^15 masks).
std::vector<narnet::SimpleGraph> all_connected_graphs(int n);

// Erdos-Renyi-ish sample: node count uniform in [min_nodes, max_nodes],
// edge probability uniform in [0.15, 0.85].
narnet::SimpleGraph random_graph(std::mt19937& rng, int min_nodes, int max_nodes);

narnet::SimpleGraph random_connected_graph(std::mt19937& rng, int min_nodes, int max_nodes);

// Two cliques of the given sizes joined by a single bridge edge between
// node 0 of the first and node 0 of the second.
narnet::SimpleGraph two_cliques_with_bridge(int left, int right);

// 3 * (#triangles) / (#paths of length two), 0 when the denominator is 0.
double transitivity(const narnet::SimpleGraph& g);

// Normalized betweenness per node: pair-sum of sigma_st(v) / sigma_st
// over unordered {s, t}, scaled by 2 / ((n-1)(n-2)); all zeros for n < 3.
std::vector<double> betweenness(const narnet::SimpleGraph& g);

// Dense power iteration on (A + I) per connected component, `iters`
// multiplications in long double, components concatenated then unit
// L2-normalized.
std::vector<double> eigenvector(const narnet::SimpleGraph& g, int iters);

// Newman modularity of a labeled partition, straight from the edge list.
double modularity(const narnet::SimpleGraph& g, const std::vector<int>& assignment);

// Maximum modularity over every partition of the vertex set (Bell(n)
// candidates; keep n <= 8). Fills best_assignment when given.
double max_modularity(const narnet::SimpleGraph& g,
                      std::vector<int>* best_assignment = nullptr);

// Fewest edge insertions plus deletions to reach a star on the same
// vertex set, by trying every center.
int64_t star_edit_distance(const narnet::SimpleGraph& g);

}  // namespace oracle
