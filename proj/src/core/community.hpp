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

struct Partition {
  std::vector<int> assignment;       // node id -> community id, dense from 0,
                                     // numbered by first appearance in node order
  std::optional<double> modularity;  // absent when the graph has no edges

  int64_t community_count() const;
};

// Newman modularity Q of an assignment, in [-0.5, 1]. Community ids may be
// any nonnegative integers. Throws Error(NoEdges) on an edgeless graph and
// Error(UnassignedNode) when the assignment does not cover every node.
double modularity(const SimpleGraph& g, const std::vector<int>& assignment);

// Deterministic Louvain: phase one greedily moves nodes (visited in
// ascending id order, which is ascending canonical-key order) to the
// neighboring community with the largest strictly positive gain, ties to
// the smallest community id; phase two aggregates communities and repeats
// until no move helps. Resolution is fixed at 1. Edgeless graphs yield
// singleton communities with modularity absent.
//
// When q_trace is given, the modularity value after every accepted move is
// appended; the sequence is nondecreasing by construction, which makes the
// greedy invariant externally checkable.
Partition louvain(const SimpleGraph& g, std::vector<double>* q_trace = nullptr);

struct CommunityCounts {
  int64_t overall = 0;
  int64_t social = 0;
  int64_t professional = 0;
  int64_t familial = 0;
};

// Louvain community counts on the full simple projection and on each
// coarse-category subgraph's projection (which exclude isolated nodes, so
// counts cover engaged characters only). Empty subgraphs count 0.
CommunityCounts community_counts(const CharacterNetwork& net);

}  // namespace narnet
