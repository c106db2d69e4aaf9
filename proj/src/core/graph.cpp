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

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "error.hpp"

namespace narnet {

namespace {

SimpleGraph simple_from(std::vector<std::string> nodes,
                        const std::set<std::pair<int, int>>& pair_set) {
  SimpleGraph g;
  g.nodes = std::move(nodes);
  g.adjacency.resize(g.nodes.size());
  g.edges.assign(pair_set.begin(), pair_set.end());
  for (const auto& [a, b] : g.edges) {
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
  for (auto& neighbors : g.adjacency) {
    std::sort(neighbors.begin(), neighbors.end());
  }
  return g;
}

}  // namespace

TypedMultigraph build_graph(const CharacterNetwork& net) {
  std::vector<std::string> keys;
  keys.reserve(net.records.size() * 2);
  for (const RelationshipRecord& record : net.records) {
    keys.push_back(canonical_name(record.character_1));
    keys.push_back(canonical_name(record.character_2));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::map<std::string, int> index;
  for (size_t i = 0; i < keys.size(); ++i) {
    index[keys[i]] = static_cast<int>(i);
  }

  TypedMultigraph g;
  g.nodes = std::move(keys);
  g.edges.reserve(net.records.size());
  for (const RelationshipRecord& record : net.records) {
    int a = index.at(canonical_name(record.character_1));
    int b = index.at(canonical_name(record.character_2));
    if (a == b) {
      throw Error(ErrorCode::SelfLoop, net.volume_id + ": self-pair survived dedup for \"" +
                                           g.nodes[a] + "\"");
    }
    if (a > b) std::swap(a, b);
    g.edges.push_back({a, b, record.affinity, record.coarse_category, record.fine_category});
  }
  return g;
}

SimpleGraph simple_projection(const TypedMultigraph& g) {
  std::set<std::pair<int, int>> pairs;
  for (const TypedEdge& e : g.edges) {
    pairs.emplace(e.a, e.b);
  }
  return simple_from(g.nodes, pairs);
}

TypedMultigraph subgraph_by_coarse(const TypedMultigraph& g, CoarseCategory c) {
  std::vector<const TypedEdge*> kept;
  std::set<int> used;
  for (const TypedEdge& e : g.edges) {
    if (e.coarse != c) continue;
    kept.push_back(&e);
    used.insert(e.a);
    used.insert(e.b);
  }

  std::map<int, int> remap;
  TypedMultigraph sub;
  for (int old_id : used) {  // set iteration is ascending, so order is kept
    remap[old_id] = static_cast<int>(sub.nodes.size());
    sub.nodes.push_back(g.nodes[old_id]);
  }
  for (const TypedEdge* e : kept) {
    sub.edges.push_back({remap[e->a], remap[e->b], e->affinity, e->coarse, e->fine});
  }
  return sub;
}

SimpleGraph simple_graph_from_edges(int node_count,
                                    const std::vector<std::pair<int, int>>& edges) {
  if (node_count < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative node count");
  }
  std::vector<std::string> nodes;
  nodes.reserve(node_count);
  char label[16];
  for (int i = 0; i < node_count; ++i) {
    std::snprintf(label, sizeof label, "n%06d", i);
    nodes.emplace_back(label);
  }
  std::set<std::pair<int, int>> pairs;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= node_count || b >= node_count) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (a == b) {
      throw Error(ErrorCode::SelfLoop, "self-loop on node " + std::to_string(a));
    }
    if (a > b) std::swap(a, b);
    pairs.emplace(a, b);
  }
  return simple_from(std::move(nodes), pairs);
}

std::string edge_list_tsv(const TypedMultigraph& g) {
  std::string out;
  for (const TypedEdge& e : g.edges) {
    out += g.nodes[e.a];
    out += '\t';
    out += g.nodes[e.b];
    out += '\t';
    out += to_string(e.affinity);
    out += '\t';
    out += to_string(e.fine);
    out += '\n';
  }
  return out;
}

}  // namespace narnet
