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

#include "community.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace narnet {

namespace {

// A weighted undirected graph for the aggregation levels. self_weight is
// the diagonal adjacency entry A_ii, i.e. twice the weight folded inside
// the super-node, so degrees and 2m keep their usual matrix definitions.
struct WeightedLevel {
  std::vector<std::vector<std::pair<int, double>>> adj;  // (neighbor, weight)
  std::vector<double> self_weight;
  std::vector<double> degree;  // self_weight + incident edge weights
  double two_m = 0.0;

  int size() const { return static_cast<int>(adj.size()); }
};

WeightedLevel level_from_simple(const SimpleGraph& g) {
  WeightedLevel level;
  level.adj.resize(g.nodes.size());
  level.self_weight.assign(g.nodes.size(), 0.0);
  for (const auto& [a, b] : g.edges) {
    level.adj[a].emplace_back(b, 1.0);
    level.adj[b].emplace_back(a, 1.0);
  }
  level.degree.assign(g.nodes.size(), 0.0);
  for (int i = 0; i < level.size(); ++i) {
    double d = level.self_weight[i];
    for (const auto& [j, w] : level.adj[i]) d += w;
    level.degree[i] = d;
    level.two_m += d;
  }
  return level;
}

// Modularity of the all-singletons partition of a level; the starting
// point for the incremental Q trace.
double singleton_modularity(const WeightedLevel& level) {
  double q = 0.0;
  for (int i = 0; i < level.size(); ++i) {
    q += level.self_weight[i] / level.two_m;
    double frac = level.degree[i] / level.two_m;
    q -= frac * frac;
  }
  return q;
}

// One full phase-1 sweep cycle: repeated passes over all nodes until a
// pass accepts no move. Returns true when anything moved.
bool local_moves(const WeightedLevel& level, std::vector<int>& community,
                 std::vector<double>& community_total, double& q_current,
                 std::vector<double>* q_trace) {
  constexpr double kMinGain = 1e-12;
  const double m = level.two_m / 2.0;
  bool any_move = false;
  bool improved = true;
  std::map<int, double> weight_to;  // candidate community -> edge weight from i

  while (improved) {
    improved = false;
    for (int i = 0; i < level.size(); ++i) {
      const int old_comm = community[i];
      weight_to.clear();
      weight_to[old_comm] = 0.0;  // staying put is always a candidate
      for (const auto& [j, w] : level.adj[i]) {
        weight_to[community[j]] += w;
      }

      const double k_i = level.degree[i];
      community_total[old_comm] -= k_i;

      // Gain of placing i (detached) into community c, up to terms that do
      // not depend on c.
      auto gain = [&](int c, double w_ic) {
        return w_ic / m - community_total[c] * k_i / (2.0 * m * m);
      };

      const double stay_gain = gain(old_comm, weight_to[old_comm]);
      int best_comm = old_comm;
      double best_gain = stay_gain;
      for (const auto& [c, w_ic] : weight_to) {
        if (c == old_comm) continue;
        double g = gain(c, w_ic);
        // Ascending iteration plus strict comparison gives equal-gain ties
        // to the smallest community id.
        if (g > best_gain) {
          best_comm = c;
          best_gain = g;
        }
      }

      if (best_comm != old_comm && best_gain - stay_gain > kMinGain) {
        community[i] = best_comm;
        community_total[best_comm] += k_i;
        improved = true;
        any_move = true;
        if (q_trace) {
          q_current += best_gain - stay_gain;
          q_trace->push_back(q_current);
        }
      } else {
        community_total[old_comm] += k_i;
      }
    }
  }
  return any_move;
}

// Collapses communities into super-nodes; intra-community weight becomes
// the diagonal entry (doubled, matrix convention). dense maps old
// community ids to new node ids in first-appearance order.
WeightedLevel aggregate(const WeightedLevel& level, const std::vector<int>& community,
                        std::vector<int>& dense) {
  dense.assign(level.size(), 0);
  int next = 0;
  std::map<int, int> seen;
  for (int i = 0; i < level.size(); ++i) {
    auto [it, inserted] = seen.emplace(community[i], next);
    if (inserted) ++next;
    dense[i] = it->second;
  }
  const std::vector<int>& comm_of_node = dense;

  WeightedLevel up;
  up.adj.resize(next);
  up.self_weight.assign(next, 0.0);
  std::vector<std::map<int, double>> weights(next);
  for (int i = 0; i < level.size(); ++i) {
    int ci = comm_of_node[i];
    up.self_weight[ci] += level.self_weight[i];
    for (const auto& [j, w] : level.adj[i]) {
      int cj = comm_of_node[j];
      if (ci == cj) {
        up.self_weight[ci] += w;  // each intra edge visited from both ends
      } else {
        weights[ci][cj] += w;
      }
    }
  }
  for (int c = 0; c < next; ++c) {
    for (const auto& [d, w] : weights[c]) {
      up.adj[c].emplace_back(d, w);
    }
  }
  up.degree.assign(next, 0.0);
  for (int c = 0; c < next; ++c) {
    double deg = up.self_weight[c];
    for (const auto& [d, w] : up.adj[c]) deg += w;
    up.degree[c] = deg;
    up.two_m += deg;
  }
  return up;
}

std::vector<int> renumber_by_first_appearance(const std::vector<int>& assignment) {
  std::map<int, int> seen;
  std::vector<int> dense(assignment.size());
  int next = 0;
  for (size_t i = 0; i < assignment.size(); ++i) {
    auto [it, inserted] = seen.emplace(assignment[i], next);
    if (inserted) ++next;
    dense[i] = it->second;
  }
  return dense;
}

}  // namespace

int64_t Partition::community_count() const {
  if (assignment.empty()) return 0;
  return *std::max_element(assignment.begin(), assignment.end()) + 1;
}

double modularity(const SimpleGraph& g, const std::vector<int>& assignment) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::NoEdges, "modularity needs at least one edge");
  }
  if (assignment.size() != g.nodes.size()) {
    throw Error(ErrorCode::UnassignedNode, "assignment does not cover every node");
  }
  for (int c : assignment) {
    if (c < 0) {
      throw Error(ErrorCode::UnassignedNode, "negative community id");
    }
  }

  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  std::map<int, double> internal;  // community -> 2 * intra-community edges
  std::map<int, double> total;     // community -> degree sum
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    total[assignment[i]] += static_cast<double>(g.degree(static_cast<int>(i)));
  }
  for (const auto& [a, b] : g.edges) {
    if (assignment[a] == assignment[b]) {
      internal[assignment[a]] += 2.0;
    }
  }

  double q = 0.0;
  for (const auto& [c, tot] : total) {
    double in = 0.0;
    if (auto it = internal.find(c); it != internal.end()) in = it->second;
    q += in / two_m - (tot / two_m) * (tot / two_m);
  }
  return q;
}

Partition louvain(const SimpleGraph& g, std::vector<double>* q_trace) {
  Partition result;
  result.assignment.resize(g.nodes.size());
  if (g.edge_count() == 0) {
    for (size_t i = 0; i < g.nodes.size(); ++i) {
      result.assignment[i] = static_cast<int>(i);
    }
    return result;
  }

  WeightedLevel level = level_from_simple(g);

  // node_to_super[i]: the current level's node holding original node i.
  std::vector<int> node_to_super(g.nodes.size());
  for (size_t i = 0; i < node_to_super.size(); ++i) {
    node_to_super[i] = static_cast<int>(i);
  }

  double q_current = q_trace ? singleton_modularity(level) : 0.0;
  while (true) {
    std::vector<int> community(level.size());
    std::vector<double> community_total(level.size());
    for (int i = 0; i < level.size(); ++i) {
      community[i] = i;
      community_total[i] = level.degree[i];
    }

    if (!local_moves(level, community, community_total, q_current, q_trace)) {
      break;
    }

    std::vector<int> dense;
    level = aggregate(level, community, dense);
    for (int& super : node_to_super) {
      super = dense[super];
    }
  }

  result.assignment = renumber_by_first_appearance(node_to_super);
  result.modularity = modularity(g, result.assignment);
  return result;
}

CommunityCounts community_counts(const CharacterNetwork& net) {
  TypedMultigraph full = build_graph(net);
  CommunityCounts counts;
  counts.overall = louvain(simple_projection(full)).community_count();
  counts.social =
      louvain(simple_projection(subgraph_by_coarse(full, CoarseCategory::Social)))
          .community_count();
  counts.professional =
      louvain(simple_projection(subgraph_by_coarse(full, CoarseCategory::Professional)))
          .community_count();
  counts.familial =
      louvain(simple_projection(subgraph_by_coarse(full, CoarseCategory::Familial)))
          .community_count();
  return counts;
}

}  // namespace narnet
