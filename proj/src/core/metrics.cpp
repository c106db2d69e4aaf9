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

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "community.hpp"
#include "error.hpp"

namespace narnet {

ComponentsResult connected_components(const SimpleGraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  ComponentsResult result;
  result.assignment.assign(n, -1);
  std::deque<int> queue;
  for (int start = 0; start < n; ++start) {
    if (result.assignment[start] != -1) continue;
    int id = static_cast<int>(result.count++);
    result.assignment[start] = id;
    queue.push_back(start);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.adjacency[v]) {
        if (result.assignment[w] == -1) {
          result.assignment[w] = id;
          queue.push_back(w);
        }
      }
    }
  }
  return result;
}

double transitivity(const SimpleGraph& g) {
  int64_t triples = 0;
  for (const auto& neighbors : g.adjacency) {
    int64_t d = static_cast<int64_t>(neighbors.size());
    triples += d * (d - 1) / 2;
  }
  if (triples == 0) return 0.0;

  // Each triangle is seen from all three of its edges; sorted neighbor
  // lists make the common-neighbor count a linear merge.
  int64_t closed = 0;  // 3 * triangle count
  for (const auto& [a, b] : g.edges) {
    const auto& na = g.adjacency[a];
    const auto& nb = g.adjacency[b];
    size_t i = 0, j = 0;
    while (i < na.size() && j < nb.size()) {
      if (na[i] < nb[j]) {
        ++i;
      } else if (na[i] > nb[j]) {
        ++j;
      } else {
        ++closed;
        ++i;
        ++j;
      }
    }
  }
  return static_cast<double>(closed) / static_cast<double>(triples);
}

double average_degree(const SimpleGraph& g) {
  if (g.node_count() == 0) {
    throw Error(ErrorCode::EmptyGraph, "average degree of an empty graph");
  }
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

std::vector<double> betweenness_centrality(const SimpleGraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<double> centrality(n, 0.0);
  if (n < 3) return centrality;

  // Brandes accumulation; every source contributes its dependency to the
  // interior nodes of the shortest paths it roots.
  std::vector<int> distance(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<std::vector<int>> predecessors(n);
  std::vector<int> stack;
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(distance.begin(), distance.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : predecessors) p.clear();
    stack.clear();

    distance[s] = 0;
    sigma[s] = 1.0;
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      stack.push_back(v);
      for (int w : g.adjacency[v]) {
        if (distance[w] == -1) {
          distance[w] = distance[v] + 1;
          queue.push_back(w);
        }
        if (distance[w] == distance[v] + 1) {
          sigma[w] += sigma[v];
          predecessors[w].push_back(v);
        }
      }
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      int w = *it;
      for (int v : predecessors[w]) {
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) centrality[w] += delta[w];
    }
  }

  // Each unordered pair was accumulated twice; (n-1)(n-2) folds both that
  // factor and the (n-1)(n-2)/2 pair-count normalization.
  const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  for (double& c : centrality) c *= scale;
  return centrality;
}

EigenvectorResult eigenvector_centrality(const SimpleGraph& g, double tol, int max_iter) {
  EigenvectorResult result;
  const int n = static_cast<int>(g.nodes.size());
  result.values.assign(n, 0.0);
  if (n == 0) return result;

  ComponentsResult comps = connected_components(g);
  std::vector<std::vector<int>> members(comps.count);
  for (int v = 0; v < n; ++v) {
    members[comps.assignment[v]].push_back(v);
  }

  for (const std::vector<int>& nodes : members) {
    const size_t size = nodes.size();
    if (size == 1) {
      result.values[nodes[0]] = 1.0;
      continue;
    }
    std::vector<int> local(n, -1);
    for (size_t i = 0; i < size; ++i) local[nodes[i]] = static_cast<int>(i);

    std::vector<double> x(size, 1.0 / std::sqrt(static_cast<double>(size)));
    std::vector<double> y(size);
    bool converged = false;
    int iter = 0;
    while (iter < max_iter) {
      ++iter;
      for (size_t i = 0; i < size; ++i) {
        // Adjacency plus identity: same dominant eigenvector, but bipartite
        // components (stars, paths) no longer oscillate between two phases.
        double sum = x[i];
        for (int w : g.adjacency[nodes[i]]) {
          sum += x[local[w]];
        }
        y[i] = sum;
      }
      double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
      double diff = 0.0;
      for (size_t i = 0; i < size; ++i) {
        y[i] /= norm;
        diff = std::max(diff, std::abs(y[i] - x[i]));
      }
      x = y;
      if (diff < tol) {
        converged = true;
        break;
      }
    }
    if (!converged) result.converged = false;
    result.iterations = std::max(result.iterations, iter);
    for (size_t i = 0; i < size; ++i) {
      result.values[nodes[i]] = x[i];
    }
  }

  double norm = std::sqrt(
      std::inner_product(result.values.begin(), result.values.end(), result.values.begin(), 0.0));
  if (norm > 0.0) {
    for (double& v : result.values) v /= norm;
  }
  return result;
}

StarDistance star_edit_distance(const SimpleGraph& g) {
  if (g.node_count() == 0) {
    throw Error(ErrorCode::EmptyGraph, "star edit distance of an empty graph");
  }
  int64_t max_degree = 0;
  for (const auto& neighbors : g.adjacency) {
    max_degree = std::max(max_degree, static_cast<int64_t>(neighbors.size()));
  }
  StarDistance d;
  d.raw = g.node_count() + g.edge_count() - 2 * max_degree - 1;
  d.normalized = static_cast<double>(d.raw) / static_cast<double>(g.node_count());
  return d;
}

double protagonism(const SimpleGraph& g) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::NoEdges, "protagonism needs at least one edge");
  }
  int64_t max_degree = 0;
  for (const auto& neighbors : g.adjacency) {
    max_degree = std::max(max_degree, static_cast<int64_t>(neighbors.size()));
  }
  return static_cast<double>(max_degree) / (2.0 * static_cast<double>(g.edge_count()));
}

double mediatedness(const SimpleGraph& g) {
  if (g.node_count() == 0) {
    throw Error(ErrorCode::EmptyGraph, "mediatedness of an empty graph");
  }
  std::vector<double> centrality = betweenness_centrality(g);
  return *std::max_element(centrality.begin(), centrality.end());
}

AffinityProportions affinity_proportions(const CharacterNetwork& net) {
  if (net.records.empty()) {
    throw Error(ErrorCode::NoRecords, net.volume_id + ": no records to summarize");
  }
  AffinityProportions p;
  for (const RelationshipRecord& record : net.records) {
    switch (record.affinity) {
      case Affinity::Positive: p.positive += 1.0; break;
      case Affinity::Negative: p.negative += 1.0; break;
      case Affinity::Neutral: p.neutral += 1.0; break;
    }
  }
  const double total = static_cast<double>(net.records.size());
  p.positive /= total;
  p.negative /= total;
  p.neutral /= total;
  return p;
}

CoarseProportions coarse_proportions(const CharacterNetwork& net) {
  if (net.records.empty()) {
    throw Error(ErrorCode::NoRecords, net.volume_id + ": no records to summarize");
  }
  CoarseProportions p;
  for (const RelationshipRecord& record : net.records) {
    switch (record.coarse_category) {
      case CoarseCategory::Social: p.social += 1.0; break;
      case CoarseCategory::Professional: p.professional += 1.0; break;
      case CoarseCategory::Familial: p.familial += 1.0; break;
    }
  }
  const double total = static_cast<double>(net.records.size());
  p.social /= total;
  p.professional /= total;
  p.familial /= total;
  return p;
}

NetworkMetrics compute_metrics(const CharacterNetwork& net) {
  NetworkMetrics m;
  if (net.records.empty()) {
    return m;  // counts stay 0, every optional stays absent
  }

  TypedMultigraph typed = build_graph(net);
  SimpleGraph g = simple_projection(typed);

  m.node_count = g.node_count();
  m.edge_count = g.edge_count();
  m.component_count = connected_components(g).count;
  m.transitivity = transitivity(g);
  m.average_degree = average_degree(g);

  std::vector<double> betweenness = betweenness_centrality(g);
  m.mean_betweenness =
      std::accumulate(betweenness.begin(), betweenness.end(), 0.0) /
      static_cast<double>(betweenness.size());
  m.mediatedness = *std::max_element(betweenness.begin(), betweenness.end());

  EigenvectorResult eigen = eigenvector_centrality(g);
  m.mean_eigenvector = std::accumulate(eigen.values.begin(), eigen.values.end(), 0.0) /
                       static_cast<double>(eigen.values.size());

  StarDistance star = star_edit_distance(g);
  m.star_edit_distance = star.raw;
  m.star_edit_distance_normalized = star.normalized;
  m.protagonism = protagonism(g);

  m.affinity_proportions = affinity_proportions(net);
  m.coarse_proportions = coarse_proportions(net);

  CommunityCounts counts = community_counts(net);
  m.community_count_overall = counts.overall;
  m.community_count_social = counts.social;
  m.community_count_professional = counts.professional;
  m.community_count_familial = counts.familial;
  return m;
}

}  // namespace narnet
