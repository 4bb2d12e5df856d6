// Copyright 2026 The LLR Bandits Authors. All rights reserved.
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

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "llr/errors.hpp"
#include "llr/oracles.hpp"

namespace llr::oracle_detail {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::size_t> trace_back(const SourceDestPaths& problem,
                                    const std::vector<std::size_t>& parent_edge) {
  const auto& edges = problem.graph.edges;
  std::vector<std::size_t> vars;
  std::size_t v = problem.dest;
  while (v != problem.source) {
    const std::size_t e = parent_edge[v];
    if (e == kNone || vars.size() > problem.graph.n_vertices) {
      throw std::logic_error("shortest-path parent pointers do not reach the source");
    }
    vars.push_back(edges[e].var);
    v = edges[e].from;
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

std::vector<std::size_t> dijkstra(const SourceDestPaths& problem,
                                  std::span<const double> w) {
  const Graph& g = problem.graph;
  std::vector<std::vector<std::size_t>> out(g.n_vertices);
  for (std::size_t e = 0; e < g.edges.size(); ++e) out[g.edges[e].from].push_back(e);
  for (auto& list : out) {
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      return g.edges[a].var < g.edges[b].var;
    });
  }

  std::vector<double> dist(g.n_vertices, kInf);
  std::vector<std::size_t> parent(g.n_vertices, kNone);
  std::vector<char> settled(g.n_vertices, 0);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[problem.source] = 0.0;
  heap.emplace(0.0, problem.source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u] || d > dist[u]) continue;
    settled[u] = 1;
    for (std::size_t e : out[u]) {
      const GraphEdge& edge = g.edges[e];
      const std::size_t v = edge.to;
      if (settled[v]) continue;
      const double nd = d + w[edge.var];
      // Equal-length alternatives go to the smaller incoming edge variable.
      const bool better = nd < dist[v] - kTieTolerance;
      const bool tie_win = !better && nd <= dist[v] + kTieTolerance &&
                           parent[v] != kNone && edge.var < g.edges[parent[v]].var;
      if (better || tie_win) {
        parent[v] = e;
        if (nd < dist[v]) {
          dist[v] = nd;
          heap.emplace(nd, v);
        }
      }
    }
  }
  if (dist[problem.dest] == kInf) return {};
  return trace_back(problem, parent);
}

std::vector<std::size_t> bellman_ford(const SourceDestPaths& problem,
                                      std::span<const double> w) {
  const Graph& g = problem.graph;
  std::vector<std::size_t> order(g.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.edges[a].var < g.edges[b].var;
  });

  std::vector<double> dist(g.n_vertices, kInf);
  std::vector<std::size_t> parent(g.n_vertices, kNone);
  dist[problem.source] = 0.0;
  for (std::size_t round = 0; round + 1 < g.n_vertices; ++round) {
    bool changed = false;
    for (std::size_t e : order) {
      const GraphEdge& edge = g.edges[e];
      if (dist[edge.from] == kInf || edge.to == problem.source) continue;
      const double nd = dist[edge.from] + w[edge.var];
      if (nd < dist[edge.to] - kTieTolerance) {
        dist[edge.to] = nd;
        parent[edge.to] = e;
        changed = true;
      }
    }
    if (!changed) break;
  }
  if (dist[problem.dest] == kInf) return {};
  return trace_back(problem, parent);
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Orders edges by weight (ascending for min, descending for max), then by
// variable index.
auto edge_order(const Graph& g, std::span<const double> w, bool maximize) {
  return [&g, w, maximize](std::size_t a, std::size_t b) {
    const double wa = w[g.edges[a].var];
    const double wb = w[g.edges[b].var];
    if (wa != wb) return maximize ? wa > wb : wa < wb;
    return g.edges[a].var < g.edges[b].var;
  };
}

std::vector<std::size_t> kruskal(const Graph& g, std::span<const double> w, bool maximize) {
  std::vector<std::size_t> order(g.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), edge_order(g, w, maximize));
  DisjointSets sets(g.n_vertices);
  std::vector<std::size_t> vars;
  for (std::size_t e : order) {
    if (sets.unite(g.edges[e].from, g.edges[e].to)) vars.push_back(g.edges[e].var);
  }
  if (vars.size() + 1 != g.n_vertices) {
    throw InfeasibleError("graph is disconnected; no spanning tree exists");
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

std::vector<std::size_t> prim(const Graph& g, std::span<const double> w, bool maximize) {
  const auto less = edge_order(g, w, maximize);
  std::vector<char> in_tree(g.n_vertices, 0);
  in_tree[0] = 1;
  std::vector<std::size_t> vars;
  for (std::size_t step = 1; step < g.n_vertices; ++step) {
    std::size_t best = kNone;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const GraphEdge& edge = g.edges[e];
      if (in_tree[edge.from] == in_tree[edge.to]) continue;
      if (best == kNone || less(e, best)) best = e;
    }
    if (best == kNone) throw InfeasibleError("graph is disconnected; no spanning tree exists");
    in_tree[g.edges[best].from] = 1;
    in_tree[g.edges[best].to] = 1;
    vars.push_back(g.edges[best].var);
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

}  // namespace

std::vector<std::size_t> shortest_path(const SourceDestPaths& problem,
                                       std::span<const double> w, PathAlgorithm algo) {
  for (const GraphEdge& e : problem.graph.edges) {
    if (w[e.var] < 0.0) {
      throw ContractViolation("shortest-path weights must be non-negative");
    }
  }
  return algo == PathAlgorithm::kDijkstra ? dijkstra(problem, w)
                                          : bellman_ford(problem, w);
}

std::vector<std::size_t> spanning_tree(const Graph& graph, std::span<const double> w,
                                       TreeAlgorithm algo, bool maximize) {
  return algo == TreeAlgorithm::kKruskal ? kruskal(graph, w, maximize)
                                         : prim(graph, w, maximize);
}

}  // namespace llr::oracle_detail
