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
#include <numeric>
#include <string>
#include <vector>

#include "llr/errors.hpp"
#include "llr/oracles.hpp"

namespace llr {

namespace {

class Collector {
 public:
  Collector(std::size_t n_vars, std::size_t limit) : n_vars_(n_vars), limit_(limit) {}

  void add(std::vector<std::size_t> vars) {
    if (arms_.size() == limit_) {
      throw SizeLimitError("feasible set has more than " + std::to_string(limit_) +
                               " arms (enumeration stopped at " +
                               std::to_string(arms_.size()) + ")",
                           arms_.size());
    }
    std::sort(vars.begin(), vars.end());
    arms_.push_back(ActionVector::incidence(n_vars_, vars));
  }

  std::vector<ActionVector> take_sorted() {
    std::sort(arms_.begin(), arms_.end(), ActionVector::support_less);
    return std::move(arms_);
  }

 private:
  std::size_t n_vars_;
  std::size_t limit_;
  std::vector<ActionVector> arms_;
};

void enumerate_matchings(const BipartiteMatching& m, std::size_t user,
                         std::vector<char>& used, std::vector<std::size_t>& vars,
                         Collector& out) {
  if (user == m.users) {
    out.add(vars);
    return;
  }
  for (std::size_t c = 0; c < m.channels; ++c) {
    if (used[c]) continue;
    used[c] = 1;
    vars.push_back(m.var(user, c));
    enumerate_matchings(m, user + 1, used, vars, out);
    vars.pop_back();
    used[c] = 0;
  }
}

void enumerate_paths(const SourceDestPaths& p,
                     const std::vector<std::vector<std::size_t>>& out_edges,
                     std::size_t at, std::vector<char>& on_path,
                     std::vector<std::size_t>& vars, Collector& out) {
  if (at == p.dest) {
    out.add(vars);
    return;
  }
  for (std::size_t e : out_edges[at]) {
    const GraphEdge& edge = p.graph.edges[e];
    if (on_path[edge.to]) continue;
    on_path[edge.to] = 1;
    vars.push_back(edge.var);
    enumerate_paths(p, out_edges, edge.to, on_path, vars, out);
    vars.pop_back();
    on_path[edge.to] = 0;
  }
}

std::size_t root_of(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x];
  return x;
}

void enumerate_trees(const Graph& g, std::size_t next_edge,
                     std::vector<std::size_t> components, std::vector<std::size_t>& vars,
                     Collector& out) {
  const std::size_t needed = g.n_vertices - 1;
  if (vars.size() == needed) {
    out.add(vars);
    return;
  }
  if (g.edges.size() - next_edge < needed - vars.size()) return;
  const GraphEdge& edge = g.edges[next_edge];
  const std::size_t a = root_of(components, edge.from);
  const std::size_t b = root_of(components, edge.to);
  if (a != b) {
    std::vector<std::size_t> joined = components;
    joined[std::max(a, b)] = std::min(a, b);
    vars.push_back(edge.var);
    enumerate_trees(g, next_edge + 1, std::move(joined), vars, out);
    vars.pop_back();
  }
  enumerate_trees(g, next_edge + 1, std::move(components), vars, out);
}

}  // namespace

ActionSet enumerate_brute_force(const ActionSet& problem, std::size_t limit) {
  const auto& v = problem.variant();
  if (const auto* set = std::get_if<ExplicitArms>(&v)) {
    if (set->arms.size() > limit) {
      throw SizeLimitError("explicit set exceeds the enumeration limit", limit);
    }
    return problem;
  }
  Collector out(problem.n_vars(), limit);
  if (const auto* m = std::get_if<BipartiteMatching>(&v)) {
    if (m->users > m->channels) {
      throw ConfigurationError("bipartite matching needs users <= channels");
    }
    std::vector<char> used(m->channels, 0);
    std::vector<std::size_t> vars;
    enumerate_matchings(*m, 0, used, vars, out);
  } else if (const auto* p = std::get_if<SourceDestPaths>(&v)) {
    std::vector<std::vector<std::size_t>> out_edges(p->graph.n_vertices);
    for (std::size_t e = 0; e < p->graph.edges.size(); ++e) {
      out_edges[p->graph.edges[e].from].push_back(e);
    }
    std::vector<char> on_path(p->graph.n_vertices, 0);
    on_path[p->source] = 1;
    std::vector<std::size_t> vars;
    enumerate_paths(*p, out_edges, p->source, on_path, vars, out);
  } else {
    const Graph& g = std::get<SpanningTrees>(v).graph;
    std::vector<std::size_t> components(g.n_vertices);
    std::iota(components.begin(), components.end(), 0);
    std::vector<std::size_t> vars;
    enumerate_trees(g, 0, std::move(components), vars, out);
  }
  auto arms = out.take_sorted();
  if (arms.empty()) throw InfeasibleError("feasible set is empty");
  return ActionSet::explicit_arms(std::move(arms));
}

}  // namespace llr
