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
#include <cmath>
#include <string>

#include "llr/core_model.hpp"
#include "llr/errors.hpp"

namespace llr {

ActionVector::ActionVector(std::size_t n_vars, std::vector<Entry> entries)
    : n_vars_(n_vars) {
  std::erase_if(entries, [](const Entry& e) { return e.weight == 0.0; });
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Entry& e = entries[k];
    if (e.index >= n_vars) {
      throw ContractViolation("action vector index " + std::to_string(e.index) +
                              " out of range for N = " + std::to_string(n_vars));
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw ContractViolation("action vector coefficients must be finite and non-negative");
    }
    if (k > 0 && entries[k - 1].index == e.index) {
      throw ContractViolation("duplicate index " + std::to_string(e.index) +
                              " in action vector");
    }
  }
  entries_ = std::move(entries);
}

ActionVector ActionVector::incidence(std::size_t n_vars,
                                     std::span<const std::size_t> indices) {
  std::vector<Entry> entries;
  entries.reserve(indices.size());
  for (std::size_t i : indices) entries.push_back({i, 1.0});
  return ActionVector(n_vars, std::move(entries));
}

ActionVector ActionVector::unit(std::size_t n_vars, std::size_t index) {
  return ActionVector(n_vars, {{index, 1.0}});
}

std::vector<std::size_t> ActionVector::support() const {
  std::vector<std::size_t> s;
  s.reserve(entries_.size());
  for (const Entry& e : entries_) s.push_back(e.index);
  return s;
}

bool ActionVector::contains(std::size_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::size_t i) { return e.index < i; });
  return it != entries_.end() && it->index == index;
}

double ActionVector::coefficient(std::size_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::size_t i) { return e.index < i; });
  return (it != entries_.end() && it->index == index) ? it->weight : 0.0;
}

double ActionVector::max_coefficient() const {
  double best = 0.0;
  for (const Entry& e : entries_) best = std::max(best, e.weight);
  return best;
}

double ActionVector::dot(std::span<const double> values) const {
  double sum = 0.0;
  for (const Entry& e : entries_) sum += e.weight * values[e.index];
  return sum;
}

bool ActionVector::support_less(const ActionVector& a, const ActionVector& b) {
  const auto& x = a.entries_;
  const auto& y = b.entries_;
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k].index != y[k].index) return x[k].index < y[k].index;
  }
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k].weight != y[k].weight) return x[k].weight < y[k].weight;
  }
  return false;
}

namespace {

void validate_graph(const Graph& g) {
  std::vector<bool> seen(g.edges.size(), false);
  for (const GraphEdge& e : g.edges) {
    if (e.from >= g.n_vertices || e.to >= g.n_vertices) {
      throw ConfigurationError("edge endpoint out of range (" + std::to_string(e.from) +
                               ", " + std::to_string(e.to) + ") for " +
                               std::to_string(g.n_vertices) + " vertices");
    }
    if (e.var >= g.edges.size() || seen[e.var]) {
      throw ConfigurationError("edge variable indices must be a permutation of 0.." +
                               std::to_string(g.edges.size() - 1));
    }
    seen[e.var] = true;
  }
  if (g.edges.empty()) throw ConfigurationError("graph has no edges");
}

}  // namespace

ActionSet ActionSet::explicit_arms(std::vector<ActionVector> arms) {
  if (arms.empty()) throw ConfigurationError("explicit action set is empty");
  const std::size_t n = arms.front().n_vars();
  std::size_t L = 0;
  double a_max = 0.0;
  for (const ActionVector& a : arms) {
    if (a.n_vars() != n) {
      throw ConfigurationError("explicit arms disagree on the number of variables");
    }
    L = std::max(L, a.support_size());
    a_max = std::max(a_max, a.max_coefficient());
  }
  if (n == 0 || L == 0) throw ConfigurationError("explicit action set has no variables");
  return ActionSet(ExplicitArms{std::move(arms)}, n, L, a_max);
}

ActionSet ActionSet::bipartite(std::size_t users, std::size_t channels) {
  if (users == 0 || channels == 0) {
    throw ConfigurationError("bipartite matching needs at least one user and one channel");
  }
  return ActionSet(BipartiteMatching{users, channels}, users * channels,
                   std::min(users, channels), 1.0);
}

ActionSet ActionSet::paths(Graph digraph, std::size_t source, std::size_t dest) {
  validate_graph(digraph);
  if (source >= digraph.n_vertices || dest >= digraph.n_vertices) {
    throw ConfigurationError("source/destination vertex out of range");
  }
  if (source == dest) throw ConfigurationError("source and destination coincide");
  const std::size_t n = digraph.edges.size();
  return ActionSet(SourceDestPaths{std::move(digraph), source, dest}, n, n, 1.0);
}

ActionSet ActionSet::spanning_trees(Graph graph) {
  validate_graph(graph);
  const std::size_t n = graph.edges.size();
  return ActionSet(SpanningTrees{std::move(graph)}, n, n, 1.0);
}

ActionSet ActionSet::with_L(std::size_t L) const {
  if (L == 0 || L > n_vars_) {
    throw ConfigurationError("L must lie in 1.." + std::to_string(n_vars_));
  }
  ActionSet copy = *this;
  copy.L_ = L;
  return copy;
}

std::string ActionSet::kind_name() const {
  struct Namer {
    std::string operator()(const ExplicitArms&) const { return "explicit"; }
    std::string operator()(const BipartiteMatching&) const { return "bipartite_matching"; }
    std::string operator()(const SourceDestPaths&) const { return "paths"; }
    std::string operator()(const SpanningTrees&) const { return "spanning_trees"; }
  };
  return std::visit(Namer{}, variant_);
}

double reward_of(const ActionVector& arm, std::span<const double> realization) {
  if (realization.size() != arm.n_vars()) {
    throw ContractViolation("realization has length " + std::to_string(realization.size()) +
                            ", expected " + std::to_string(arm.n_vars()));
  }
  for (const auto& e : arm.entries()) {
    const double x = realization[e.index];
    if (!(x >= 0.0 && x <= 1.0)) {
      throw ContractViolation("realization value outside [0, 1] at index " +
                              std::to_string(e.index));
    }
  }
  return arm.dot(realization);
}

double normalize_regret(double cum_regret, std::uint64_t period) {
  if (period < 2) return 0.0;
  return cum_regret / std::log(static_cast<double>(period));
}

}  // namespace llr
