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

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "llr/errors.hpp"
#include "llr/oracles.hpp"

namespace llr {

namespace {

void check_weights(const ActionSet& problem, std::span<const double> w) {
  if (w.size() != problem.n_vars()) {
    throw ContractViolation("weight vector has length " + std::to_string(w.size()) +
                            ", expected N = " + std::to_string(problem.n_vars()));
  }
  for (double x : w) {
    if (!std::isfinite(x)) throw ContractViolation("weight vector has a non-finite entry");
  }
}

// First arm (in list order) within kTieTolerance of the best objective.
OracleSolution best_explicit(const ExplicitArms& set, std::span<const double> w,
                             bool maximize) {
  std::vector<double> objective(set.arms.size());
  double best = 0.0;
  for (std::size_t k = 0; k < set.arms.size(); ++k) {
    objective[k] = set.arms[k].dot(w);
    if (k == 0 || (maximize ? objective[k] > best : objective[k] < best)) best = objective[k];
  }
  for (std::size_t k = 0; k < set.arms.size(); ++k) {
    const bool tied = maximize ? objective[k] >= best - kTieTolerance
                               : objective[k] <= best + kTieTolerance;
    if (tied) return {set.arms[k], objective[k], 0};
  }
  throw std::logic_error("explicit oracle found no arm");
}

OracleSolution from_vars(std::size_t n_vars, std::vector<std::size_t> vars,
                         std::span<const double> w) {
  OracleSolution s{ActionVector::incidence(n_vars, vars), 0.0, 0};
  s.objective = s.arm.dot(w);
  return s;
}

OracleSolution solve_matching(const BipartiteMatching& m, std::size_t n_vars,
                              std::span<const double> w, bool maximize) {
  const auto result = oracle_detail::solve_assignment(m.users, m.channels, w, maximize);
  std::vector<std::size_t> vars;
  vars.reserve(m.users);
  for (std::size_t u = 0; u < m.users; ++u) vars.push_back(m.var(u, result.assignment[u]));
  return from_vars(n_vars, std::move(vars), w);
}

}  // namespace

OracleSolution solve_max(const ActionSet& problem, std::span<const double> w,
                         const OracleOptions& options) {
  check_weights(problem, w);
  const auto& v = problem.variant();
  if (const auto* set = std::get_if<ExplicitArms>(&v)) return best_explicit(*set, w, true);
  if (const auto* m = std::get_if<BipartiteMatching>(&v)) {
    return solve_matching(*m, problem.n_vars(), w, true);
  }
  if (const auto* t = std::get_if<SpanningTrees>(&v)) {
    return from_vars(problem.n_vars(),
                     oracle_detail::spanning_tree(t->graph, w, options.tree_algorithm, true),
                     w);
  }
  throw UnsupportedVariantError(
      "maximization over source-destination paths (longest simple path) is not supported");
}

OracleSolution solve_min(const ActionSet& problem, std::span<const double> w,
                         const OracleOptions& options) {
  check_weights(problem, w);
  const auto& v = problem.variant();
  if (const auto* set = std::get_if<ExplicitArms>(&v)) return best_explicit(*set, w, false);
  if (const auto* m = std::get_if<BipartiteMatching>(&v)) {
    return solve_matching(*m, problem.n_vars(), w, false);
  }
  if (const auto* t = std::get_if<SpanningTrees>(&v)) {
    return from_vars(problem.n_vars(),
                     oracle_detail::spanning_tree(t->graph, w, options.tree_algorithm, false),
                     w);
  }
  const auto& paths = std::get<SourceDestPaths>(v);
  std::vector<double> floored(w.begin(), w.end());
  std::size_t n_floored = 0;
  for (double& x : floored) {
    if (x < 0.0) {
      x = 0.0;
      ++n_floored;
    }
  }
  auto vars = oracle_detail::shortest_path(paths, floored, options.path_algorithm);
  if (vars.empty()) {
    throw InfeasibleError("no path from vertex " + std::to_string(paths.source) +
                          " to vertex " + std::to_string(paths.dest));
  }
  OracleSolution s = from_vars(problem.n_vars(), std::move(vars), floored);
  s.floored_weights = n_floored;
  return s;
}

std::vector<OracleSolution> solve_top_k(const ActionSet& problem, std::span<const double> w,
                                        std::size_t K) {
  check_weights(problem, w);
  const auto* set = std::get_if<ExplicitArms>(&problem.variant());
  if (set == nullptr) {
    throw UnsupportedVariantError("top-K selection is only supported for explicit action sets");
  }
  if (K == 0 || K > set->arms.size()) {
    throw ConfigurationError("K = " + std::to_string(K) + " must lie in 1..|F| = " +
                             std::to_string(set->arms.size()));
  }
  std::vector<double> objective(set->arms.size());
  for (std::size_t k = 0; k < set->arms.size(); ++k) objective[k] = set->arms[k].dot(w);
  std::vector<char> taken(set->arms.size(), 0);

  // Repeated selection with the same tie rule as solve_max.
  std::vector<OracleSolution> out;
  out.reserve(K);
  for (std::size_t round = 0; round < K; ++round) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < objective.size(); ++k) {
      if (!taken[k] && objective[k] > best) best = objective[k];
    }
    for (std::size_t k = 0; k < objective.size(); ++k) {
      if (!taken[k] && objective[k] >= best - kTieTolerance) {
        taken[k] = 1;
        out.push_back({set->arms[k], objective[k], 0});
        break;
      }
    }
  }
  return out;
}

}  // namespace llr
