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

#ifndef LLR_ORACLES_HPP_
#define LLR_ORACLES_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "llr/core_model.hpp"

namespace llr {

enum class PathAlgorithm { kDijkstra, kBellmanFord };
enum class TreeAlgorithm { kKruskal, kPrim };

struct OracleOptions {
  PathAlgorithm path_algorithm = PathAlgorithm::kDijkstra;
  TreeAlgorithm tree_algorithm = TreeAlgorithm::kKruskal;
  friend bool operator==(const OracleOptions&, const OracleOptions&) = default;
};

struct OracleSolution {
  ActionVector arm;
  double objective = 0.0;
  // Number of negative weights raised to zero before a shortest-path solve.
  std::size_t floored_weights = 0;
};

// Exact argmax of sum_i a_i w_i over F. Ties within kTieTolerance go to the
// lexicographically smallest support for matchings and to the first arm in
// list order for explicit sets. Graph oracles break ties by edge variable:
// trees scan edges in (weight, var) order, path relaxations keep the
// smaller incoming var.
// Throws ConfigurationError for bipartite sets with more users than channels
// and UnsupportedVariantError for source-destination paths (longest simple
// path is not polynomial).
OracleSolution solve_max(const ActionSet& problem, std::span<const double> w,
                         const OracleOptions& options = {});

// Exact argmin of sum_i a_i w_i over F. For source-destination paths any
// negative weight is raised to zero first. Throws InfeasibleError when no
// s-d path or spanning tree exists.
OracleSolution solve_min(const ActionSet& problem, std::span<const double> w,
                         const OracleOptions& options = {});

// The K arms with the largest objectives, non-increasing; explicit sets only.
std::vector<OracleSolution> solve_top_k(const ActionSet& problem,
                                        std::span<const double> w, std::size_t K);

// Lists F explicitly (0/1 incidence vectors for graph variants) in
// lexicographic support order. Throws SizeLimitError once more than `limit`
// arms are found.
ActionSet enumerate_brute_force(const ActionSet& problem, std::size_t limit);

namespace oracle_detail {

struct MatchingResult {
  // channel assigned to each user
  std::vector<std::size_t> assignment;
  double objective = 0.0;
};

// Assignment of every user to a distinct channel maximizing (or minimizing)
// the total weight; weights are row-major users x channels.
MatchingResult solve_assignment(std::size_t users, std::size_t channels,
                                std::span<const double> weights, bool maximize);

// Returns the edge variables of the chosen path, or empty if d unreachable.
std::vector<std::size_t> shortest_path(const SourceDestPaths& problem,
                                       std::span<const double> w, PathAlgorithm algo);

// Returns the edge variables of the tree; throws InfeasibleError when
// disconnected.
std::vector<std::size_t> spanning_tree(const Graph& graph, std::span<const double> w,
                                       TreeAlgorithm algo, bool maximize);

}  // namespace oracle_detail

}  // namespace llr

#endif  // LLR_ORACLES_HPP_
