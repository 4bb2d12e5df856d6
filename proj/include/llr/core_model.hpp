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

#ifndef LLR_CORE_MODEL_HPP_
#define LLR_CORE_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace llr {

// Absolute tolerance used whenever two objective values are compared for
// equality (tie-breaking, optimality of an arm).
inline constexpr double kTieTolerance = 1e-12;

// One arm: a sparse, non-negative coefficient vector over N variables.
// Entries are kept sorted by variable index and never hold a zero weight,
// so the support set is exactly the list of stored indices.
class ActionVector {
 public:
  struct Entry {
    std::size_t index;
    double weight;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  ActionVector() = default;
  // Throws ContractViolation on negative/non-finite weights, out-of-range or
  // duplicate indices. Zero weights are dropped.
  ActionVector(std::size_t n_vars, std::vector<Entry> entries);

  // 0/1 incidence vector over the given indices.
  static ActionVector incidence(std::size_t n_vars,
                                std::span<const std::size_t> indices);
  static ActionVector unit(std::size_t n_vars, std::size_t index);

  std::size_t n_vars() const { return n_vars_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  std::vector<std::size_t> support() const;
  bool contains(std::size_t index) const;
  double coefficient(std::size_t index) const;
  double max_coefficient() const;

  // Sum of a_i * values[i] over the support; no range checks on values.
  double dot(std::span<const double> values) const;

  friend bool operator==(const ActionVector&, const ActionVector&) = default;

  // Lexicographic comparison of the sorted support sets (then coefficients).
  // This is the deterministic tie-break order used by every oracle.
  static bool support_less(const ActionVector& a, const ActionVector& b);

 private:
  std::size_t n_vars_ = 0;
  std::vector<Entry> entries_;
};

// Edge of a graph-structured action set. `var` is the variable index of the
// edge weight; graph variants require the edge variables to be a
// permutation of 0..|E|-1.
struct GraphEdge {
  std::size_t from;
  std::size_t to;
  std::size_t var;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct Graph {
  std::size_t n_vertices = 0;
  std::vector<GraphEdge> edges;
  friend bool operator==(const Graph&, const Graph&) = default;
};

struct ExplicitArms {
  std::vector<ActionVector> arms;
  friend bool operator==(const ExplicitArms&, const ExplicitArms&) = default;
};

// Complete bipartite users x channels graph; variable u*channels + c is the
// weight of user u on channel c. Arms are matchings of size min(users, channels).
struct BipartiteMatching {
  std::size_t users = 0;
  std::size_t channels = 0;
  std::size_t var(std::size_t user, std::size_t channel) const {
    return user * channels + channel;
  }
  friend bool operator==(const BipartiteMatching&, const BipartiteMatching&) = default;
};

// Directed graph; arms are simple source -> dest paths.
struct SourceDestPaths {
  Graph graph;
  std::size_t source = 0;
  std::size_t dest = 0;
  friend bool operator==(const SourceDestPaths&, const SourceDestPaths&) = default;
};

// Undirected graph; arms are spanning trees.
struct SpanningTrees {
  Graph graph;
  friend bool operator==(const SpanningTrees&, const SpanningTrees&) = default;
};

using ActionSetVariant =
    std::variant<ExplicitArms, BipartiteMatching, SourceDestPaths, SpanningTrees>;

// The feasible set F together with its exploration constant L and a_max.
class ActionSet {
 public:
  static ActionSet explicit_arms(std::vector<ActionVector> arms);
  static ActionSet bipartite(std::size_t users, std::size_t channels);
  static ActionSet paths(Graph digraph, std::size_t source, std::size_t dest);
  static ActionSet spanning_trees(Graph graph);

  // Replace L with a tighter known bound on max |A_a| (must be in 1..N).
  ActionSet with_L(std::size_t L) const;

  const ActionSetVariant& variant() const { return variant_; }
  std::size_t n_vars() const { return n_vars_; }
  std::size_t L() const { return L_; }
  double a_max() const { return a_max_; }
  std::string kind_name() const;

  friend bool operator==(const ActionSet&, const ActionSet&) = default;

 private:
  ActionSet(ActionSetVariant v, std::size_t n_vars, std::size_t L, double a_max)
      : variant_(std::move(v)), n_vars_(n_vars), L_(L), a_max_(a_max) {}

  ActionSetVariant variant_;
  std::size_t n_vars_;
  std::size_t L_;
  double a_max_;
};

// Observed values for an arm, aligned with arm.entries().
using Observation = std::vector<double>;

// Sum over the support of a_i * realization[i]. Realization values must lie
// in [0, 1] and have length N.
double reward_of(const ActionVector& arm, std::span<const double> realization);

// Per-variable sample means and observation counts: the whole memory of the
// LLR family of policies.
struct EstimatorState {
  std::vector<double> theta_hat;
  std::vector<std::uint64_t> m;
  std::uint64_t n = 0;

  EstimatorState() = default;
  explicit EstimatorState(std::size_t n_vars)
      : theta_hat(n_vars, 0.0), m(n_vars, 0), n(0) {}

  std::size_t n_vars() const { return theta_hat.size(); }
  bool initialized() const;
};

// Incremental-mean update over the arm's support. `observed` is aligned with
// arm.entries(). Throws ContractViolation for values outside [0, 1] or a size
// mismatch. Does not touch the period counter.
void update_estimates(EstimatorState& state, const ActionVector& arm,
                      std::span<const double> observed);

// Sparse map variant of the update; keys must equal the arm's support.
void update_estimates(EstimatorState& state, const ActionVector& arm,
                      const std::vector<std::pair<std::size_t, double>>& observed);

enum class Sense { kMaximize, kMinimize };

struct GroundTruth {
  std::vector<double> theta;
  Sense sense = Sense::kMaximize;
  double optimal_value = 0.0;
  ActionVector optimal_arm;
  std::optional<double> delta_min;
  std::optional<double> delta_max;

  // Pseudo-regret of playing `arm` for one period; tiny negative rounding
  // (below kTieTolerance) is reported as zero.
  double gap(const ActionVector& arm) const;
};

// Cumulative pseudo-regret sampled at checkpoint periods for one run.
struct RegretTrace {
  std::string policy_label;
  std::size_t run_index = 0;
  std::uint64_t run_seed = 0;
  std::uint64_t horizon = 0;
  std::vector<std::uint64_t> checkpoints;
  std::vector<double> cum_regret;
  std::vector<double> normalized;
  // Periods in which the oracle had to floor negative index weights.
  std::uint64_t floored_periods = 0;

  friend bool operator==(const RegretTrace&, const RegretTrace&) = default;
};

// cum / ln(period); zero when period < 2.
double normalize_regret(double cum_regret, std::uint64_t period);

}  // namespace llr

#endif  // LLR_CORE_MODEL_HPP_
