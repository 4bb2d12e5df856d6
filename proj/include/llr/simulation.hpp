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

#ifndef LLR_SIMULATION_HPP_
#define LLR_SIMULATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "llr/core_model.hpp"
#include "llr/environments.hpp"
#include "llr/policies.hpp"

namespace llr {

struct ExperimentPlan {
  std::string instance_name;
  EnvironmentSpec environment;  // seed is replaced per run
  ActionSet actions = ActionSet::bipartite(1, 1);
  std::vector<PolicyConfig> policies;
  std::uint64_t horizon = 0;
  std::size_t n_runs = 1;
  std::vector<std::uint64_t> checkpoints;  // empty -> default_checkpoints(horizon)
  std::uint64_t master_seed = 0;
  bool parallel = false;
  // Enumeration cap used when certifying gaps.
  std::size_t delta_limit = 20'000;

  // Throws ConfigurationError describing the first violated constraint.
  void validate() const;
  std::vector<std::uint64_t> effective_checkpoints() const;

  friend bool operator==(const ExperimentPlan&, const ExperimentPlan&) = default;
};

// Rounded powers of 1.25 (deduplicated) up to the horizon, plus the horizon.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t horizon);

// Ground truth for one policy's objective (max, min, or top-K genie).
GroundTruth truth_for(const ExperimentPlan& plan, const PolicyConfig& policy);

// Executes warm-up and the main loop for one (policy, run) pair.
RegretTrace run_single(const ExperimentPlan& plan, const PolicyConfig& policy,
                       const GroundTruth& truth, std::size_t run_index);

// All policies x runs, ordered by policy then run index. Failures are
// re-thrown as SimulationError carrying the run and period.
std::vector<RegretTrace> run_experiment(const ExperimentPlan& plan);

// Closed-form regret ceilings.
struct BoundParams {
  double N = 0;
  double L = 0;
  double a_max = 0;
  double delta_min = 0;
  double delta_max = 0;
  std::optional<double> K;
};

// Ceiling for UCB1 run over the arms directly; `gaps` lists Delta_k of the
// suboptimal arms.
double theorem1_bound(std::span<const double> gaps, double n);
// Ceiling for LLR / LLC.
double theorem2_bound(const BoundParams& p, double n);
// Ceiling for LLR-K (p.K required).
double theorem3_bound(const BoundParams& p, double n);

struct SummaryRow {
  std::string policy;
  std::string instance;
  std::uint64_t checkpoint = 0;
  double mean = 0;
  double sd = 0;
  double min = 0;
  double max = 0;
};

struct PolicySummary {
  std::string policy;
  std::size_t runs = 0;
  std::vector<SummaryRow> rows;
  double final_normalized_mean = 0;
};

// Across-run statistics per policy at each checkpoint (sd is the sample
// standard deviation, zero for a single run). Policy order follows first
// appearance in `traces`.
std::vector<PolicySummary> summarize(std::span<const RegretTrace> traces,
                                     const std::string& instance);

// Mean cumulative regret series per checkpoint for one policy label.
std::vector<double> mean_series(std::span<const RegretTrace> traces, const std::string& policy);

}  // namespace llr

#endif  // LLR_SIMULATION_HPP_
