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
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "llr/errors.hpp"
#include "llr/ground_truth.hpp"
#include "llr/simulation.hpp"

namespace llr {

std::vector<std::uint64_t> default_checkpoints(std::uint64_t horizon) {
  std::vector<std::uint64_t> grid;
  for (double x = 1.0; x < static_cast<double>(horizon); x *= 1.25) {
    const auto t = static_cast<std::uint64_t>(std::llround(x));
    if (t >= 1 && t < horizon && (grid.empty() || grid.back() != t)) grid.push_back(t);
  }
  grid.push_back(horizon);
  return grid;
}

void ExperimentPlan::validate() const {
  const std::size_t n = actions.n_vars();
  if (environment.n_vars() != n) {
    throw ConfigurationError("environment has " + std::to_string(environment.n_vars()) +
                             " variables but the action set has " + std::to_string(n));
  }
  environment.validate();
  if (horizon < n + 1) {
    throw ConfigurationError("horizon " + std::to_string(horizon) +
                             " leaves no room after initialization (need >= N + 1 = " +
                             std::to_string(n + 1) + ")");
  }
  if (n_runs == 0) throw ConfigurationError("runs must be at least 1");
  if (policies.empty()) throw ConfigurationError("at least one policy is required");
  for (std::size_t k = 0; k < checkpoints.size(); ++k) {
    if (checkpoints[k] == 0 || checkpoints[k] > horizon) {
      throw ConfigurationError("checkpoint " + std::to_string(checkpoints[k]) +
                               " must lie in 1..horizon");
    }
    if (k > 0 && checkpoints[k] <= checkpoints[k - 1]) {
      throw ConfigurationError("checkpoints must be strictly increasing");
    }
  }
}

std::vector<std::uint64_t> ExperimentPlan::effective_checkpoints() const {
  return checkpoints.empty() ? default_checkpoints(horizon) : checkpoints;
}

GroundTruth truth_for(const ExperimentPlan& plan, const PolicyConfig& policy) {
  const std::vector<double> means = plan.environment.means();
  if (policy.kind == PolicyKind::kLLRK) {
    return certify_top_k(plan.actions, means, policy.K, plan.delta_limit);
  }
  return certify_ground_truth(plan.actions, means, policy.sense(), plan.delta_limit,
                              policy.oracle);
}

RegretTrace run_single(const ExperimentPlan& plan, const PolicyConfig& config,
                       const GroundTruth& truth, std::size_t run_index) {
  RegretTrace trace;
  trace.policy_label = config.label();
  trace.run_index = run_index;
  trace.run_seed = derive_seed(plan.master_seed, run_index);
  trace.horizon = plan.horizon;
  trace.checkpoints = plan.effective_checkpoints();

  EnvironmentSpec spec = plan.environment;
  spec.seed = trace.run_seed;
  const Environment env(std::move(spec));
  const bool multi = config.kind == PolicyKind::kLLRK;

  std::uint64_t t = 0;
  std::size_t next_cp = 0;
  double cum = 0.0;
  std::vector<Observation> obs(1);
  const auto account = [&](std::span<const ActionVector> arms) {
    double step;
    if (multi) {
      double value = 0.0;
      for (const auto& a : arms) value += a.dot(truth.theta);
      step = truth.optimal_value - value;
      if (step < kTieTolerance) step = 0.0;
    } else {
      step = truth.gap(arms[0]);
    }
    cum += step;
    while (next_cp < trace.checkpoints.size() && trace.checkpoints[next_cp] == t) {
      trace.cum_regret.push_back(cum);
      trace.normalized.push_back(normalize_regret(cum, t));
      ++next_cp;
    }
  };

  try {
    auto policy = make_policy(config, plan.actions);
    const auto schedule = policy->initialize();
    for (const ScheduledPlay& play : schedule) {
      if (t == plan.horizon) break;
      ++t;
      env.sample(t, play.arm, 0, obs[0]);
      policy->observe(t, std::span(&play.arm, 1), obs);
      account(std::span(&play.arm, 1));
    }
    while (t < plan.horizon) {
      ++t;
      const std::vector<ActionVector>& arms = policy->select(t);
      if (policy->last_floored() > 0) ++trace.floored_periods;
      obs.resize(arms.size());
      for (std::size_t k = 0; k < arms.size(); ++k) env.sample(t, arms[k], k, obs[k]);
      policy->observe(t, arms, obs);
      account(arms);
    }
  } catch (const SimulationError&) {
    throw;
  } catch (const std::exception& e) {
    throw SimulationError("policy " + trace.policy_label + ", run " +
                              std::to_string(run_index) + ", period " + std::to_string(t) +
                              ": " + e.what(),
                          run_index, t);
  }
  return trace;
}

std::vector<RegretTrace> run_experiment(const ExperimentPlan& plan) {
  plan.validate();
  std::vector<GroundTruth> truths;
  truths.reserve(plan.policies.size());
  for (const auto& p : plan.policies) truths.push_back(truth_for(plan, p));

  const std::size_t jobs = plan.policies.size() * plan.n_runs;
  std::vector<RegretTrace> traces(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  const auto work = [&](std::size_t job) {
    const std::size_t policy = job / plan.n_runs;
    const std::size_t run = job % plan.n_runs;
    try {
      traces[job] = run_single(plan, plan.policies[policy], truths[policy], run);
    } catch (...) {
      errors[job] = std::current_exception();
    }
  };

  if (plan.parallel && jobs > 1) {
    std::atomic<std::size_t> next{0};
    const std::size_t workers =
        std::min<std::size_t>(jobs, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t job = next++; job < jobs; job = next++) work(job);
      });
    }
  } else {
    for (std::size_t job = 0; job < jobs; ++job) work(job);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return traces;
}

}  // namespace llr
