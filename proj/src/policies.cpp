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
#include <limits>
#include <string>

#include "llr/errors.hpp"
#include "llr/policies.hpp"

namespace llr {

std::string PolicyConfig::label() const {
  switch (kind) {
    case PolicyKind::kLLR:
      return "LLR";
    case PolicyKind::kLLC:
      return "LLC";
    case PolicyKind::kLLRK:
      return "LLR-K" + std::to_string(K);
    case PolicyKind::kNaiveUCB1:
      return "NaiveUCB1";
  }
  return "unknown";
}

namespace {

std::vector<double> confidence_index(const EstimatorState& state, std::size_t L,
                                     double sign) {
  if (L == 0) throw ContractViolation("L must be positive");
  if (state.n == 0) throw ContractViolation("period index must be at least 1");
  const double scale = static_cast<double>(L + 1) * std::log(static_cast<double>(state.n));
  std::vector<double> w(state.n_vars());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (state.m[i] == 0) {
      throw InitializationIncomplete("variable " + std::to_string(i) +
                                     " has never been observed");
    }
    w[i] = state.theta_hat[i] + sign * std::sqrt(scale / static_cast<double>(state.m[i]));
  }
  return w;
}

// Arm containing `target` that covers the most still-unobserved variables.
ActionVector cover_arm(const ActionSet& problem, std::size_t target,
                       const std::vector<char>& observed, const OracleOptions& oracle) {
  const std::size_t n = problem.n_vars();
  const auto dead = [&] {
    return ConfigurationError("dead variable " + std::to_string(target) +
                              ": no arm of the action set contains it");
  };
  if (const auto* set = std::get_if<ExplicitArms>(&problem.variant())) {
    const ActionVector* best = nullptr;
    std::size_t best_cover = 0;
    for (const ActionVector& arm : set->arms) {
      if (!arm.contains(target)) continue;
      std::size_t cover = 0;
      for (const auto& e : arm.entries()) cover += observed[e.index] ? 0 : 1;
      if (best == nullptr || cover > best_cover) {
        best = &arm;
        best_cover = cover;
      }
    }
    if (best == nullptr) throw dead();
    return *best;
  }
  // 0/1 arms: a bonus larger than any coverage forces the target in.
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = observed[i] ? 0.0 : 1.0;
  w[target] = static_cast<double>(n + 1);
  ActionVector arm = solve_max(problem, w, oracle).arm;
  if (!arm.contains(target)) throw dead();
  return arm;
}

}  // namespace

std::vector<double> llr_index(const EstimatorState& state, std::size_t L) {
  return confidence_index(state, L, 1.0);
}

std::vector<double> llc_index(const EstimatorState& state, std::size_t L) {
  return confidence_index(state, L, -1.0);
}

std::vector<ScheduledPlay> initialization_schedule(const ActionSet& problem, InitMode mode,
                                                   const OracleOptions& oracle,
                                                   std::size_t enumerate_limit) {
  // Paths have no polynomial max oracle; cover from the enumerated list.
  const ActionSet cover_set = std::holds_alternative<SourceDestPaths>(problem.variant())
                                  ? enumerate_brute_force(problem, enumerate_limit)
                                  : problem;
  const std::size_t n = problem.n_vars();
  std::vector<char> observed(n, 0);
  std::vector<ScheduledPlay> schedule;
  for (std::size_t p = 0; p < n; ++p) {
    if (mode == InitMode::kGreedy && observed[p]) continue;
    ActionVector arm = cover_arm(cover_set, p, observed, oracle);
    for (const auto& e : arm.entries()) observed[e.index] = 1;
    schedule.push_back({schedule.size() + 1, std::move(arm)});
  }
  return schedule;
}

IndexPolicy::IndexPolicy(PolicyConfig config, ActionSet problem)
    : Policy(std::move(config)),
      problem_(std::move(problem)),
      L_(config_.exploration_L.value_or(problem_.L())),
      state_(problem_.n_vars()) {
  if (config_.kind == PolicyKind::kNaiveUCB1) {
    throw ConfigurationError("IndexPolicy cannot run NaiveUCB1");
  }
  if (L_ == 0) throw ConfigurationError("exploration L must be positive");
  if (config_.kind == PolicyKind::kLLRK) {
    if (config_.K == 0) throw ConfigurationError("LLR-K requires K >= 1");
    if (!std::holds_alternative<ExplicitArms>(problem_.variant())) {
      throw UnsupportedVariantError("LLR-K requires an explicit action set");
    }
    const auto& arms = std::get<ExplicitArms>(problem_.variant()).arms;
    if (config_.K > arms.size()) {
      throw ConfigurationError("LLR-K with K = " + std::to_string(config_.K) +
                               " exceeds |F| = " + std::to_string(arms.size()));
    }
  }
}

std::vector<ScheduledPlay> IndexPolicy::initialize() {
  state_ = EstimatorState(problem_.n_vars());
  return initialization_schedule(problem_, config_.init, config_.oracle,
                                 config_.enumerate_limit);
}

const std::vector<ActionVector>& IndexPolicy::select(std::uint64_t n) {
  state_.n = n;
  chosen_.clear();
  last_floored_ = 0;
  switch (config_.kind) {
    case PolicyKind::kLLR:
      chosen_.push_back(solve_max(problem_, llr_index(state_, L_), config_.oracle).arm);
      break;
    case PolicyKind::kLLC: {
      OracleSolution s = solve_min(problem_, llc_index(state_, L_), config_.oracle);
      last_floored_ = s.floored_weights;
      chosen_.push_back(std::move(s.arm));
      break;
    }
    case PolicyKind::kLLRK:
      for (auto& s : solve_top_k(problem_, llr_index(state_, L_), config_.K)) {
        chosen_.push_back(std::move(s.arm));
      }
      break;
    case PolicyKind::kNaiveUCB1:
      break;
  }
  return chosen_;
}

void IndexPolicy::observe(std::uint64_t n, std::span<const ActionVector> arms,
                          std::span<const Observation> observations) {
  if (arms.size() != observations.size()) {
    throw ContractViolation("one observation vector is required per played arm");
  }
  state_.n = n;
  for (std::size_t k = 0; k < arms.size(); ++k) {
    update_estimates(state_, arms[k], observations[k]);
  }
}

void naive_update(NaiveState& state, std::size_t arm, double reward) {
  if (arm >= state.y_hat.size()) {
    throw ContractViolation("arm index " + std::to_string(arm) + " out of range");
  }
  const auto count = static_cast<double>(state.m_arm[arm]);
  state.y_hat[arm] = (state.y_hat[arm] * count + reward) / (count + 1.0);
  ++state.m_arm[arm];
}

NaiveUcb1Policy::NaiveUcb1Policy(PolicyConfig config, const ActionSet& problem)
    : Policy(std::move(config)) {
  const ActionSet all = enumerate_brute_force(problem, config_.enumerate_limit);
  arms_ = std::get<ExplicitArms>(all.variant()).arms;
  state_ = NaiveState(arms_.size());
}

std::vector<ScheduledPlay> NaiveUcb1Policy::initialize() {
  state_ = NaiveState(arms_.size());
  buckets_.clear();
  next_scheduled_ = 0;
  std::vector<ScheduledPlay> schedule;
  schedule.reserve(arms_.size());
  for (std::size_t k = 0; k < arms_.size(); ++k) schedule.push_back({k + 1, arms_[k]});
  return schedule;
}

std::size_t NaiveUcb1Policy::best_arm(std::uint64_t n) const {
  if (buckets_.empty() || buckets_.begin()->first == 0 || next_scheduled_ < arms_.size()) {
    throw InitializationIncomplete("every arm must be played once before UCB1 selection");
  }
  const double log_n = std::log(static_cast<double>(n));
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& [m, bucket] : buckets_) {
    const double top = -bucket.begin()->first + std::sqrt(2.0 * log_n / static_cast<double>(m));
    best = std::max(best, top);
  }
  const double threshold = best - kTieTolerance;
  std::size_t winner = std::numeric_limits<std::size_t>::max();
  for (const auto& [m, bucket] : buckets_) {
    const double bonus = std::sqrt(2.0 * log_n / static_cast<double>(m));
    for (const auto& [neg_y, k] : bucket) {
      if (-neg_y + bonus < threshold) break;
      winner = std::min(winner, k);
    }
  }
  return winner;
}

const std::vector<ActionVector>& NaiveUcb1Policy::select(std::uint64_t n) {
  state_.n = n;
  pending_ = best_arm(n);
  chosen_.assign(1, arms_[pending_]);
  return chosen_;
}

void NaiveUcb1Policy::move_to_bucket(std::size_t arm, std::uint64_t old_m) {
  if (old_m > 0) {
    auto it = buckets_.find(old_m);
    it->second.erase({-state_.y_hat[arm], arm});
    if (it->second.empty()) buckets_.erase(it);
  }
}

void NaiveUcb1Policy::observe(std::uint64_t n, std::span<const ActionVector> arms,
                              std::span<const Observation> observations) {
  if (arms.size() != 1 || observations.size() != 1) {
    throw ContractViolation("NaiveUCB1 plays exactly one arm per period");
  }
  const std::size_t k = next_scheduled_ < arms_.size() ? next_scheduled_++ : pending_;
  if (!(arms[0] == arms_[k])) throw ContractViolation("observed arm is not the one scheduled");
  double reward = 0.0;
  const auto& entries = arms[0].entries();
  if (observations[0].size() != entries.size()) {
    throw ContractViolation("observation does not match the arm's support");
  }
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const double x = observations[0][j];
    if (!(x >= 0.0 && x <= 1.0)) throw ContractViolation("observation outside [0, 1]");
    reward += entries[j].weight * x;
  }
  state_.n = n;
  move_to_bucket(k, state_.m_arm[k]);
  naive_update(state_, k, reward);
  buckets_[state_.m_arm[k]].insert({-state_.y_hat[k], k});
}

std::unique_ptr<Policy> make_policy(const PolicyConfig& config, const ActionSet& problem) {
  if (config.kind == PolicyKind::kNaiveUCB1) {
    return std::make_unique<NaiveUcb1Policy>(config, problem);
  }
  return std::make_unique<IndexPolicy>(config, problem);
}

}  // namespace llr
