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

#ifndef LLR_POLICIES_HPP_
#define LLR_POLICIES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "llr/core_model.hpp"
#include "llr/oracles.hpp"

namespace llr {

enum class PolicyKind { kLLR, kLLC, kLLRK, kNaiveUCB1 };

enum class InitMode {
  // One period per variable p, each playing an arm that contains p.
  kLiteral,
  // Stop as soon as every variable has been observed once.
  kGreedy,
};

struct PolicyConfig {
  PolicyKind kind = PolicyKind::kLLR;
  std::size_t K = 1;                          // LLR-K only
  std::optional<std::size_t> exploration_L;   // defaults to ActionSet::L()
  InitMode init = InitMode::kLiteral;
  OracleOptions oracle;
  std::size_t enumerate_limit = 1'000'000;    // NaiveUCB1 / path cover enumeration

  std::string label() const;
  Sense sense() const {
    return kind == PolicyKind::kLLC ? Sense::kMinimize : Sense::kMaximize;
  }
  friend bool operator==(const PolicyConfig&, const PolicyConfig&) = default;
};

// theta_hat[i] + sqrt((L + 1) ln n / m[i]). Throws InitializationIncomplete
// if any m[i] == 0.
std::vector<double> llr_index(const EstimatorState& state, std::size_t L);
// theta_hat[i] - sqrt((L + 1) ln n / m[i]); may be negative.
std::vector<double> llc_index(const EstimatorState& state, std::size_t L);

struct ScheduledPlay {
  std::uint64_t period;
  ActionVector arm;
};

// Warm-up schedule whose supports cover every variable. Each step plays the
// arm that contains the target variable and covers the most unobserved
// variables. Throws ConfigurationError naming a variable no arm contains.
std::vector<ScheduledPlay> initialization_schedule(const ActionSet& problem, InitMode mode,
                                                   const OracleOptions& oracle = {},
                                                   std::size_t enumerate_limit = 1'000'000);

// Sequential decision interface shared by all policies. Per period the
// caller either plays the next scheduled warm-up arm or calls select(); in
// both cases it then reports the observations with observe().
class Policy {
 public:
  virtual ~Policy() = default;

  // Resets all statistics and returns the warm-up schedule.
  virtual std::vector<ScheduledPlay> initialize() = 0;
  virtual const std::vector<ActionVector>& select(std::uint64_t n) = 0;
  // `observations[k]` is aligned with `arms[k].entries()`.
  virtual void observe(std::uint64_t n, std::span<const ActionVector> arms,
                       std::span<const Observation> observations) = 0;

  // Count of stored statistics (sample means plus counters).
  virtual std::size_t state_footprint() const = 0;
  // Negative index weights floored by the oracle during the last select().
  virtual std::size_t last_floored() const { return 0; }

  const PolicyConfig& config() const { return config_; }

 protected:
  explicit Policy(PolicyConfig config) : config_(std::move(config)) {}
  PolicyConfig config_;
};

// LLR, LLC and LLR-K: statistics are kept per variable only.
class IndexPolicy final : public Policy {
 public:
  IndexPolicy(PolicyConfig config, ActionSet problem);

  std::vector<ScheduledPlay> initialize() override;
  const std::vector<ActionVector>& select(std::uint64_t n) override;
  void observe(std::uint64_t n, std::span<const ActionVector> arms,
               std::span<const Observation> observations) override;
  std::size_t state_footprint() const override {
    return state_.theta_hat.size() + state_.m.size();
  }
  std::size_t last_floored() const override { return last_floored_; }

  const EstimatorState& state() const { return state_; }
  std::size_t L() const { return L_; }

 private:
  ActionSet problem_;
  std::size_t L_;
  EstimatorState state_;
  std::vector<ActionVector> chosen_;
  std::size_t last_floored_ = 0;
};

struct NaiveState {
  std::vector<double> y_hat;
  std::vector<std::uint64_t> m_arm;
  std::uint64_t n = 0;

  NaiveState() = default;
  explicit NaiveState(std::size_t n_arms) : y_hat(n_arms, 0.0), m_arm(n_arms, 0) {}
};

// Incremental mean of the total reward on arm k.
void naive_update(NaiveState& state, std::size_t arm, double reward);

// UCB1 over the enumerated arms of F, treating each arm independently.
class NaiveUcb1Policy final : public Policy {
 public:
  NaiveUcb1Policy(PolicyConfig config, const ActionSet& problem);

  std::vector<ScheduledPlay> initialize() override;
  const std::vector<ActionVector>& select(std::uint64_t n) override;
  void observe(std::uint64_t n, std::span<const ActionVector> arms,
               std::span<const Observation> observations) override;
  std::size_t state_footprint() const override {
    return state_.y_hat.size() + state_.m_arm.size();
  }

  const NaiveState& state() const { return state_; }
  const std::vector<ActionVector>& arms() const { return arms_; }
  // Index of the arm maximizing y_hat + sqrt(2 ln n / m); ties within
  // kTieTolerance go to the lowest arm index.
  std::size_t best_arm(std::uint64_t n) const;

 private:
  void move_to_bucket(std::size_t arm, std::uint64_t old_m);

  std::vector<ActionVector> arms_;
  NaiveState state_;
  // Arms bucketed by play count; within a bucket all bonuses are equal, so
  // only the largest means can win. Ordered by (-y_hat, index).
  std::map<std::uint64_t, std::set<std::pair<double, std::size_t>>> buckets_;
  std::size_t next_scheduled_ = 0;
  std::size_t pending_ = 0;
  std::vector<ActionVector> chosen_;
};

std::unique_ptr<Policy> make_policy(const PolicyConfig& config, const ActionSet& problem);

}  // namespace llr

#endif  // LLR_POLICIES_HPP_
