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
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "llr/core_model.hpp"
#include "llr/environments.hpp"
#include "llr/errors.hpp"
#include "llr/ground_truth.hpp"
#include "llr/oracles.hpp"

namespace llr {
namespace {

TEST(ActionVectorTest, DropsZerosAndSortsEntries) {
  ActionVector a(5, {{3, 2.0}, {1, 0.0}, {0, 1.5}});
  EXPECT_EQ(a.support(), (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(a.coefficient(3), 2.0);
  EXPECT_EQ(a.coefficient(1), 0.0);
  EXPECT_TRUE(a.contains(0));
  EXPECT_FALSE(a.contains(1));
}

TEST(ActionVectorTest, RejectsBadEntries) {
  EXPECT_THROW(ActionVector(3, {{3, 1.0}}), ContractViolation);
  EXPECT_THROW(ActionVector(3, {{0, -1.0}}), ContractViolation);
  EXPECT_THROW(ActionVector(3, {{1, 1.0}, {1, 2.0}}), ContractViolation);
}

TEST(ActionVectorTest, SupportOrderIsLexicographic) {
  const std::vector<std::size_t> a{0, 5}, b{1, 2}, c{0, 5, 6};
  EXPECT_TRUE(ActionVector::support_less(ActionVector::incidence(8, a),
                                         ActionVector::incidence(8, b)));
  EXPECT_TRUE(ActionVector::support_less(ActionVector::incidence(8, a),
                                         ActionVector::incidence(8, c)));
  EXPECT_FALSE(ActionVector::support_less(ActionVector::incidence(8, c),
                                          ActionVector::incidence(8, a)));
}

TEST(RewardTest, SumsSelectedEntries) {
  const std::vector<std::size_t> idx{0, 2};
  const std::vector<double> x{0.3, 0.5, 0.9, 0.7};
  EXPECT_DOUBLE_EQ(reward_of(ActionVector::incidence(4, idx), x), 1.2);
}

TEST(RewardTest, EmptyArmIsZero) {
  const std::vector<double> x{0.3, 0.5};
  EXPECT_EQ(reward_of(ActionVector(2, {}), x), 0.0);
}

TEST(RewardTest, OptimalMatchingOfFourUserInstance) {
  const PaperInstance inst = paper_instance(PaperInstanceTag::kQ7M4);
  // (user, channel) 1-based: (1,3) (2,5) (3,1) (4,6)
  const std::vector<std::size_t> optimum{0 * 7 + 2, 1 * 7 + 4, 2 * 7 + 0, 3 * 7 + 5};
  const auto means = inst.environment.means();
  EXPECT_NEAR(reward_of(ActionVector::incidence(28, optimum), means), 3.1, 1e-12);
}

TEST(RewardTest, DimensionMismatchAndRange) {
  const std::vector<std::size_t> idx{0};
  const auto arm = ActionVector::incidence(3, idx);
  const std::vector<double> short_x{0.1, 0.2};
  const std::vector<double> bad_x{1.5, 0.2, 0.3};
  EXPECT_THROW(reward_of(arm, short_x), ContractViolation);
  EXPECT_THROW(reward_of(arm, bad_x), ContractViolation);
}

TEST(RewardTest, LinearInRealization) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  std::uniform_real_distribution<double> coef(0.1, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ActionVector::Entry> entries;
    for (std::size_t i = 0; i < 6; ++i) {
      if (rng() % 2) entries.push_back({i, coef(rng)});
    }
    const ActionVector a(6, entries);
    std::vector<double> x(6), y(6), sum(6);
    for (std::size_t i = 0; i < 6; ++i) {
      x[i] = u(rng);
      y[i] = u(rng);
      sum[i] = x[i] + y[i];
    }
    EXPECT_NEAR(reward_of(a, sum), reward_of(a, x) + reward_of(a, y), 1e-12);
  }
}

TEST(EstimatorTest, IncrementalMeanExamples) {
  EstimatorState s(5);
  s.theta_hat[3] = 0.5;
  s.m[3] = 4;
  const std::vector<std::pair<std::size_t, double>> obs{{3, 1.0}};
  update_estimates(s, ActionVector::unit(5, 3), obs);
  EXPECT_DOUBLE_EQ(s.theta_hat[3], 0.6);
  EXPECT_EQ(s.m[3], 5u);

  EstimatorState fresh(2);
  const std::vector<std::pair<std::size_t, double>> first{{0, 0.7}};
  update_estimates(fresh, ActionVector::unit(2, 0), first);
  EXPECT_EQ(fresh.theta_hat[0], 0.7);
  EXPECT_EQ(fresh.m[0], 1u);
  EXPECT_EQ(fresh.m[1], 0u);
  EXPECT_EQ(fresh.n, 0u);
}

TEST(EstimatorTest, RejectsInvalidObservations) {
  EstimatorState s(3);
  const std::vector<std::size_t> idx{0, 1};
  const auto arm = ActionVector::incidence(3, idx);
  const std::vector<std::pair<std::size_t, double>> outside{{0, 1.2}, {1, 0.5}};
  const std::vector<std::pair<std::size_t, double>> foreign{{0, 0.2}, {2, 0.5}};
  const std::vector<std::pair<std::size_t, double>> partial{{0, 0.2}};
  EXPECT_THROW(update_estimates(s, arm, outside), ContractViolation);
  EXPECT_THROW(update_estimates(s, arm, foreign), ContractViolation);
  EXPECT_THROW(update_estimates(s, arm, partial), ContractViolation);
  EXPECT_EQ(s.m[0], 0u);
}

// Batch-mean oracle: recompute every mean from the full log.
TEST(EstimatorTest, IncrementalEqualsBatchMean) {
  constexpr std::size_t kN = 6;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  EstimatorState s(kN);
  std::vector<std::vector<double>> log(kN);
  std::uint64_t total_observations = 0;
  for (int step = 0; step < 1000; ++step) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < kN; ++i) {
      if (rng() % 3 == 0) support.push_back(i);
    }
    const auto arm = ActionVector::incidence(kN, support);
    std::vector<double> obs;
    for (std::size_t i : support) {
      obs.push_back(u(rng));
      log[i].push_back(obs.back());
    }
    update_estimates(s, arm, obs);
    total_observations += support.size();
  }
  std::uint64_t counted = 0;
  for (std::size_t i = 0; i < kN; ++i) {
    double sum = 0.0;
    for (double x : log[i]) sum += x;
    ASSERT_EQ(s.m[i], log[i].size());
    EXPECT_NEAR(s.theta_hat[i], sum / static_cast<double>(log[i].size()), 1e-12);
    counted += s.m[i];
  }
  EXPECT_EQ(counted, total_observations);
}

TEST(GroundTruthTest, ExplicitDeltasMatchEnumeration) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ActionVector> arms;
    for (int k = 0; k < 8; ++k) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < 5; ++i) {
        if (rng() % 2) idx.push_back(i);
      }
      if (idx.empty()) idx.push_back(rng() % 5);
      arms.push_back(ActionVector::incidence(5, idx));
    }
    std::vector<double> theta(5);
    for (double& t : theta) t = u(rng);
    const ActionSet set = ActionSet::explicit_arms(arms);
    const GroundTruth truth = certify_ground_truth(set, theta, Sense::kMaximize, 100);

    double best = -1.0;
    for (const auto& a : arms) best = std::max(best, a.dot(theta));
    double lo = 1e9, hi = 0.0;
    for (const auto& a : arms) {
      const double d = best - a.dot(theta);
      if (d < kTieTolerance) continue;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    EXPECT_EQ(truth.optimal_value, best);
    if (hi > 0.0) {
      ASSERT_TRUE(truth.delta_min && truth.delta_max);
      EXPECT_EQ(*truth.delta_min, lo);
      EXPECT_EQ(*truth.delta_max, hi);
      EXPECT_GT(*truth.delta_min, 0.0);
      EXPECT_LE(*truth.delta_min, *truth.delta_max);
    }
  }
}

TEST(GroundTruthTest, GapIsNonNegative) {
  const PaperInstance inst = paper_instance(PaperInstanceTag::kQ7M4);
  const ActionSet all = enumerate_brute_force(inst.actions, 1000);
  for (const auto& a : std::get<ExplicitArms>(all.variant()).arms) {
    EXPECT_GE(inst.truth.gap(a), 0.0);
  }
  EXPECT_EQ(inst.truth.gap(inst.truth.optimal_arm), 0.0);
}

TEST(RegretTraceTest, NormalizationDividesByLog) {
  EXPECT_EQ(normalize_regret(5.0, 1), 0.0);
  EXPECT_DOUBLE_EQ(normalize_regret(10.0, 100), 10.0 / std::log(100.0));
}

}  // namespace
}  // namespace llr
