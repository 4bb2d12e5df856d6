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
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "llr/errors.hpp"
#include "llr/ground_truth.hpp"

namespace llr {

double GroundTruth::gap(const ActionVector& arm) const {
  const double value = arm.dot(theta);
  const double d = sense == Sense::kMaximize ? optimal_value - value : value - optimal_value;
  return d < kTieTolerance ? 0.0 : d;
}

namespace {

void fill_deltas(GroundTruth& truth, const std::vector<double>& values) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double value : values) {
    const double d = truth.sense == Sense::kMaximize ? truth.optimal_value - value
                                                     : value - truth.optimal_value;
    if (d < kTieTolerance) continue;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  if (hi > 0.0) {
    truth.delta_min = lo;
    truth.delta_max = hi;
  }
}

}  // namespace

GroundTruth certify_ground_truth(const ActionSet& problem, std::span<const double> theta,
                                 Sense sense, std::size_t delta_limit,
                                 const OracleOptions& options) {
  if (theta.size() != problem.n_vars()) {
    throw ContractViolation("mean vector length does not match N");
  }
  GroundTruth truth;
  truth.theta.assign(theta.begin(), theta.end());
  truth.sense = sense;
  const OracleSolution best = sense == Sense::kMaximize ? solve_max(problem, theta, options)
                                                        : solve_min(problem, theta, options);
  truth.optimal_arm = best.arm;
  truth.optimal_value = best.arm.dot(theta);
  if (delta_limit == 0) return truth;
  try {
    const ActionSet all = enumerate_brute_force(problem, delta_limit);
    const auto& arms = std::get<ExplicitArms>(all.variant()).arms;
    std::vector<double> values;
    values.reserve(arms.size());
    for (const auto& a : arms) values.push_back(a.dot(theta));
    fill_deltas(truth, values);
  } catch (const SizeLimitError&) {
    // F too large: gaps stay unknown.
  }
  return truth;
}

GroundTruth certify_top_k(const ActionSet& problem, std::span<const double> theta,
                          std::size_t K, std::size_t delta_limit) {
  const auto best = solve_top_k(problem, theta, K);
  GroundTruth truth;
  truth.theta.assign(theta.begin(), theta.end());
  truth.sense = Sense::kMaximize;
  truth.optimal_arm = best.front().arm;
  for (const auto& s : best) truth.optimal_value += s.arm.dot(theta);
  if (delta_limit == 0) return truth;

  const auto& arms = std::get<ExplicitArms>(problem.variant()).arms;
  std::vector<double> arm_value;
  arm_value.reserve(arms.size());
  for (const auto& a : arms) arm_value.push_back(a.dot(theta));

  // Walk all K-subsets unless there are too many.
  std::vector<double> values;
  std::vector<std::size_t> pick;
  bool too_many = false;
  std::function<void(std::size_t, double)> walk = [&](std::size_t from, double sum) {
    if (too_many) return;
    if (pick.size() == K) {
      if (values.size() == delta_limit) {
        too_many = true;
        return;
      }
      values.push_back(sum);
      return;
    }
    for (std::size_t k = from; k + (K - pick.size()) <= arms.size(); ++k) {
      pick.push_back(k);
      walk(k + 1, sum + arm_value[k]);
      pick.pop_back();
    }
  };
  walk(0, 0.0);
  if (!too_many) fill_deltas(truth, values);
  return truth;
}

}  // namespace llr
