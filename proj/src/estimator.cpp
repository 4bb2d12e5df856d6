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
#include <string>

#include "llr/core_model.hpp"
#include "llr/errors.hpp"

namespace llr {

bool EstimatorState::initialized() const {
  return std::all_of(m.begin(), m.end(), [](std::uint64_t c) { return c > 0; });
}

void update_estimates(EstimatorState& state, const ActionVector& arm,
                      std::span<const double> observed) {
  const auto& entries = arm.entries();
  if (observed.size() != entries.size()) {
    throw ContractViolation("observation count " + std::to_string(observed.size()) +
                            " does not match arm support size " +
                            std::to_string(entries.size()));
  }
  if (arm.n_vars() != state.n_vars()) {
    throw ContractViolation("arm and estimator disagree on N");
  }
  for (double x : observed) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw ContractViolation("observation " + std::to_string(x) + " outside [0, 1]");
    }
  }
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::size_t i = entries[k].index;
    const auto count = static_cast<double>(state.m[i]);
    state.theta_hat[i] = (state.theta_hat[i] * count + observed[k]) / (count + 1.0);
    ++state.m[i];
  }
}

void update_estimates(EstimatorState& state, const ActionVector& arm,
                      const std::vector<std::pair<std::size_t, double>>& observed) {
  const auto& entries = arm.entries();
  std::vector<double> aligned(entries.size());
  std::vector<bool> filled(entries.size(), false);
  for (const auto& [index, value] : observed) {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), index,
        [](const ActionVector::Entry& e, std::size_t i) { return e.index < i; });
    if (it == entries.end() || it->index != index) {
      throw ContractViolation("observed index " + std::to_string(index) +
                              " is not in the arm's support");
    }
    const auto k = static_cast<std::size_t>(it - entries.begin());
    if (filled[k]) {
      throw ContractViolation("index " + std::to_string(index) + " observed twice");
    }
    filled[k] = true;
    aligned[k] = value;
  }
  if (std::find(filled.begin(), filled.end(), false) != filled.end()) {
    throw ContractViolation("observation does not cover the arm's support");
  }
  update_estimates(state, arm, aligned);
}

}  // namespace llr
