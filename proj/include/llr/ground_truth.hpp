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

#ifndef LLR_GROUND_TRUTH_HPP_
#define LLR_GROUND_TRUTH_HPP_

#include <cstddef>
#include <span>

#include "llr/core_model.hpp"
#include "llr/oracles.hpp"

namespace llr {

// Runs the exact oracle on the true means to fix the optimal value and arm.
// When F can be enumerated within `delta_limit` arms, delta_min / delta_max
// are filled in as well (gaps below kTieTolerance count as optimal).
GroundTruth certify_ground_truth(const ActionSet& problem, std::span<const double> theta,
                                 Sense sense, std::size_t delta_limit = 0,
                                 const OracleOptions& options = {});

// Genie for K simultaneous arms on an explicit set: optimal_value is the sum
// of the K best expected rewards. Gaps are taken over all K-subsets when
// there are at most `delta_limit` of them.
GroundTruth certify_top_k(const ActionSet& problem, std::span<const double> theta,
                          std::size_t K, std::size_t delta_limit = 0);

}  // namespace llr

#endif  // LLR_GROUND_TRUTH_HPP_
