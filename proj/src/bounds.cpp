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

#include <cmath>
#include <numbers>
#include <string>

#include "llr/errors.hpp"
#include "llr/simulation.hpp"

namespace llr {

namespace {

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw ContractViolation(std::string(name) + " must be positive");
  }
}

double constant_term(const BoundParams& p, double k_factor) {
  return p.N + std::numbers::pi * std::numbers::pi / 3.0 * p.L * k_factor * p.N;
}

double log_term(const BoundParams& p, double n) {
  return 4.0 * p.a_max * p.a_max * p.L * p.L * (p.L + 1.0) * p.N * std::log(n) /
         (p.delta_min * p.delta_min);
}

void check(const BoundParams& p, double n) {
  require_positive(p.N, "N");
  require_positive(p.L, "L");
  require_positive(p.a_max, "a_max");
  require_positive(p.delta_min, "delta_min");
  require_positive(p.delta_max, "delta_max");
  if (!(n >= 1.0)) throw ContractViolation("n must be at least 1");
}

}  // namespace

double theorem1_bound(std::span<const double> gaps, double n) {
  if (!(n >= 1.0)) throw ContractViolation("n must be at least 1");
  double log_sum = 0.0;
  double gap_sum = 0.0;
  for (double d : gaps) {
    require_positive(d, "every suboptimal gap");
    log_sum += std::log(n) / d;
    gap_sum += d;
  }
  return 8.0 * log_sum + (1.0 + std::numbers::pi * std::numbers::pi / 3.0) * gap_sum;
}

double theorem2_bound(const BoundParams& p, double n) {
  check(p, n);
  return (log_term(p, n) + constant_term(p, 1.0)) * p.delta_max;
}

double theorem3_bound(const BoundParams& p, double n) {
  check(p, n);
  if (!p.K) throw ContractViolation("K is required for the K-arm bound");
  require_positive(*p.K, "K");
  return (log_term(p, n) + constant_term(p, std::pow(*p.K, 2.0 * p.L))) * p.delta_max;
}

}  // namespace llr
