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

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

#include "llr/environments.hpp"
#include "llr/errors.hpp"
#include "llr/ground_truth.hpp"

namespace llr {

namespace {

// Rows are users, columns are channels.
constexpr std::array<double, 4 * 7> kMeans4x7 = {
    0.3, 0.5, 0.9, 0.7, 0.8, 0.9, 0.6,  //
    0.2, 0.2, 0.3, 0.4, 0.5, 0.4, 0.5,  //
    0.8, 0.6, 0.5, 0.4, 0.7, 0.2, 0.8,  //
    0.9, 0.2, 0.2, 0.8, 0.3, 0.9, 0.6,
};

constexpr std::array<double, 5 * 9> kMeans5x9 = {
    0.3, 0.5, 0.9, 0.7, 0.8, 0.9, 0.6, 0.8, 0.7,  //
    0.2, 0.2, 0.3, 0.4, 0.5, 0.4, 0.5, 0.6, 0.9,  //
    0.8, 0.6, 0.5, 0.4, 0.7, 0.2, 0.8, 0.2, 0.8,  //
    0.9, 0.2, 0.2, 0.8, 0.3, 0.9, 0.6, 0.5, 0.4,  //
    0.6, 0.7, 0.5, 0.7, 0.6, 0.8, 0.2, 0.6, 0.8,
};

PaperInstance build(std::string name, std::size_t users, std::size_t channels,
                    std::span<const double> means, double expected_optimum,
                    std::uint64_t seed) {
  PaperInstance inst{std::move(name), {}, ActionSet::bipartite(users, channels), {}};
  inst.environment.seed = seed;
  for (double p : means) inst.environment.distributions.emplace_back(Bernoulli{p});
  inst.truth = certify_ground_truth(inst.actions, means, Sense::kMaximize, 20'000);
  if (std::abs(inst.truth.optimal_value - expected_optimum) > 1e-9) {
    throw std::logic_error("built-in instance " + inst.name + " certifies optimum " +
                           std::to_string(inst.truth.optimal_value));
  }
  return inst;
}

}  // namespace

PaperInstance paper_instance(PaperInstanceTag which, std::uint64_t seed) {
  if (which == PaperInstanceTag::kQ7M4) return build("q7m4", 4, 7, kMeans4x7, 3.1, seed);
  return build("q9m5", 5, 9, kMeans5x9, 4.3, seed);
}

PaperInstanceTag parse_paper_tag(const std::string& tag) {
  if (tag == "q7m4") return PaperInstanceTag::kQ7M4;
  if (tag == "q9m5") return PaperInstanceTag::kQ9M5;
  throw ConfigurationError("unknown built-in instance '" + tag + "' (expected q7m4 or q9m5)");
}

}  // namespace llr
