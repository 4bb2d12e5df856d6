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

#ifndef LLR_ENVIRONMENTS_HPP_
#define LLR_ENVIRONMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "llr/core_model.hpp"

namespace llr {

struct Bernoulli {
  double p;
  friend bool operator==(const Bernoulli&, const Bernoulli&) = default;
};
struct Uniform {
  double lo;
  double hi;
  friend bool operator==(const Uniform&, const Uniform&) = default;
};
struct Fixed {
  double value;
  friend bool operator==(const Fixed&, const Fixed&) = default;
};

using Distribution = std::variant<Bernoulli, Uniform, Fixed>;

double mean_of(const Distribution& d);

struct EnvironmentSpec {
  std::vector<Distribution> distributions;
  std::uint64_t seed = 0;

  std::size_t n_vars() const { return distributions.size(); }
  std::vector<double> means() const;
  // Throws ConfigurationError if some support leaves [0, 1].
  void validate() const;

  friend bool operator==(const EnvironmentSpec&, const EnvironmentSpec&) = default;
};

// splitmix64 finalizer; also used to derive per-run seeds.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// Counter-based sampler: the draw for (variable, period, draw) is a pure
// function of the seed, so variables never share or perturb a stream.
class Environment {
 public:
  explicit Environment(EnvironmentSpec spec);

  std::size_t n_vars() const { return spec_.n_vars(); }
  const EnvironmentSpec& spec() const { return spec_; }

  double draw(std::size_t var, std::uint64_t period, std::uint64_t draw_index = 0) const;

  // One draw per entry of the arm's support, aligned with arm.entries().
  // `draw_index` separates repeated draws of a variable within one period.
  void sample(std::uint64_t period, const ActionVector& arm, std::uint64_t draw_index,
              Observation& out) const;

  // Keyed form: one draw per requested index.
  std::vector<std::pair<std::size_t, double>> sample(
      std::uint64_t period, std::span<const std::size_t> support,
      std::uint64_t draw_index = 0) const;

 private:
  EnvironmentSpec spec_;
};

enum class PaperInstanceTag { kQ7M4, kQ9M5 };

struct PaperInstance {
  std::string name;
  EnvironmentSpec environment;
  ActionSet actions;
  GroundTruth truth;
};

// The two channel-allocation instances (4 users x 7 channels and 5 users x
// 9 channels) with Bernoulli means, flattened row-major by user. The optimum
// is certified by the matching oracle at load time.
PaperInstance paper_instance(PaperInstanceTag which, std::uint64_t seed = 0);
PaperInstanceTag parse_paper_tag(const std::string& tag);

}  // namespace llr

#endif  // LLR_ENVIRONMENTS_HPP_
