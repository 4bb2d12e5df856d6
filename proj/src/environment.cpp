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

#include <string>

#include "llr/environments.hpp"
#include "llr/errors.hpp"

namespace llr {

double mean_of(const Distribution& d) {
  if (const auto* b = std::get_if<Bernoulli>(&d)) return b->p;
  if (const auto* u = std::get_if<Uniform>(&d)) return 0.5 * (u->lo + u->hi);
  return std::get<Fixed>(d).value;
}

std::vector<double> EnvironmentSpec::means() const {
  std::vector<double> out;
  out.reserve(distributions.size());
  for (const auto& d : distributions) out.push_back(mean_of(d));
  return out;
}

void EnvironmentSpec::validate() const {
  const auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  for (std::size_t i = 0; i < distributions.size(); ++i) {
    const auto& d = distributions[i];
    bool ok = true;
    if (const auto* b = std::get_if<Bernoulli>(&d)) ok = in_unit(b->p);
    if (const auto* u = std::get_if<Uniform>(&d)) ok = in_unit(u->lo) && in_unit(u->hi) && u->lo <= u->hi;
    if (const auto* f = std::get_if<Fixed>(&d)) ok = in_unit(f->value);
    if (!ok) {
      throw ConfigurationError("distribution of variable " + std::to_string(i) +
                               " does not have support inside [0, 1]");
    }
  }
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64(master ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

Environment::Environment(EnvironmentSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
}

double Environment::draw(std::size_t var, std::uint64_t period,
                         std::uint64_t draw_index) const {
  if (var >= spec_.n_vars()) {
    throw ContractViolation("variable " + std::to_string(var) + " out of range");
  }
  std::uint64_t h = mix64(spec_.seed ^ mix64(var));
  h = mix64(h ^ period);
  h = mix64(h ^ draw_index);
  // 53 random bits -> [0, 1)
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  const auto& d = spec_.distributions[var];
  if (const auto* b = std::get_if<Bernoulli>(&d)) return u < b->p ? 1.0 : 0.0;
  if (const auto* un = std::get_if<Uniform>(&d)) return un->lo + (un->hi - un->lo) * u;
  return std::get<Fixed>(d).value;
}

void Environment::sample(std::uint64_t period, const ActionVector& arm,
                         std::uint64_t draw_index, Observation& out) const {
  const auto& entries = arm.entries();
  out.resize(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    out[k] = draw(entries[k].index, period, draw_index);
  }
}

std::vector<std::pair<std::size_t, double>> Environment::sample(
    std::uint64_t period, std::span<const std::size_t> support,
    std::uint64_t draw_index) const {
  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(support.size());
  for (std::size_t i : support) out.emplace_back(i, draw(i, period, draw_index));
  return out;
}

}  // namespace llr
