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

#ifndef LLR_ERRORS_HPP_
#define LLR_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace llr {

// A caller broke a documented precondition (bad dimensions, out-of-range
// observation, etc.).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The problem or policy setup cannot be run as configured.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The feasible set is empty for the requested problem.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedVariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Index policies need every variable observed at least once.
class InitializationIncomplete : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SizeLimitError : public ConfigurationError {
 public:
  SizeLimitError(const std::string& what, std::size_t count_found)
      : ConfigurationError(what), count_found_(count_found) {}

  std::size_t count_found() const { return count_found_; }

 private:
  std::size_t count_found_;
};

// Wraps any failure raised inside a simulation run with the run context.
class SimulationError : public std::runtime_error {
 public:
  SimulationError(const std::string& what, std::size_t run, std::uint64_t period)
      : std::runtime_error(what), run_(run), period_(period) {}

  std::size_t run() const { return run_; }
  std::uint64_t period() const { return period_; }

 private:
  std::size_t run_;
  std::uint64_t period_;
};

}  // namespace llr

#endif  // LLR_ERRORS_HPP_
