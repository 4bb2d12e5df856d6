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

#ifndef LLR_CLI_CONFIG_HPP_
#define LLR_CLI_CONFIG_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "llr/simulation.hpp"

namespace llr::cli {

// Invalid experiment or problem file. `line` is 1-based.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ExperimentConfig {
  ExperimentPlan plan;
  std::optional<std::string> instance_tag;  // set for built-in instances
  std::string output_dir = "out";
};

ExperimentConfig parse_config(const std::string& text, const std::string& source = "config");
ExperimentConfig load_config(const std::string& path);

// Canonical JSON form; parse_config(dump_config(c).dump()) reproduces c.
nlohmann::json dump_config(const ExperimentConfig& config);

// Action-set object as used under instance.action_set, or a built-in tag.
ActionSet parse_action_set(const std::string& text, const std::string& source = "problem");
nlohmann::json action_set_to_json(const ActionSet& actions);

// JSON array, or numbers separated by whitespace/commas.
std::vector<double> parse_weights(const std::string& text, const std::string& source = "weights");

std::string read_file(const std::string& path);

}  // namespace llr::cli

#endif  // LLR_CLI_CONFIG_HPP_
