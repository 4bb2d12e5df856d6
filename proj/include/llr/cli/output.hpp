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

#ifndef LLR_CLI_OUTPUT_HPP_
#define LLR_CLI_OUTPUT_HPP_

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "llr/cli/config.hpp"
#include "llr/simulation.hpp"

namespace llr::cli {

inline constexpr const char* kTraceHeader = "period,cum_regret,normalized_regret,policy,run";
inline constexpr const char* kSummaryHeader = "policy,instance,checkpoint,mean,sd,min,max";

// Shortest decimal form that round-trips.
std::string format_number(double x);

void write_trace_csv(std::ostream& out, const RegretTrace& trace);
void write_summary_csv(std::ostream& out, std::span<const PolicySummary> summaries);

// Final-checkpoint regret per policy, laid out like a results table.
void print_summary_table(std::ostream& out, std::span<const PolicySummary> summaries,
                         const std::string& instance);

std::string trace_file_name(const RegretTrace& trace);

// Writes every trace, summary.csv and manifest.json under `dir`, returning
// the paths written in order. Deterministic: no timestamps.
std::vector<std::filesystem::path> write_outputs(const std::filesystem::path& dir,
                                                 const ExperimentConfig& config,
                                                 std::span<const RegretTrace> traces,
                                                 std::span<const PolicySummary> summaries);

}  // namespace llr::cli

#endif  // LLR_CLI_OUTPUT_HPP_
