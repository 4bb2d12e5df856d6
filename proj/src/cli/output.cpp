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
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>

#include "llr/cli/output.hpp"

namespace llr::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

std::string trace_file_name(const RegretTrace& trace) {
  return "trace_" + trace.policy_label + "_run" + std::to_string(trace.run_index) + ".csv";
}

void write_trace_csv(std::ostream& out, const RegretTrace& trace) {
  out << kTraceHeader << '\n';
  for (std::size_t k = 0; k < trace.checkpoints.size(); ++k) {
    out << trace.checkpoints[k] << ',' << format_number(trace.cum_regret[k]) << ','
        << format_number(trace.normalized[k]) << ',' << trace.policy_label << ','
        << trace.run_index << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const PolicySummary> summaries) {
  out << kSummaryHeader << '\n';
  for (const auto& s : summaries) {
    for (const auto& r : s.rows) {
      out << r.policy << ',' << r.instance << ',' << r.checkpoint << ',' << format_number(r.mean)
          << ',' << format_number(r.sd) << ',' << format_number(r.min) << ','
          << format_number(r.max) << '\n';
    }
  }
}

void print_summary_table(std::ostream& out, std::span<const PolicySummary> summaries,
                         const std::string& instance) {
  if (summaries.empty()) return;
  const auto horizon = summaries.front().rows.back().checkpoint;
  out << "Cumulative pseudo-regret at t = " << horizon << " (" << instance << ")\n";
  out << std::left << std::setw(14) << "policy" << std::right << std::setw(6) << "runs"
      << std::setw(14) << "mean" << std::setw(12) << "sd" << std::setw(14) << "regret/ln t"
      << '\n';
  out << std::fixed << std::setprecision(1);
  for (const auto& s : summaries) {
    const auto& last = s.rows.back();
    out << std::left << std::setw(14) << s.policy << std::right << std::setw(6) << s.runs
        << std::setw(14) << last.mean << std::setw(12) << last.sd << std::setw(14)
        << s.final_normalized_mean << '\n';
  }
  out << std::defaultfloat;
}

std::vector<std::filesystem::path> write_outputs(const std::filesystem::path& dir,
                                                 const ExperimentConfig& config,
                                                 std::span<const RegretTrace> traces,
                                                 std::span<const PolicySummary> summaries) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  nlohmann::json runs = nlohmann::json::array();
  for (const RegretTrace& t : traces) {
    const auto path = dir / trace_file_name(t);
    std::ofstream out(path, std::ios::binary);
    write_trace_csv(out, t);
    written.push_back(path);
    runs.push_back({{"policy", t.policy_label},
                    {"run", t.run_index},
                    {"run_seed", t.run_seed},
                    {"floored_periods", t.floored_periods},
                    {"file", trace_file_name(t)}});
  }
  const auto summary_path = dir / "summary.csv";
  {
    std::ofstream out(summary_path, std::ios::binary);
    write_summary_csv(out, summaries);
  }
  written.push_back(summary_path);

  nlohmann::json manifest;
  manifest["config"] = dump_config(config);
  manifest["instance"] = config.plan.instance_name;
  manifest["runs"] = runs;
  nlohmann::json finals = nlohmann::json::object();
  for (const auto& s : summaries) {
    finals[s.policy] = {{"mean_cum_regret", s.rows.back().mean},
                        {"sd_cum_regret", s.rows.back().sd},
                        {"mean_normalized_regret", s.final_normalized_mean}};
  }
  manifest["final"] = finals;
  const auto manifest_path = dir / "manifest.json";
  {
    std::ofstream out(manifest_path, std::ios::binary);
    out << manifest.dump(2) << '\n';
  }
  written.push_back(manifest_path);
  return written;
}

}  // namespace llr::cli
