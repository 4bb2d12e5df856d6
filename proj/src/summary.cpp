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
#include <cmath>
#include <string>

#include "llr/errors.hpp"
#include "llr/simulation.hpp"

namespace llr {

std::vector<PolicySummary> summarize(std::span<const RegretTrace> traces,
                                     const std::string& instance) {
  std::vector<std::string> labels;
  for (const auto& t : traces) {
    if (std::find(labels.begin(), labels.end(), t.policy_label) == labels.end()) {
      labels.push_back(t.policy_label);
    }
  }
  std::vector<PolicySummary> out;
  for (const std::string& label : labels) {
    std::vector<const RegretTrace*> runs;
    for (const auto& t : traces) {
      if (t.policy_label == label) runs.push_back(&t);
    }
    PolicySummary s;
    s.policy = label;
    s.runs = runs.size();
    const auto& cps = runs.front()->checkpoints;
    for (const RegretTrace* r : runs) {
      if (r->checkpoints != cps || r->cum_regret.size() != cps.size()) {
        throw ContractViolation("traces of policy " + label + " disagree on checkpoints");
      }
    }
    const auto count = static_cast<double>(runs.size());
    for (std::size_t k = 0; k < cps.size(); ++k) {
      SummaryRow row{label, instance, cps[k], 0.0, 0.0, 0.0, 0.0};
      row.min = row.max = runs.front()->cum_regret[k];
      for (const RegretTrace* r : runs) {
        const double x = r->cum_regret[k];
        row.mean += x;
        row.min = std::min(row.min, x);
        row.max = std::max(row.max, x);
      }
      row.mean /= count;
      if (runs.size() > 1) {
        double ss = 0.0;
        for (const RegretTrace* r : runs) {
          const double d = r->cum_regret[k] - row.mean;
          ss += d * d;
        }
        row.sd = std::sqrt(ss / (count - 1.0));
      }
      s.rows.push_back(row);
    }
    for (const RegretTrace* r : runs) {
      if (!r->normalized.empty()) s.final_normalized_mean += r->normalized.back();
    }
    s.final_normalized_mean /= count;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<double> mean_series(std::span<const RegretTrace> traces,
                                 const std::string& policy) {
  std::vector<double> mean;
  std::size_t count = 0;
  for (const auto& t : traces) {
    if (t.policy_label != policy) continue;
    if (mean.empty()) mean.assign(t.cum_regret.size(), 0.0);
    for (std::size_t k = 0; k < mean.size(); ++k) mean[k] += t.cum_regret[k];
    ++count;
  }
  for (double& x : mean) x /= static_cast<double>(count);
  return mean;
}

}  // namespace llr
