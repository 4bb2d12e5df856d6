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

// Acceptance suite: one PASS/FAIL line per criterion, with supporting
// measurements on indented lines. Exit status is non-zero if any criterion
// fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "llr/cli/commands.hpp"
#include "llr/environments.hpp"
#include "llr/errors.hpp"
#include "llr/ground_truth.hpp"
#include "llr/oracles.hpp"
#include "llr/policies.hpp"
#include "llr/simulation.hpp"
#include "test_util.hpp"

namespace llr {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> info;
};

std::string fmt(double x, int precision = 1) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(precision);
  s << x;
  return s.str();
}

ActionSet unit_arms(std::size_t n) {
  std::vector<ActionVector> arms;
  for (std::size_t i = 0; i < n; ++i) arms.push_back(ActionVector::unit(n, i));
  return ActionSet::explicit_arms(arms);
}

EnvironmentSpec bernoulli_env(const std::vector<double>& means) {
  EnvironmentSpec spec;
  for (double p : means) spec.distributions.push_back(Bernoulli{p});
  return spec;
}

double value_at(const std::vector<std::uint64_t>& checkpoints, const std::vector<double>& series,
                std::uint64_t t) {
  const auto it = std::find(checkpoints.begin(), checkpoints.end(), t);
  if (it == checkpoints.end()) throw std::logic_error("checkpoint missing");
  return series[static_cast<std::size_t>(it - checkpoints.begin())];
}

std::vector<double> mean_normalized(const std::vector<RegretTrace>& traces,
                                    const std::string& label) {
  std::vector<double> out;
  std::size_t count = 0;
  for (const auto& t : traces) {
    if (t.policy_label != label) continue;
    if (out.empty()) out.assign(t.normalized.size(), 0.0);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += t.normalized[k];
    ++count;
  }
  for (double& x : out) x /= static_cast<double>(count);
  return out;
}

// Arm sequence of one policy over `horizon` periods, warm-up included.
std::vector<ActionVector> arm_sequence(Policy& policy, const Environment& env,
                                       std::uint64_t horizon) {
  std::vector<ActionVector> seq;
  std::vector<Observation> obs(1);
  std::uint64_t t = 0;
  for (const auto& play : policy.initialize()) {
    if (t == horizon) break;
    ++t;
    env.sample(t, play.arm, 0, obs[0]);
    policy.observe(t, std::span(&play.arm, 1), obs);
    seq.push_back(play.arm);
  }
  while (t < horizon) {
    ++t;
    const auto& arms = policy.select(t);
    env.sample(t, arms[0], 0, obs[0]);
    seq.push_back(arms[0]);
    policy.observe(t, std::span(&seq.back(), 1), obs);
  }
  return seq;
}

Outcome ucb1_reduction() {
  const std::vector<double> means{0.1, 0.3, 0.5, 0.7, 0.9};
  const ActionSet problem = unit_arms(5);
  std::size_t mismatched_seeds = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EnvironmentSpec spec = bernoulli_env(means);
    spec.seed = derive_seed(1, seed);
    const Environment env(spec);
    IndexPolicy llr(PolicyConfig{PolicyKind::kLLR, 1, 1}, problem);
    NaiveUcb1Policy naive(PolicyConfig{PolicyKind::kNaiveUCB1}, problem);
    if (arm_sequence(llr, env, 10'000) != arm_sequence(naive, env, 10'000)) ++mismatched_seeds;
  }
  return {mismatched_seeds == 0,
          "10 seeds x 1e4 periods, sequences differ on " + std::to_string(mismatched_seeds) +
              " seeds"};
}

struct ExactnessTally {
  std::size_t compared = 0;
  std::size_t infeasible_agree = 0;
  std::size_t failures = 0;
  double worst_real_error = 0;
};

void compare(ExactnessTally& tally, double got, double want, bool integer) {
  ++tally.compared;
  const double err = std::abs(got - want);
  if (integer ? err != 0.0 : err > 1e-9) ++tally.failures;
  if (!integer) tally.worst_real_error = std::max(tally.worst_real_error, err);
}

double brute_opt(const ActionSet& problem, const std::vector<double>& w, bool maximize) {
  const ActionSet all = enumerate_brute_force(problem, 1'000'000);
  const auto& arms = std::get<ExplicitArms>(all.variant()).arms;
  if (arms.empty()) throw InfeasibleError("no feasible arm");
  double best = arms.front().dot(w);
  for (const auto& a : arms) best = maximize ? std::max(best, a.dot(w)) : std::min(best, a.dot(w));
  return best;
}

Outcome oracle_exactness() {
  std::mt19937_64 rng(20260101);
  ExactnessTally matching, paths, trees;
  for (int k = 0; k < 400; ++k) {
    const bool integer = k < 200;
    // Bipartite matchings up to 4 x 6, both senses.
    const std::size_t users = 1 + rng() % 4;
    const std::size_t channels = users + rng() % (7 - users);
    const ActionSet m = ActionSet::bipartite(users, channels);
    const auto wm = testing::random_weights(rng, users * channels, integer);
    compare(matching, solve_max(m, wm).objective, brute_opt(m, wm, true), integer);
    compare(matching, solve_min(m, wm).objective, brute_opt(m, wm, false), integer);

    // Source-destination paths on up to 8 nodes, redrawn until feasible.
    for (;;) {
      const std::size_t vertices = 3 + rng() % 6;
      const Graph g = testing::random_digraph(rng, vertices, vertices + rng() % (2 * vertices));
      const ActionSet p = ActionSet::paths(g, 0, vertices - 1);
      const auto wp = testing::random_weights(rng, g.edges.size(), integer);
      double want;
      try {
        want = brute_opt(p, wp, false);
      } catch (const InfeasibleError&) {
        try {
          solve_min(p, wp);
          ++paths.failures;
        } catch (const InfeasibleError&) {
          ++paths.infeasible_agree;
        }
        continue;
      }
      for (auto algo : {PathAlgorithm::kDijkstra, PathAlgorithm::kBellmanFord}) {
        compare(paths, solve_min(p, wp, {algo, TreeAlgorithm::kKruskal}).objective, want, integer);
      }
      break;
    }

    // Spanning trees on up to 7 nodes, both senses and both algorithms.
    const Graph ug = testing::random_connected_graph(rng, 2 + rng() % 6, rng() % 6);
    const ActionSet t = ActionSet::spanning_trees(ug);
    const auto wt = testing::random_weights(rng, ug.edges.size(), integer);
    const double lo = brute_opt(t, wt, false), hi = brute_opt(t, wt, true);
    for (auto algo : {TreeAlgorithm::kKruskal, TreeAlgorithm::kPrim}) {
      const OracleOptions opt{PathAlgorithm::kDijkstra, algo};
      compare(trees, solve_min(t, wt, opt).objective, lo, integer);
      compare(trees, solve_max(t, wt, opt).objective, hi, integer);
    }
  }
  Outcome o;
  o.pass = matching.failures + paths.failures + trees.failures == 0;
  o.detail = "200 integer + 200 real instances per family; mismatches matching/paths/trees = " +
             std::to_string(matching.failures) + "/" + std::to_string(paths.failures) + "/" +
             std::to_string(trees.failures);
  std::ostringstream info;
  info << "comparisons " << matching.compared << "/" << paths.compared << "/" << trees.compared
       << ", infeasible path draws agreed " << paths.infeasible_agree
       << ", worst real-weight error " << std::max({matching.worst_real_error,
                                                    paths.worst_real_error,
                                                    trees.worst_real_error});
  o.info.push_back(info.str());
  return o;
}

Outcome paper_optima() {
  Outcome o;
  o.pass = true;
  std::ostringstream detail;
  const struct {
    PaperInstanceTag tag;
    double value;
    std::size_t count;
    std::vector<std::size_t> optimum;
  } cases[] = {{PaperInstanceTag::kQ7M4, 3.1, 840, {2, 11, 14, 26}},
               {PaperInstanceTag::kQ9M5, 4.3, 15120, {2, 17, 24, 27, 41}}};
  for (const auto& c : cases) {
    const PaperInstance inst = paper_instance(c.tag);
    const auto means = inst.environment.means();
    const OracleSolution hungarian = solve_max(inst.actions, means);
    const ActionSet all = enumerate_brute_force(inst.actions, 100'000);
    const auto& arms = std::get<ExplicitArms>(all.variant()).arms;
    double brute = -1.0;
    for (const auto& a : arms) brute = std::max(brute, a.dot(means));
    const bool ok = std::abs(hungarian.objective - c.value) <= kTieTolerance &&
                    hungarian.objective == brute && arms.size() == c.count &&
                    hungarian.arm.support() == c.optimum &&
                    std::abs(inst.truth.optimal_value - c.value) <= kTieTolerance;
    o.pass = o.pass && ok;
    detail << inst.name << ": hungarian " << hungarian.objective << ", brute " << brute << ", "
           << arms.size() << " matchings; ";
  }
  o.detail = detail.str();
  return o;
}

// Shared 20-run, 2e6-period experiments on both channel-allocation instances.
struct PaperRuns {
  std::string name;
  std::vector<std::uint64_t> checkpoints;
  std::vector<RegretTrace> traces;
};

PaperRuns run_paper_instance(PaperInstanceTag tag) {
  const PaperInstance inst = paper_instance(tag);
  ExperimentPlan plan;
  plan.instance_name = inst.name;
  plan.environment = inst.environment;
  plan.actions = inst.actions;
  plan.policies = {PolicyConfig{PolicyKind::kNaiveUCB1}, PolicyConfig{PolicyKind::kLLR}};
  plan.horizon = 2'000'000;
  plan.n_runs = 20;
  plan.master_seed = 0;
  plan.parallel = true;
  plan.checkpoints = default_checkpoints(plan.horizon);
  plan.checkpoints.push_back(200'000);
  std::sort(plan.checkpoints.begin(), plan.checkpoints.end());
  plan.checkpoints.erase(std::unique(plan.checkpoints.begin(), plan.checkpoints.end()),
                         plan.checkpoints.end());
  return {inst.name, plan.checkpoints, run_experiment(plan)};
}

Outcome table_magnitudes(const PaperRuns& a, const PaperRuns& b) {
  const struct {
    const PaperRuns* runs;
    double llr_lo, llr_hi, naive_lo, naive_hi, ratio;
  } bands[] = {{&a, 50, 600, 1200, 5000, 5}, {&b, 100, 1200, 12000, 50000, 20}};
  Outcome o;
  o.pass = true;
  std::ostringstream detail;
  for (const auto& band : bands) {
    const double llr = mean_series(band.runs->traces, "LLR").back();
    const double naive = mean_series(band.runs->traces, "NaiveUCB1").back();
    const double ratio = naive / llr;
    const bool ok = llr >= band.llr_lo && llr <= band.llr_hi && naive >= band.naive_lo &&
                    naive <= band.naive_hi && ratio >= band.ratio;
    o.pass = o.pass && ok;
    detail << band.runs->name << " LLR " << fmt(llr) << " [" << band.llr_lo << "," << band.llr_hi
           << "], naive " << fmt(naive) << " [" << band.naive_lo << "," << band.naive_hi
           << "], ratio " << fmt(ratio, 2) << " (>= " << band.ratio << "); ";
    const double llr_norm = mean_normalized(band.runs->traces, "LLR").back();
    const double naive_norm = mean_normalized(band.runs->traces, "NaiveUCB1").back();
    o.info.push_back(band.runs->name + " regret/ln t at horizon: LLR " + fmt(llr_norm) +
                     ", naive " + fmt(naive_norm) + ", ratio " + fmt(naive_norm / llr_norm, 2));
  }
  o.detail = detail.str();
  return o;
}

// Relative increase of the mean normalized regret from t/10 to t.
double last_decade_growth(const std::vector<std::uint64_t>& checkpoints,
                          const std::vector<RegretTrace>& traces, const std::string& label,
                          std::uint64_t horizon) {
  const auto series = mean_normalized(traces, label);
  const double start = value_at(checkpoints, series, horizon / 10);
  const double end = value_at(checkpoints, series, horizon);
  return (end - start) / start;
}

Outcome log_growth(const PaperRuns& a, const PaperRuns& b) {
  Outcome o;
  o.pass = true;
  std::ostringstream detail;
  for (const PaperRuns* r : {&a, &b}) {
    const double g = last_decade_growth(r->checkpoints, r->traces, "LLR", 2'000'000);
    o.pass = o.pass && g < 0.2;
    detail << r->name << " LLR normalized regret +" << fmt(100 * g) << "% over 2e5..2e6; ";
    o.info.push_back(r->name + " naive normalized regret +" +
                     fmt(100 * last_decade_growth(r->checkpoints, r->traces, "NaiveUCB1",
                                                  2'000'000)) +
                     "% over the same decade");
  }
  o.detail = detail.str() + "(limit < 20%)";
  return o;
}

Outcome bound_dominance() {
  ExperimentPlan plan;
  plan.instance_name = "three-singletons";
  plan.environment = bernoulli_env({0.9, 0.6, 0.4});
  plan.actions = unit_arms(3);
  plan.policies = {PolicyConfig{PolicyKind::kLLR}, PolicyConfig{PolicyKind::kNaiveUCB1}};
  plan.horizon = 100'000;
  plan.n_runs = 50;
  plan.master_seed = 6;
  const GroundTruth truth = truth_for(plan, plan.policies[0]);
  const std::vector<double> gaps{0.3, 0.5};
  const BoundParams bp{3, 1, 1, *truth.delta_min, *truth.delta_max, {}};
  const auto traces = run_experiment(plan);
  const auto cps = plan.effective_checkpoints();
  const auto llr = mean_series(traces, "LLR");
  const auto naive = mean_series(traces, "NaiveUCB1");
  std::size_t violations = 0;
  double worst_llr = 0, worst_naive = 0;
  for (std::size_t k = 0; k < cps.size(); ++k) {
    const double n = static_cast<double>(cps[k]);
    const double b2 = theorem2_bound(bp, n), b1 = theorem1_bound(gaps, n);
    violations += (llr[k] > b2) + (naive[k] > b1);
    worst_llr = std::max(worst_llr, llr[k] / b2);
    worst_naive = std::max(worst_naive, naive[k] / b1);
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(cps.size()) + " checkpoints, violations " +
             std::to_string(violations) + ", max mean/bound LLR " + fmt(worst_llr, 4) +
             ", naive " + fmt(worst_naive, 4);
  o.info.push_back("delta_min " + fmt(*truth.delta_min, 3) + ", delta_max " +
                   fmt(*truth.delta_max, 3) + ", final LLR " + fmt(llr.back()) + ", naive " +
                   fmt(naive.back()));
  return o;
}

Outcome llr_k_sanity() {
  ExperimentPlan plan;
  plan.instance_name = "ten-singletons";
  plan.environment = bernoulli_env({0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95});
  plan.actions = unit_arms(10);
  plan.policies = {PolicyConfig{PolicyKind::kLLRK, 3}};
  plan.n_runs = 20;
  plan.master_seed = 7;
  for (std::uint64_t t = 1000; t <= 128'000; t *= 2) plan.checkpoints.push_back(t);
  plan.horizon = plan.checkpoints.back();
  const GroundTruth truth = truth_for(plan, plan.policies[0]);
  const auto mean = mean_series(run_experiment(plan), "LLR-K3");
  std::vector<double> increments;
  for (std::size_t k = 1; k < mean.size(); ++k) increments.push_back(mean[k] - mean[k - 1]);
  bool decreasing = true;
  for (std::size_t k = 1; k < increments.size(); ++k) {
    decreasing = decreasing && increments[k] < increments[k - 1];
  }
  const double bound =
      theorem3_bound({10, 1, 1, *truth.delta_min, *truth.delta_max, 3.0},
                     static_cast<double>(plan.horizon));
  Outcome o;
  o.pass = decreasing && mean.back() < bound;
  std::ostringstream detail;
  detail << "doubling increments";
  for (double d : increments) detail << ' ' << fmt(d);
  detail << (decreasing ? " (decreasing)" : " (not strictly decreasing)") << "; final "
         << fmt(mean.back()) << " vs bound " << fmt(bound);
  o.detail = detail.str();
  return o;
}

// Layered random DAG on 10 nodes: every edge lies on some 0 -> 9 path.
struct PathInstance {
  Graph graph;
  std::vector<double> means;
  GroundTruth truth;
  std::size_t n_paths = 0;
  std::uint64_t seed = 0;
};

PathInstance make_path_instance() {
  for (std::uint64_t seed = 1;; ++seed) {
    std::mt19937_64 rng(seed);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t v = 1; v < 10; ++v) pairs.insert({rng() % v, v});
    for (std::size_t v = 0; v < 9; ++v) pairs.insert({v, v + 1 + rng() % (9 - v)});
    while (pairs.size() < 20) {
      const std::size_t a = rng() % 10, b = rng() % 10;
      if (a < b) pairs.insert({a, b});
    }
    PathInstance inst;
    inst.seed = seed;
    inst.graph.n_vertices = 10;
    std::uniform_int_distribution<int> level(1, 19);
    for (const auto& [a, b] : pairs) {
      inst.graph.edges.push_back({a, b, inst.graph.edges.size()});
      inst.means.push_back(0.05 * level(rng));
    }
    const ActionSet problem = ActionSet::paths(inst.graph, 0, 9);
    inst.truth = certify_ground_truth(problem, inst.means, Sense::kMinimize, 100'000);
    inst.n_paths =
        std::get<ExplicitArms>(enumerate_brute_force(problem, 100'000).variant()).arms.size();
    if (inst.truth.delta_min && *inst.truth.delta_min >= 0.1 - kTieTolerance) return inst;
  }
}

Outcome llc_shortest_path() {
  const PathInstance inst = make_path_instance();
  ExperimentPlan plan;
  plan.instance_name = "dag-10";
  plan.environment = bernoulli_env(inst.means);
  plan.actions = ActionSet::paths(inst.graph, 0, 9);
  plan.policies = {PolicyConfig{PolicyKind::kLLC}};
  plan.horizon = 100'000;
  plan.n_runs = 20;
  plan.master_seed = 8;
  plan.checkpoints = default_checkpoints(plan.horizon);
  plan.checkpoints.push_back(10'000);
  std::sort(plan.checkpoints.begin(), plan.checkpoints.end());
  plan.checkpoints.erase(std::unique(plan.checkpoints.begin(), plan.checkpoints.end()),
                         plan.checkpoints.end());
  const auto traces = run_experiment(plan);
  const double E = static_cast<double>(inst.graph.edges.size());
  const double bound = theorem2_bound({E, E, 1, *inst.truth.delta_min, *inst.truth.delta_max, {}},
                                      static_cast<double>(plan.horizon));
  const double final_mean = mean_series(traces, "LLC").back();
  const double growth = last_decade_growth(plan.checkpoints, traces, "LLC", plan.horizon);
  std::size_t floored = 0;
  for (const auto& t : traces) floored += t.floored_periods;
  // Informational: the same policy with L set to the longest s-d path.
  const ActionSet all = enumerate_brute_force(plan.actions, 100'000);
  std::size_t longest = 0;
  for (const auto& a : std::get<ExplicitArms>(all.variant()).arms) {
    longest = std::max(longest, a.support_size());
  }
  ExperimentPlan tight = plan;
  tight.policies[0].exploration_L = longest;
  const auto tight_traces = run_experiment(tight);
  const double tight_growth =
      last_decade_growth(tight.checkpoints, tight_traces, "LLC", tight.horizon);

  Outcome o;
  o.pass = final_mean < bound && growth < 0.2;
  o.detail = "mean regret " + fmt(final_mean) + " vs bound " + fmt(bound, 0) +
             ", normalized +" + fmt(100 * growth) + "% over 1e4..1e5 (limit < 20%)";
  o.info.push_back(std::to_string(inst.graph.edges.size()) + " edges, " +
                   std::to_string(inst.n_paths) + " paths, graph seed " +
                   std::to_string(inst.seed) + ", delta_min " + fmt(*inst.truth.delta_min, 2) +
                   ", optimal cost " + fmt(inst.truth.optimal_value, 2) +
                   ", floored periods per run " +
                   fmt(static_cast<double>(floored) / traces.size()));
  o.info.push_back("with exploration L = " + std::to_string(longest) +
                   " (longest path): mean regret " +
                   fmt(mean_series(tight_traces, "LLC").back()) + ", normalized +" +
                   fmt(100 * tight_growth) + "% over 1e4..1e5");
  return o;
}

std::map<std::string, std::string> run_cli_snapshot(const fs::path& cfg, const fs::path& out) {
  fs::remove_all(out);
  const std::vector<std::string> args{"llr",     "run",          "--config", cfg.string(),
                                      "--seed",  "7",            "--horizon", "20000",
                                      "--runs",  "3",            "--output", out.string()};
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream sink;
  if (cli::run_cli(static_cast<int>(argv.size()), argv.data(), sink, sink) != 0) {
    throw std::runtime_error("run failed: " + sink.str());
  }
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::directory_iterator(out)) {
    std::ifstream in(entry.path(), std::ios::binary);
    files[entry.path().filename().string()] = {std::istreambuf_iterator<char>(in), {}};
  }
  return files;
}

Outcome estimator_and_determinism() {
  // Incremental versus batch means over random logs.
  std::mt19937_64 rng(99);
  double worst = 0;
  bool counts_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 8;
    EstimatorState state(n);
    std::vector<double> sum(n, 0.0);
    std::vector<std::uint64_t> count(n, 0);
    std::uniform_real_distribution<double> x(0.0, 1.0);
    for (int step = 0; step < 1000; ++step) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if (rng() % 3 == 0) idx.push_back(i);
      }
      if (idx.empty()) idx.push_back(rng() % n);
      const ActionVector arm = testing::arm_of(n, idx);
      Observation obs;
      for (std::size_t i : idx) {
        obs.push_back(x(rng));
        sum[i] += obs.back();
        ++count[i];
      }
      update_estimates(state, arm, obs);
    }
    for (std::size_t i = 0; i < n; ++i) {
      counts_ok = counts_ok && state.m[i] == count[i];
      if (count[i] > 0) worst = std::max(worst, std::abs(state.theta_hat[i] - sum[i] / count[i]));
    }
  }
  const bool means_ok = counts_ok && worst <= 1e-12;

  // Index-policy state is 2N whatever the number of arms.
  bool storage_ok = true;
  for (PaperInstanceTag tag : {PaperInstanceTag::kQ7M4, PaperInstanceTag::kQ9M5}) {
    const PaperInstance inst = paper_instance(tag);
    for (PolicyKind kind : {PolicyKind::kLLR, PolicyKind::kLLC}) {
      storage_ok = storage_ok &&
                   make_policy(PolicyConfig{kind}, inst.actions)->state_footprint() ==
                       2 * inst.actions.n_vars();
    }
  }
  for (std::size_t n_arms : {8u, 80u, 800u}) {
    std::vector<ActionVector> arms;
    for (std::size_t i = 0; i < 8; ++i) arms.push_back(ActionVector::unit(8, i));
    while (arms.size() < n_arms) arms.push_back(testing::arm_of(8, {rng() % 7, 7}));
    storage_ok = storage_ok &&
                 IndexPolicy(PolicyConfig{PolicyKind::kLLRK, 2}, ActionSet::explicit_arms(arms))
                         .state_footprint() == 16;
  }

  // Byte-identical reruns through the command-line front end.
  const fs::path dir = fs::temp_directory_path() / "llr_acceptance_rerun";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path cfg = dir / "q7m4.json";
  std::ofstream(cfg) << R"({"instance": "q7m4", "policies": [{"kind": "NaiveUCB1"}, {"kind": "LLR"}], "horizon": 2000000})";
  const auto first = run_cli_snapshot(cfg, dir / "out");
  const auto second = run_cli_snapshot(cfg, dir / "out");
  const bool rerun_ok = first == second && first.size() == 8;
  fs::remove_all(dir);

  Outcome o;
  o.pass = means_ok && storage_ok && rerun_ok;
  o.detail = std::string("batch-mean max error ") + (worst == 0 ? "0" : fmt(worst * 1e15, 3) + "e-15") +
             (means_ok ? " (ok)" : " (FAIL)") + ", storage " + (storage_ok ? "2N (ok)" : "FAIL") +
             ", reruns " + (rerun_ok ? "identical over " + std::to_string(first.size()) + " files"
                                     : "DIFFER");
  return o;
}

}  // namespace
}  // namespace llr

int main() {
  using Clock = std::chrono::steady_clock;
  int failures = 0;
  const auto report = [&](int id, const std::string& name, const std::function<llr::Outcome()>& f) {
    const auto start = Clock::now();
    llr::Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << o.detail
              << " (" << llr::fmt(secs) << " s)\n";
    for (const auto& line : o.info) std::cout << "        " << line << '\n';
    std::cout.flush();
  };

  report(1, "ucb1-reduction", llr::ucb1_reduction);
  report(2, "oracle-exactness", llr::oracle_exactness);
  report(3, "paper-instance-optima", llr::paper_optima);

  std::vector<llr::PaperRuns> paper;
  std::string paper_error;
  const auto paper_start = Clock::now();
  try {
    paper.push_back(llr::run_paper_instance(llr::PaperInstanceTag::kQ7M4));
    paper.push_back(llr::run_paper_instance(llr::PaperInstanceTag::kQ9M5));
  } catch (const std::exception& e) {
    paper_error = e.what();
  }
  std::cout << "        shared channel-allocation runs for [4] and [5]: "
            << llr::fmt(std::chrono::duration<double>(Clock::now() - paper_start).count())
            << " s\n";
  const auto with_paper = [&](auto f) {
    return [&, f] {
      if (!paper_error.empty()) throw std::runtime_error(paper_error);
      return f(paper[0], paper[1]);
    };
  };
  report(4, "table-magnitudes", with_paper(llr::table_magnitudes));
  report(5, "log-growth-signature", with_paper(llr::log_growth));
  report(6, "bound-dominance", llr::bound_dominance);
  report(7, "llr-k-sanity", llr::llr_k_sanity);
  report(8, "llc-shortest-path", llr::llc_shortest_path);
  report(9, "estimator-and-determinism", llr::estimator_and_determinism);

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " of 9 criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
