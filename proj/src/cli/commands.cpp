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
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "llr/cli/commands.hpp"
#include "llr/cli/config.hpp"
#include "llr/cli/output.hpp"
#include "llr/errors.hpp"
#include "llr/oracles.hpp"
#include "llr/simulation.hpp"

namespace llr::cli {

namespace {

struct RunOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> horizon;
  std::optional<std::uint32_t> runs;
  std::optional<std::string> output;
  std::optional<bool> parallel;
};

void add_run_options(CLI::App& cmd, RunOptions& o) {
  cmd.add_option("--config", o.config_path, "Experiment config (JSON)")->required();
  cmd.add_option("--seed", o.seed, "Override the master seed");
  cmd.add_option("--horizon", o.horizon, "Override the horizon");
  cmd.add_option("--runs", o.runs, "Override the number of replications");
  cmd.add_option("--output", o.output, "Override the output directory");
  cmd.add_option("--parallel", o.parallel, "Run replications on worker threads");
}

ExperimentConfig load_with_overrides(const RunOptions& o) {
  ExperimentConfig cfg = load_config(o.config_path);
  if (o.seed) cfg.plan.master_seed = *o.seed;
  if (o.runs) cfg.plan.n_runs = *o.runs;
  if (o.output) cfg.output_dir = *o.output;
  if (o.parallel) cfg.plan.parallel = *o.parallel;
  if (o.horizon) {
    cfg.plan.horizon = *o.horizon;
    // Explicit checkpoints beyond the new horizon are dropped.
    std::erase_if(cfg.plan.checkpoints, [&](std::uint64_t c) { return c > *o.horizon; });
  }
  try {
    cfg.plan.validate();
  } catch (const ConfigurationError& e) {
    throw ConfigError(o.config_path, 1, e.what());
  }
  return cfg;
}

int cmd_run(const RunOptions& o, std::ostream& out, std::ostream& err) {
  const ExperimentConfig cfg = load_with_overrides(o);
  std::vector<RegretTrace> traces;
  try {
    traces = run_experiment(cfg.plan);
  } catch (const SimulationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  const auto summaries = summarize(traces, cfg.plan.instance_name);
  const auto files = write_outputs(cfg.output_dir, cfg, traces, summaries);
  print_summary_table(out, summaries, cfg.plan.instance_name);
  out << "wrote " << files.size() << " files to " << cfg.output_dir << '\n';
  return kExitOk;
}

struct BoundsOptions {
  double N = 0, L = 0, a_max = 0, delta_min = 0, delta_max = 0;
  std::optional<double> K;
  std::vector<double> gaps;
  std::vector<double> n_grid{1, 10, 100, 1e3, 1e4, 1e5, 1e6};
};

int cmd_bounds(const BoundsOptions& o, std::ostream& out, std::ostream& err) {
  const auto bad = [&](const std::string& what) {
    err << "error: " << what << " must be positive\n";
    return kExitUsage;
  };
  if (!(o.N > 0)) return bad("N");
  if (!(o.L > 0)) return bad("L");
  if (!(o.a_max > 0)) return bad("a_max");
  if (!(o.delta_min > 0)) return bad("delta_min");
  if (!(o.delta_max > 0)) return bad("delta_max");
  if (o.K && !(*o.K > 0)) return bad("K");
  for (double g : o.gaps) {
    if (!(g > 0)) return bad("every gap");
  }
  for (double n : o.n_grid) {
    if (!(n >= 1)) {
      err << "error: n values must be at least 1\n";
      return kExitUsage;
    }
  }
  const BoundParams p{o.N, o.L, o.a_max, o.delta_min, o.delta_max, o.K};
  out << "n";
  if (!o.gaps.empty()) out << ",theorem1";
  out << ",theorem2";
  if (o.K) out << ",theorem3";
  out << '\n';
  for (double n : o.n_grid) {
    out << format_number(n);
    if (!o.gaps.empty()) out << ',' << format_number(theorem1_bound(o.gaps, n));
    out << ',' << format_number(theorem2_bound(p, n));
    if (o.K) out << ',' << format_number(theorem3_bound(p, n));
    out << '\n';
  }
  return kExitOk;
}

struct OracleCliOptions {
  std::string problem_path;
  std::string weights_path;
  bool maximize = false;
  bool minimize = false;
  std::optional<std::size_t> top_k;
  std::string path_algorithm = "dijkstra";
  std::string tree_algorithm = "kruskal";
};

void print_solution(std::ostream& out, const OracleSolution& s) {
  out << "objective " << format_number(s.objective) << '\n';
  out << "support";
  for (const auto& e : s.arm.entries()) out << ' ' << e.index;
  out << "\ncoefficients";
  for (const auto& e : s.arm.entries()) out << ' ' << format_number(e.weight);
  out << '\n';
  if (s.floored_weights > 0) out << "floored_weights " << s.floored_weights << '\n';
}

int cmd_oracle(const OracleCliOptions& o, std::ostream& out, std::ostream& err) {
  const int modes = (o.maximize ? 1 : 0) + (o.minimize ? 1 : 0) + (o.top_k ? 1 : 0);
  if (modes != 1) {
    err << "error: exactly one of --max, --min, --top-k is required\n";
    return kExitUsage;
  }
  const ActionSet problem = parse_action_set(read_file(o.problem_path), o.problem_path);
  const std::vector<double> w = parse_weights(read_file(o.weights_path), o.weights_path);
  if (w.size() != problem.n_vars()) {
    err << "error: " << o.weights_path << " has " << w.size() << " weights, problem has N = "
        << problem.n_vars() << '\n';
    return kExitUsage;
  }
  OracleOptions options;
  options.path_algorithm =
      o.path_algorithm == "bellman_ford" ? PathAlgorithm::kBellmanFord : PathAlgorithm::kDijkstra;
  options.tree_algorithm = o.tree_algorithm == "prim" ? TreeAlgorithm::kPrim : TreeAlgorithm::kKruskal;
  try {
    if (o.top_k) {
      const auto list = solve_top_k(problem, w, *o.top_k);
      for (std::size_t k = 0; k < list.size(); ++k) {
        out << "rank " << k + 1 << '\n';
        print_solution(out, list[k]);
      }
    } else {
      print_solution(out, o.maximize ? solve_max(problem, w, options)
                                     : solve_min(problem, w, options));
    }
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial bandits with linear rewards: experiments, bounds and oracles", "llr"};
  app.require_subcommand(1);

  RunOptions run_opts;
  CLI::App* run = app.add_subcommand("run", "Run an experiment config and write traces");
  add_run_options(*run, run_opts);

  RunOptions dump_opts;
  CLI::App* dump = app.add_subcommand("dump-config", "Print the canonical form of a config");
  add_run_options(*dump, dump_opts);

  BoundsOptions bounds_opts;
  CLI::App* bounds = app.add_subcommand("bounds", "Tabulate the regret ceilings");
  bounds->add_option("--N", bounds_opts.N, "Number of variables")->required();
  bounds->add_option("--L", bounds_opts.L, "Maximum support size")->required();
  bounds->add_option("--a-max", bounds_opts.a_max, "Largest coefficient")->required();
  bounds->add_option("--delta-min", bounds_opts.delta_min, "Smallest gap")->required();
  bounds->add_option("--delta-max", bounds_opts.delta_max, "Largest gap")->required();
  bounds->add_option("--K", bounds_opts.K, "Arms played per period (adds the K-arm column)");
  bounds->add_option("--gaps", bounds_opts.gaps, "Per-arm gaps for the UCB1 column")
      ->delimiter(',');
  bounds->add_option("--n", bounds_opts.n_grid, "Horizons to tabulate")->delimiter(',');

  OracleCliOptions oracle_opts;
  CLI::App* oracle = app.add_subcommand("oracle", "Solve one deterministic instance");
  oracle->add_option("--problem", oracle_opts.problem_path, "Action set (JSON)")->required();
  oracle->add_option("--weights", oracle_opts.weights_path, "Weight vector")->required();
  oracle->add_flag("--max", oracle_opts.maximize, "Maximize");
  oracle->add_flag("--min", oracle_opts.minimize, "Minimize");
  oracle->add_option("--top-k", oracle_opts.top_k, "K best arms (explicit sets)");
  oracle->add_option("--path-algorithm", oracle_opts.path_algorithm)
      ->check(CLI::IsMember({"dijkstra", "bellman_ford"}));
  oracle->add_option("--tree-algorithm", oracle_opts.tree_algorithm)
      ->check(CLI::IsMember({"kruskal", "prim"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_opts, out, err);
    if (dump->parsed()) {
      out << dump_config(load_with_overrides(dump_opts)).dump(2) << '\n';
      return kExitOk;
    }
    if (bounds->parsed()) return cmd_bounds(bounds_opts, out, err);
    if (oracle->parsed()) return cmd_oracle(oracle_opts, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedVariantError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace llr::cli
