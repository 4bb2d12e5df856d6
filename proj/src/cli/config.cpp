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
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "llr/cli/config.hpp"
#include "llr/errors.hpp"

namespace llr::cli {

using nlohmann::json;

namespace {

// Walks a parsed document and turns schema problems into ConfigError with
// the line of the offending key.
class Reader {
 public:
  Reader(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& key, const std::string& message) const {
    throw ConfigError(source_, line_of(key), message);
  }

  std::size_t line_of(const std::string& key) const {
    if (key.empty()) return 1;
    const auto pos = text_.find("\"" + key + "\"");
    if (pos == std::string::npos) return 1;
    return 1 + static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + pos, '\n'));
  }

  void only_keys(const json& obj, const std::string& where,
                 std::initializer_list<const char*> allowed) const {
    if (!obj.is_object()) fail(where, "'" + where + "' must be an object");
    for (const auto& [key, value] : obj.items()) {
      const bool known = std::any_of(allowed.begin(), allowed.end(),
                                     [&](const char* k) { return key == k; });
      if (!known) fail(key, "unknown key '" + key + "' in " + where);
    }
  }

  const json& require(const json& obj, const std::string& key, const std::string& where) const {
    if (!obj.contains(key)) fail(where, "missing required key '" + key + "' in " + where);
    return obj.at(key);
  }

  std::uint64_t uint(const json& v, const std::string& key) const {
    if (!v.is_number_unsigned()) fail(key, "'" + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
  }

  std::uint64_t positive(const json& v, const std::string& key) const {
    const std::uint64_t x = uint(v, key);
    if (x == 0) fail(key, "'" + key + "' must be positive");
    return x;
  }

  double number(const json& v, const std::string& key) const {
    if (!v.is_number()) fail(key, "'" + key + "' must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(key, "'" + key + "' must be finite");
    return x;
  }

  std::string string(const json& v, const std::string& key) const {
    if (!v.is_string()) fail(key, "'" + key + "' must be a string");
    return v.get<std::string>();
  }

  const std::string& source() const { return source_; }

 private:
  const std::string& text_;
  std::string source_;
};

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::smatch m;
    const std::string what = e.what();
    if (std::regex_search(what, m, std::regex("line ([0-9]+)"))) line = std::stoul(m[1]);
    throw ConfigError(source, line, std::string("malformed JSON: ") + e.what());
  }
}

Graph parse_graph(const Reader& r, const json& obj) {
  Graph g;
  g.n_vertices = r.positive(r.require(obj, "vertices", "action_set"), "vertices");
  const json& edges = r.require(obj, "edges", "action_set");
  if (!edges.is_array()) r.fail("edges", "'edges' must be an array");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const json& e = edges[k];
    r.only_keys(e, "edges", {"from", "to", "var"});
    GraphEdge edge;
    edge.from = r.uint(r.require(e, "from", "edges"), "from");
    edge.to = r.uint(r.require(e, "to", "edges"), "to");
    edge.var = e.contains("var") ? r.uint(e.at("var"), "var") : k;
    g.edges.push_back(edge);
  }
  return g;
}

ActionSet parse_action_set_json(const Reader& r, const json& obj) {
  r.only_keys(obj, "action_set",
              {"type", "n_vars", "arms", "users", "channels", "vertices", "edges", "source",
               "dest", "L"});
  const std::string type = r.string(r.require(obj, "type", "action_set"), "type");
  std::optional<ActionSet> set;
  try {
    if (type == "explicit") {
      const std::size_t n = r.positive(r.require(obj, "n_vars", "action_set"), "n_vars");
      const json& arms = r.require(obj, "arms", "action_set");
      if (!arms.is_array()) r.fail("arms", "'arms' must be an array");
      std::vector<ActionVector> list;
      for (const json& arm : arms) {
        if (!arm.is_array()) r.fail("arms", "each arm must be an array");
        std::vector<ActionVector::Entry> entries;
        for (const json& item : arm) {
          if (item.is_number_unsigned()) {
            entries.push_back({item.get<std::size_t>(), 1.0});
          } else if (item.is_array() && item.size() == 2) {
            entries.push_back({r.uint(item[0], "arms"), r.number(item[1], "arms")});
          } else {
            r.fail("arms", "arm entries must be an index or an [index, weight] pair");
          }
        }
        list.emplace_back(n, std::move(entries));
      }
      set = ActionSet::explicit_arms(std::move(list));
    } else if (type == "bipartite_matching") {
      set = ActionSet::bipartite(r.positive(r.require(obj, "users", "action_set"), "users"),
                                 r.positive(r.require(obj, "channels", "action_set"), "channels"));
    } else if (type == "paths") {
      Graph g = parse_graph(r, obj);
      set = ActionSet::paths(std::move(g), r.uint(r.require(obj, "source", "action_set"), "source"),
                             r.uint(r.require(obj, "dest", "action_set"), "dest"));
    } else if (type == "spanning_trees") {
      set = ActionSet::spanning_trees(parse_graph(r, obj));
    } else {
      r.fail("type", "unknown action_set type '" + type +
                         "' (expected explicit, bipartite_matching, paths or spanning_trees)");
    }
    if (obj.contains("L")) set = set->with_L(r.positive(obj.at("L"), "L"));
  } catch (const ConfigurationError& e) {
    r.fail("action_set", e.what());
  } catch (const ContractViolation& e) {
    r.fail("action_set", e.what());
  }
  return *set;
}

EnvironmentSpec parse_environment(const Reader& r, const json& obj) {
  r.only_keys(obj, "environment", {"distributions"});
  const json& list = r.require(obj, "distributions", "environment");
  if (!list.is_array()) r.fail("distributions", "'distributions' must be an array");
  EnvironmentSpec env;
  for (const json& d : list) {
    r.only_keys(d, "distributions", {"kind", "p", "lo", "hi", "value"});
    const std::string kind = r.string(r.require(d, "kind", "distributions"), "kind");
    if (kind == "bernoulli") {
      env.distributions.emplace_back(Bernoulli{r.number(r.require(d, "p", "distributions"), "p")});
    } else if (kind == "uniform") {
      env.distributions.emplace_back(
          Uniform{r.number(r.require(d, "lo", "distributions"), "lo"),
                  r.number(r.require(d, "hi", "distributions"), "hi")});
    } else if (kind == "fixed") {
      env.distributions.emplace_back(
          Fixed{r.number(r.require(d, "value", "distributions"), "value")});
    } else {
      r.fail("kind", "unknown distribution kind '" + kind + "'");
    }
  }
  try {
    env.validate();
  } catch (const ConfigurationError& e) {
    r.fail("distributions", e.what());
  }
  return env;
}

PolicyConfig parse_policy(const Reader& r, const json& obj) {
  r.only_keys(obj, "policies",
              {"kind", "K", "exploration_L", "init", "path_algorithm", "tree_algorithm",
               "enumerate_limit"});
  PolicyConfig p;
  const std::string kind = r.string(r.require(obj, "kind", "policies"), "kind");
  if (kind == "LLR") {
    p.kind = PolicyKind::kLLR;
  } else if (kind == "LLC") {
    p.kind = PolicyKind::kLLC;
  } else if (kind == "LLR_K") {
    p.kind = PolicyKind::kLLRK;
    p.K = r.positive(r.require(obj, "K", "policies"), "K");
  } else if (kind == "NaiveUCB1") {
    p.kind = PolicyKind::kNaiveUCB1;
  } else {
    r.fail("kind", "unknown policy kind '" + kind + "' (expected LLR, LLC, LLR_K or NaiveUCB1)");
  }
  if (obj.contains("K") && p.kind != PolicyKind::kLLRK) r.fail("K", "'K' only applies to LLR_K");
  if (obj.contains("exploration_L")) p.exploration_L = r.positive(obj.at("exploration_L"), "exploration_L");
  if (obj.contains("init")) {
    const std::string mode = r.string(obj.at("init"), "init");
    if (mode == "literal") {
      p.init = InitMode::kLiteral;
    } else if (mode == "greedy") {
      p.init = InitMode::kGreedy;
    } else {
      r.fail("init", "'init' must be literal or greedy");
    }
  }
  if (obj.contains("path_algorithm")) {
    const std::string a = r.string(obj.at("path_algorithm"), "path_algorithm");
    if (a == "dijkstra") {
      p.oracle.path_algorithm = PathAlgorithm::kDijkstra;
    } else if (a == "bellman_ford") {
      p.oracle.path_algorithm = PathAlgorithm::kBellmanFord;
    } else {
      r.fail("path_algorithm", "'path_algorithm' must be dijkstra or bellman_ford");
    }
  }
  if (obj.contains("tree_algorithm")) {
    const std::string a = r.string(obj.at("tree_algorithm"), "tree_algorithm");
    if (a == "kruskal") {
      p.oracle.tree_algorithm = TreeAlgorithm::kKruskal;
    } else if (a == "prim") {
      p.oracle.tree_algorithm = TreeAlgorithm::kPrim;
    } else {
      r.fail("tree_algorithm", "'tree_algorithm' must be kruskal or prim");
    }
  }
  if (obj.contains("enumerate_limit")) {
    p.enumerate_limit = r.positive(obj.at("enumerate_limit"), "enumerate_limit");
  }
  return p;
}

json policy_to_json(const PolicyConfig& p) {
  json j;
  switch (p.kind) {
    case PolicyKind::kLLR: j["kind"] = "LLR"; break;
    case PolicyKind::kLLC: j["kind"] = "LLC"; break;
    case PolicyKind::kLLRK: j["kind"] = "LLR_K"; j["K"] = p.K; break;
    case PolicyKind::kNaiveUCB1: j["kind"] = "NaiveUCB1"; break;
  }
  if (p.exploration_L) j["exploration_L"] = *p.exploration_L;
  j["init"] = p.init == InitMode::kLiteral ? "literal" : "greedy";
  j["path_algorithm"] =
      p.oracle.path_algorithm == PathAlgorithm::kDijkstra ? "dijkstra" : "bellman_ford";
  j["tree_algorithm"] = p.oracle.tree_algorithm == TreeAlgorithm::kKruskal ? "kruskal" : "prim";
  j["enumerate_limit"] = p.enumerate_limit;
  return j;
}

json graph_edges_to_json(const Graph& g) {
  json edges = json::array();
  for (const GraphEdge& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"var", e.var}});
  return edges;
}

json environment_to_json(const EnvironmentSpec& env) {
  json list = json::array();
  for (const Distribution& d : env.distributions) {
    if (const auto* b = std::get_if<Bernoulli>(&d)) {
      list.push_back({{"kind", "bernoulli"}, {"p", b->p}});
    } else if (const auto* u = std::get_if<Uniform>(&d)) {
      list.push_back({{"kind", "uniform"}, {"lo", u->lo}, {"hi", u->hi}});
    } else {
      list.push_back({{"kind", "fixed"}, {"value", std::get<Fixed>(d).value}});
    }
  }
  return {{"distributions", list}};
}

std::size_t default_L(const ActionSet& a) {
  struct V {
    std::size_t n;
    std::size_t operator()(const ExplicitArms& e) const {
      std::size_t L = 0;
      for (const auto& arm : e.arms) L = std::max(L, arm.support_size());
      return L;
    }
    std::size_t operator()(const BipartiteMatching& m) const { return std::min(m.users, m.channels); }
    std::size_t operator()(const SourceDestPaths&) const { return n; }
    std::size_t operator()(const SpanningTrees&) const { return n; }
  };
  return std::visit(V{a.n_vars()}, a.variant());
}

}  // namespace

json action_set_to_json(const ActionSet& actions) {
  json j;
  const auto& v = actions.variant();
  if (const auto* e = std::get_if<ExplicitArms>(&v)) {
    j["type"] = "explicit";
    j["n_vars"] = actions.n_vars();
    json arms = json::array();
    for (const auto& arm : e->arms) {
      json entries = json::array();
      for (const auto& entry : arm.entries()) entries.push_back({entry.index, entry.weight});
      arms.push_back(entries);
    }
    j["arms"] = arms;
  } else if (const auto* m = std::get_if<BipartiteMatching>(&v)) {
    j["type"] = "bipartite_matching";
    j["users"] = m->users;
    j["channels"] = m->channels;
  } else if (const auto* p = std::get_if<SourceDestPaths>(&v)) {
    j["type"] = "paths";
    j["vertices"] = p->graph.n_vertices;
    j["edges"] = graph_edges_to_json(p->graph);
    j["source"] = p->source;
    j["dest"] = p->dest;
  } else {
    const auto& t = std::get<SpanningTrees>(v);
    j["type"] = "spanning_trees";
    j["vertices"] = t.graph.n_vertices;
    j["edges"] = graph_edges_to_json(t.graph);
  }
  if (actions.L() != default_L(actions)) j["L"] = actions.L();
  return j;
}

ExperimentConfig parse_config(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  const Reader r(text, source);
  r.only_keys(doc, "config",
              {"instance", "policies", "horizon", "runs", "seed", "checkpoints", "output_dir",
               "parallel"});
  ExperimentConfig cfg;
  ExperimentPlan& plan = cfg.plan;

  const json& inst = r.require(doc, "instance", "config");
  if (inst.is_string()) {
    const std::string tag = inst.get<std::string>();
    try {
      PaperInstance p = paper_instance(parse_paper_tag(tag));
      plan.instance_name = p.name;
      plan.environment = std::move(p.environment);
      plan.actions = std::move(p.actions);
    } catch (const ConfigurationError& e) {
      r.fail("instance", e.what());
    }
    cfg.instance_tag = tag;
  } else {
    r.only_keys(inst, "instance", {"name", "environment", "action_set"});
    plan.instance_name = inst.contains("name") ? r.string(inst.at("name"), "name") : "custom";
    plan.environment = parse_environment(r, r.require(inst, "environment", "instance"));
    plan.actions = parse_action_set_json(r, r.require(inst, "action_set", "instance"));
  }

  const json& policies = r.require(doc, "policies", "config");
  if (!policies.is_array() || policies.empty()) {
    r.fail("policies", "'policies' must be a non-empty array");
  }
  for (const json& p : policies) plan.policies.push_back(parse_policy(r, p));

  plan.horizon = r.positive(r.require(doc, "horizon", "config"), "horizon");
  plan.n_runs = doc.contains("runs") ? r.positive(doc.at("runs"), "runs") : 20;
  plan.master_seed = doc.contains("seed") ? r.uint(doc.at("seed"), "seed") : 0;
  if (doc.contains("checkpoints")) {
    const json& cps = doc.at("checkpoints");
    if (!cps.is_array()) r.fail("checkpoints", "'checkpoints' must be an array");
    for (const json& c : cps) plan.checkpoints.push_back(r.positive(c, "checkpoints"));
  }
  if (doc.contains("output_dir")) cfg.output_dir = r.string(doc.at("output_dir"), "output_dir");
  if (doc.contains("parallel")) {
    if (!doc.at("parallel").is_boolean()) r.fail("parallel", "'parallel' must be true or false");
    plan.parallel = doc.at("parallel").get<bool>();
  }
  try {
    plan.validate();
  } catch (const ConfigurationError& e) {
    const std::string what = e.what();
    const char* anchor = what.find("horizon") != std::string::npos       ? "horizon"
                         : what.find("checkpoint") != std::string::npos  ? "checkpoints"
                         : what.find("polic") != std::string::npos       ? "policies"
                                                                         : "instance";
    r.fail(anchor, what);
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  return parse_config(read_file(path), path);
}

json dump_config(const ExperimentConfig& config) {
  const ExperimentPlan& plan = config.plan;
  json j;
  if (config.instance_tag) {
    j["instance"] = *config.instance_tag;
  } else {
    j["instance"] = {{"name", plan.instance_name},
                     {"environment", environment_to_json(plan.environment)},
                     {"action_set", action_set_to_json(plan.actions)}};
  }
  json policies = json::array();
  for (const auto& p : plan.policies) policies.push_back(policy_to_json(p));
  j["policies"] = policies;
  j["horizon"] = plan.horizon;
  j["runs"] = plan.n_runs;
  j["seed"] = plan.master_seed;
  if (!plan.checkpoints.empty()) j["checkpoints"] = plan.checkpoints;
  j["output_dir"] = config.output_dir;
  j["parallel"] = plan.parallel;
  return j;
}

ActionSet parse_action_set(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  const Reader r(text, source);
  if (doc.is_string()) {
    try {
      return paper_instance(parse_paper_tag(doc.get<std::string>())).actions;
    } catch (const ConfigurationError& e) {
      r.fail("", e.what());
    }
  }
  return parse_action_set_json(r, doc);
}

std::vector<double> parse_weights(const std::string& text, const std::string& source) {
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<double> w;
  if (first != std::string::npos && text[first] == '[') {
    const json doc = parse_json(text, source);
    const Reader r(text, source);
    for (const json& x : doc) w.push_back(r.number(x, "weights"));
    return w;
  }
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::string token;
  std::size_t line = 1;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const double x = std::stod(token, &used);
      if (used != token.size() || !std::isfinite(x)) throw std::invalid_argument(token);
      w.push_back(x);
    } catch (const std::exception&) {
      const auto pos = text.find(token);
      if (pos != std::string::npos) {
        line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n'));
      }
      throw ConfigError(source, line, "not a number: '" + token + "'");
    }
  }
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, 1, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace llr::cli
