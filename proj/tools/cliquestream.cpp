// Copyright 2026 The CliqueStream Authors
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

// Command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 usage error, 3 solver budget exhausted.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cliquestream/analysis.hpp"
#include "cliquestream/errors.hpp"
#include "cliquestream/exact_solver.hpp"
#include "cliquestream/harness/trace_io.hpp"
#include "cliquestream/harness/verify.hpp"
#include "cliquestream/instance_io.hpp"
#include "cliquestream/nemesis.hpp"
#include "cliquestream/online.hpp"
#include "cliquestream/parameters.hpp"
#include "cliquestream/skeleton.hpp"
#include "cliquestream/strategies.hpp"

namespace cs = cliquestream;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<cs::ArrivalEvent> load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open instance file '" + path + "'");
  return cs::read_instance(in);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  return out;
}

cs::Json clusters_json(const cs::Partition& groups) {
  cs::Json out = cs::Json::array();
  for (const auto& g : groups) {
    cs::Json ids = cs::Json::array();
    for (auto v : g) ids.push_back(v + 1);
    out.push_back(std::move(ids));
  }
  return out;
}

struct Common {
  std::string strategy = "greedy";
  double gamma = cs::kAsymptoticPreset.gamma;
  std::size_t max_component = cs::SolveBudget{}.max_component_size;
  std::uint64_t node_limit = cs::SolveBudget{}.node_limit;

  cs::SolveBudget budget() const { return {max_component, node_limit}; }
};

void add_budget_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-component", c.max_component,
                  "Largest connected component the exact solver accepts (<= 64)");
  cmd->add_option("--node-limit", c.node_limit, "Search-node budget of the exact solver");
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
  Common common;
  std::string nemesis;
  std::string instance;
  std::size_t n = 8;
  std::size_t phases = 5;
  std::string variant = "plain";
  std::int64_t beta = 0;
  std::string objective;
  std::string opt = "auto";
  std::string trace_path;
  std::string csv_path;
  std::optional<std::uint64_t> seed;
};

int run_simulate(const SimulateArgs& a) {
  if (a.nemesis.empty() == a.instance.empty()) {
    throw UsageError("give exactly one of --nemesis or --instance");
  }
  auto strategy = cs::make_strategy(a.common.strategy, a.common.gamma, a.common.budget());

  cs::TraceMeta meta;
  meta.strategy = strategy->name();
  meta.seed = a.seed;
  if (a.common.strategy == "occ") meta.params["gamma"] = a.common.gamma;

  std::vector<cs::ArrivalEvent> events;
  std::optional<std::vector<std::int64_t>> analytic;
  cs::Objective native = cs::Objective::kMaxProfit;
  std::optional<cs::RatioTrace> played;  // adaptive games produce their own trace

  if (!a.instance.empty()) {
    events = load_instance(a.instance);
    meta.instance = a.instance;
  } else if (a.nemesis == "greedy") {
    auto inst = cs::greedy_nemesis(a.n);
    events = std::move(inst.events);
    analytic = std::move(inst.analytic_opt);
    meta.instance = inst.name;
  } else if (a.nemesis == "occ") {
    auto nem = cs::occ_nemesis(a.common.gamma, a.phases, cs::parse_occ_variant(a.variant));
    events = std::move(nem.instance.events);
    analytic = std::move(nem.instance.analytic_opt);
    meta.instance = nem.instance.name;
  } else if (a.nemesis == "mincc") {
    native = cs::Objective::kMinCost;
    auto game = cs::play_mincc_nemesis(*strategy, a.beta, a.n);
    events = std::move(game.instance.events);
    analytic = std::move(game.instance.analytic_opt);
    meta.instance = game.instance.name;
    played = std::move(game.trace);
    strategy = cs::make_strategy(a.common.strategy, a.common.gamma, a.common.budget());
  } else {
    throw UsageError("unknown nemesis '" + a.nemesis + "' (expected greedy|occ|mincc)");
  }

  const cs::Objective objective = a.objective.empty() ? native : cs::parse_objective(a.objective);
  meta.objective = objective;
  bool use_analytic = false;
  if (a.opt == "analytic") {
    if (!analytic) throw UsageError("--opt analytic needs a generated instance");
    if (objective != native) throw UsageError("analytic optimum is only known for the "
                                              "instance's own objective");
    use_analytic = true;
  } else if (a.opt == "auto") {
    use_analytic = analytic.has_value() && objective == native;
  } else if (a.opt != "exact") {
    throw UsageError("unknown --opt '" + a.opt + "' (expected exact|analytic|auto)");
  }
  meta.params["opt"] = use_analytic ? "analytic" : "exact";

  cs::RatioTrace trace;
  if (played && use_analytic) {
    trace = std::move(*played);
  } else {
    trace = cs::run_online(*strategy, events, objective,
                           use_analytic ? cs::OptSource::analytic_values(*analytic)
                                        : cs::OptSource::exact(a.common.budget()));
  }

  if (!a.trace_path.empty()) {
    auto out = open_output(a.trace_path);
    cs::write_trace_json(out, meta, trace);
  }
  if (!a.csv_path.empty()) {
    auto out = open_output(a.csv_path);
    cs::write_trace_csv(out, trace);
  }
  if (const auto w = trace.worst()) {
    std::cout << "worst ratio " << w->ratio.to_string() << " at t=" << w->t << " ("
              << trace.steps.size() << " steps, final " << trace.steps.back().ratio.to_string()
              << ")\n";
  } else {
    std::cout << "empty instance\n";
  }
  return kExitOk;
}

// ---- nemesis ---------------------------------------------------------------

struct NemesisArgs {
  Common common;
  std::string kind;
  std::size_t n = 8;
  std::size_t phases = 5;
  std::string variant = "plain";
  std::int64_t beta = 0;
  std::string output;
};

int run_nemesis(const NemesisArgs& a) {
  std::vector<cs::ArrivalEvent> events;
  std::string name;
  if (a.kind == "greedy") {
    auto inst = cs::greedy_nemesis(a.n);
    events = std::move(inst.events);
    name = inst.name;
  } else if (a.kind == "occ") {
    auto nem = cs::occ_nemesis(a.common.gamma, a.phases, cs::parse_occ_variant(a.variant));
    events = std::move(nem.instance.events);
    name = nem.instance.name;
  } else if (a.kind == "mincc") {
    auto strategy = cs::make_strategy(a.common.strategy, a.common.gamma, a.common.budget());
    auto game = cs::play_mincc_nemesis(*strategy, a.beta, a.n);
    events = std::move(game.instance.events);
    name = game.instance.name + " against " + strategy->name();
  } else {
    throw UsageError("unknown nemesis '" + a.kind + "' (expected greedy|occ|mincc)");
  }
  std::ostringstream body;
  body << "# " << name << '\n';
  cs::write_instance(body, events);
  if (a.output.empty()) {
    std::cout << body.str();
  } else {
    auto out = open_output(a.output);
    out << body.str();
  }
  return kExitOk;
}

// ---- opt -------------------------------------------------------------------

int run_opt(const std::string& path, const std::string& objective_name, const Common& c) {
  const auto events = load_instance(path);
  const auto graph = cs::OrderedGraph::from_events(events);
  const auto objective = cs::parse_objective(objective_name);
  const auto r = objective == cs::Objective::kMaxProfit ? cs::max_clique_partition(graph, c.budget())
                                                        : cs::min_cost_partition(graph, c.budget());
  if (!r.proven_optimal) throw cs::BudgetExceeded("node limit reached before optimality was proven");
  cs::Json j;
  j["instance"] = path;
  j["vertices"] = graph.size();
  j["edges"] = graph.edge_count();
  j["objective"] = std::string(cs::to_string(objective));
  j["value"] = r.value;
  j["nodes"] = r.nodes;
  j["clusters"] = clusters_json(r.clustering.partition());
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

// ---- skeleton --------------------------------------------------------------

struct SkeletonArgs {
  Common common;
  std::size_t depth = 2;
  std::optional<std::size_t> rounds;
  std::uint64_t seed = 1;
  double keep = 0.7;
  bool subtrees = false;
  std::string output;
};

int run_skeleton(const SkeletonArgs& a) {
  std::unique_ptr<cs::OnlineStrategy> strategy;
  if (a.common.strategy == "always-collect") {
    strategy = std::make_unique<cs::AlwaysCollectStrategy>();
  } else if (a.common.strategy == "selective-collect") {
    strategy = std::make_unique<cs::SelectiveCollectStrategy>(a.seed, a.keep);
  } else {
    strategy = cs::make_strategy(a.common.strategy, a.common.gamma, a.common.budget());
  }
  cs::SkeletonOptions options;
  options.core_depth = a.depth;
  options.round_budget = a.rounds;
  const auto game = cs::play_skeleton_game(*strategy, options);
  const auto& rep = game.report;

  cs::Json j;
  j["strategy"] = game.strategy;
  j["core_depth"] = a.depth;
  j["rounds"] = game.round_count;
  j["stop"] = std::string(cs::to_string(game.stop));
  j["tree_nodes"] = game.tree.size();
  j["vertices"] = game.tree.vertex_count();
  j["edges"] = game.tree.edge_count();
  j["adversary_profit"] = rep.adversary_profit;
  j["strategy_profit"] = rep.strategy_profit;
  j["final_strategy_profit"] = game.final_strategy_profit;
  j["ratio"] = {{"num", rep.ratio.num()}, {"den", rep.ratio.den()}, {"value", rep.ratio.to_string(6)}};
  j["max_tentacle"] = rep.max_tentacle;
  j["epsilon"] = rep.epsilon;
  j["bound"] = 6.0 - rep.epsilon;
  j["checked_rounds"] = game.rounds.size();
  if (a.subtrees) {
    cs::Json list = cs::Json::array();
    for (const auto& st : rep.subtrees) {
      list.push_back({{"node", st.node},
                      {"depth", game.tree.node(st.node).depth},
                      {"O", st.adversary_profit},
                      {"S", st.strategy_profit},
                      {"h", st.core_depth},
                      {"s", st.tentacle},
                      {"deep", st.deep}});
    }
    j["subtrees"] = std::move(list);
  }
  if (a.output.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    auto out = open_output(a.output);
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

// ---- table / formula -------------------------------------------------------

cs::OccParameters resolve_params(const std::string& preset, std::optional<double> gamma,
                                 std::optional<double> x) {
  cs::OccParameters p = cs::preset_by_name(preset);
  if (gamma) p.gamma = *gamma;
  if (x) p.x = *x;
  return p;
}

int run_table(const cs::OccParameters& p, std::size_t J, bool csv) {
  const auto rows = cs::recurrence_table(p.gamma, p.x, J);
  if (csv) {
    std::cout << "j,delta_min,delta_max,s_min,s_max,r_prime\n";
    for (const auto& r : rows) {
      std::cout << r.j << ',' << r.delta_min << ',' << r.delta_max << ',' << r.s_min << ','
                << r.s_max << ',' << cs::format_bound(r.r_prime) << '\n';
    }
    return kExitOk;
  }
  std::cout << std::setw(3) << "j" << std::setw(16) << "delta" << std::setw(20) << "S"
            << std::setw(10) << "R'" << '\n';
  for (const auto& r : rows) {
    std::cout << std::setw(3) << r.j << std::setw(16)
              << (std::to_string(r.delta_min) + "/" + std::to_string(r.delta_max))
              << std::setw(20) << (std::to_string(r.s_min) + "/" + std::to_string(r.s_max))
              << std::setw(10) << cs::format_bound(r.r_prime) << '\n';
  }
  return kExitOk;
}

int run_formula(const cs::OccParameters& p) {
  static constexpr const char* kCase[] = {"low", "middle", "high"};
  std::cout << std::fixed << std::setprecision(6);
  std::cout << "gamma " << p.gamma << "\nx " << p.x << '\n';
  std::cout << "asymptotic_R " << cs::asymptotic_R(p.gamma, p.x) << '\n';
  std::cout << "occ_lb " << cs::occ_lb_formula(p.gamma) << " ("
            << kCase[static_cast<int>(cs::occ_lb_case(p.gamma))] << " case)\n";
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const std::string& suite, const cs::VerifyOptions& opt, const std::string& json_path) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = cs::suite_names();
  } else {
    const auto& known = cs::suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
      throw UsageError("unknown suite '" + suite + "'");
    }
    names = {suite};
  }
  cs::Json all = cs::Json::array();
  bool ok = true;
  for (const auto& n : names) {
    const auto r = cs::run_suite(n, opt);
    ok = ok && r.passed();
    for (const auto& c : r.checks) {
      std::cerr << (c.passed ? "PASS " : "FAIL ") << r.suite << ": " << c.name
                << (c.detail.empty() ? "" : " [" + c.detail + "]") << '\n';
    }
    all.push_back(r.to_json());
  }
  cs::Json summary{{"passed", ok}, {"suites", std::move(all)}};
  std::cout << summary.dump(2) << '\n';
  if (!json_path.empty()) {
    auto out = open_output(json_path);
    out << summary.dump(2) << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online clique clustering workbench"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Play a strategy against an instance");
  simulate->add_option("--strategy", sim.common.strategy, "greedy | greedy-np | occ");
  simulate->add_option("--gamma", sim.common.gamma, "Doubling parameter of occ and the occ nemesis");
  simulate->add_option("--nemesis", sim.nemesis, "greedy | occ | mincc");
  simulate->add_option("--instance", sim.instance, "Instance file");
  simulate->add_option("--n", sim.n, "Vertex count (greedy, mincc)");
  simulate->add_option("--phases", sim.phases, "Number of phases (occ)");
  simulate->add_option("--variant", sim.variant, "plain | triangle (occ)");
  simulate->add_option("--beta", sim.beta, "Pairs released minus one (mincc)");
  simulate->add_option("--objective", sim.objective, "max | min");
  simulate->add_option("--opt", sim.opt, "exact | analytic | auto");
  simulate->add_option("--trace", sim.trace_path, "Write the JSON trace here");
  simulate->add_option("--csv", sim.csv_path, "Write the CSV trace here");
  simulate->add_option("--seed", sim.seed, "Recorded in the trace metadata");
  add_budget_options(simulate, sim.common);

  NemesisArgs nem;
  auto* nemesis = app.add_subcommand("nemesis", "Write a lower-bound instance file");
  nemesis->add_option("kind", nem.kind, "greedy | occ | mincc")->required();
  nemesis->add_option("--strategy", nem.common.strategy, "Strategy the mincc game is played against");
  nemesis->add_option("--gamma", nem.common.gamma, "Doubling parameter (occ)");
  nemesis->add_option("--n", nem.n, "Vertex count (greedy, mincc)");
  nemesis->add_option("--phases", nem.phases, "Number of phases (occ)");
  nemesis->add_option("--variant", nem.variant, "plain | triangle (occ)");
  nemesis->add_option("--beta", nem.beta, "Pairs released minus one (mincc)");
  nemesis->add_option("-o,--output", nem.output, "Output file (default stdout)");
  add_budget_options(nemesis, nem.common);

  Common opt_common;
  std::string opt_instance;
  std::string opt_objective = "max";
  auto* opt = app.add_subcommand("opt", "Solve an instance offline");
  opt->add_option("--instance", opt_instance, "Instance file")->required();
  opt->add_option("--objective", opt_objective, "max | min");
  add_budget_options(opt, opt_common);

  SkeletonArgs sk;
  sk.common.strategy = "greedy";
  auto* skeleton = app.add_subcommand("skeleton", "Play the adaptive skeleton-tree game");
  skeleton->add_option("--strategy", sk.common.strategy,
                       "greedy | greedy-np | occ | always-collect | selective-collect");
  skeleton->add_option("--depth", sk.depth, "Core depth D");
  skeleton->add_option("--rounds", sk.rounds, "Round budget (default 10 * 2^D)");
  skeleton->add_option("--seed", sk.seed, "Seed (selective-collect)");
  skeleton->add_option("--keep", sk.keep, "Collect probability (selective-collect)");
  skeleton->add_option("--gamma", sk.common.gamma, "Doubling parameter (occ)");
  skeleton->add_flag("--subtrees", sk.subtrees, "Include per-subtree values");
  skeleton->add_option("-o,--output", sk.output, "Output file (default stdout)");

  std::string preset = "asymptotic";
  std::optional<double> t_gamma, t_x;
  std::size_t J = 8;
  bool csv = false;
  auto* table = app.add_subcommand("table", "Phase bounds and ratio recurrence");
  table->add_option("--preset", preset, "asymptotic | absolute");
  table->add_option("--gamma", t_gamma, "Override gamma");
  table->add_option("--x", t_x, "Override x");
  table->add_option("--J", J, "Last phase");
  table->add_flag("--csv", csv, "CSV output");

  std::string f_preset = "asymptotic";
  std::optional<double> f_gamma, f_x;
  auto* formula = app.add_subcommand("formula", "Closed-form ratio bounds");
  formula->add_option("--preset", f_preset, "asymptotic | absolute");
  formula->add_option("--gamma", f_gamma, "Override gamma");
  formula->add_option("--x", f_x, "Override x");

  std::string suite;
  std::string verify_json;
  cs::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite,
                     "profvalue | table | solver-oracle | greedy-small | skeleton-lemmas | "
                     "mincc-bound | occ-mechanics | all")
      ->required();
  verify->add_option("--nmax", vopt.nmax, "Largest random graph (solver-oracle)");
  verify->add_option("--samples", vopt.samples, "Random samples per check");
  verify->add_option("--seed", vopt.seed, "Base seed");
  verify->add_option("--json", verify_json, "Also write the summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*simulate) return run_simulate(sim);
    if (*nemesis) return run_nemesis(nem);
    if (*opt) return run_opt(opt_instance, opt_objective, opt_common);
    if (*skeleton) return run_skeleton(sk);
    if (*table) return run_table(resolve_params(preset, t_gamma, t_x), J, csv);
    if (*formula) return run_formula(resolve_params(f_preset, f_gamma, f_x));
    if (*verify) return run_verify(suite, vopt, verify_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cs::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cs::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cs::BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
