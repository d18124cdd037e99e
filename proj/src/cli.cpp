#include "creach/cli.hpp"

#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "creach/decide.hpp"
#include "creach/experiment.hpp"
#include "creach/oracle.hpp"
#include "creach/tree.hpp"

namespace creach {

namespace {

int cmd_decide(const std::string& rules, const std::string& source, const std::string& dest,
               int min_steps_required, bool json, bool count_edges, bool no_prune,
               std::ostream& out) {
  RuleVector rv = parse_rule_vector(rules);
  Configuration S = parse_configuration(source);
  Configuration D = parse_configuration(dest);
  DecideOptions opts;
  opts.min_steps_required = min_steps_required;
  opts.prune_enabled = !no_prune;
  Decision d = decide(rv, S, D, opts);
  if (json) {
    nlohmann::json j;
    if (d.reachable) {
      j["outcome"] = "reachable";
      j["min_steps"] = d.min_steps;
    } else {
      j["outcome"] = "not_reachable";
      j["reason"] = to_string(d.reason);
      j["at_level"] = d.at_level;
    }
    if (count_edges) j["explored_edges"] = d.explored_edges;
    out << j.dump() << "\n";
  } else {
    if (d.reachable)
      out << "reachable min_steps=" << d.min_steps;
    else
      out << "not-reachable reason=" << to_string(d.reason) << " at_level=" << d.at_level;
    if (count_edges) out << " explored_edges=" << d.explored_edges;
    out << "\n";
  }
  return d.reachable ? 0 : 1;
}

void cmd_evolve(const std::string& rules, const std::string& state, u64 steps,
                std::ostream& out) {
  RuleVector rv = parse_rule_vector(rules);
  Configuration c = parse_configuration(state);
  check_lattice(rv, c);
  for (u64 k = 0; k < steps; ++k) {
    c = evolve(rv, c);
    out << to_string(c) << "\n";
  }
}

void cmd_trajectory(const std::string& rules, const std::string& state, std::ostream& out) {
  RuleVector rv = parse_rule_vector(rules);
  Trajectory t = trajectory(rv, parse_configuration(state));
  for (const Configuration& c : t.states) out << to_string(c) << "\n";
}

void cmd_leaves(const std::string& rules, bool list, std::ostream& out) {
  FullTree t = enumerate_full_tree(parse_rule_vector(rules));
  out << t.leaf_count << "\n";
  if (list)
    for (const Edge& e : t.levels.back().edges)
      out << to_string(Bits{e.path, t.levels.back().n}) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"configuration reachability in non-uniform elementary cellular automata"};
  app.require_subcommand(1);

  std::string rules, source, dest, state, input = "-";
  int min_steps_required = 0;
  u64 steps = 1;
  bool json = false, count_edges = false, no_prune = false, list = false;

  auto* decide_cmd = app.add_subcommand("decide", "is one configuration reachable from another");
  decide_cmd->add_option("--rules", rules, "rule vector, e.g. 9,170,195,80")->required();
  decide_cmd->add_option("--source", source, "source configuration")->required();
  decide_cmd->add_option("--dest", dest, "destination configuration")->required();
  decide_cmd->add_option("--min-steps", min_steps_required, "0 allows zero steps, 1 demands at least one")
      ->check(CLI::Range(0, 1));
  decide_cmd->add_flag("--json", json, "emit the decision as JSON");
  decide_cmd->add_flag("--count-edges", count_edges, "include the explored-edge count");
  decide_cmd->add_flag("--no-prune", no_prune, "keep non-surviving edges between levels");

  auto* evolve_cmd = app.add_subcommand("evolve", "step a configuration forward");
  evolve_cmd->add_option("--rules", rules)->required();
  evolve_cmd->add_option("--state", state)->required();
  evolve_cmd->add_option("--steps", steps, "number of steps (default 1)");

  auto* traj_cmd = app.add_subcommand("trajectory", "orbit until the first repeated state");
  traj_cmd->add_option("--rules", rules)->required();
  traj_cmd->add_option("--state", state)->required();

  auto* stg_cmd = app.add_subcommand("stg", "state-transition graph as DOT");
  stg_cmd->add_option("--rules", rules)->required();

  auto* tree_cmd = app.add_subcommand("tree", "reachability tree as DOT");
  tree_cmd->add_option("--rules", rules)->required();

  auto* leaves_cmd = app.add_subcommand("leaves", "count of reachable configurations");
  leaves_cmd->add_option("--rules", rules)->required();
  leaves_cmd->add_flag("--list", list, "also print each reachable configuration");

  std::vector<int> sizes;
  SamplingParams params;
  bool serial = false;
  auto* exp_cmd = app.add_subcommand("experiment", "average explored edges over random CAs");
  exp_cmd->add_option("--sizes", sizes, "CA sizes, e.g. 10,20,30")->required()->delimiter(',');
  exp_cmd->add_option("--t-const", params.t_const, "confidence constant");
  exp_cmd->add_option("--rel-err", params.rel_err, "relative error");
  exp_cmd->add_option("--delta", params.delta, "convergence threshold");
  exp_cmd->add_option("--pilot", params.pilot_size, "pilot sample size");
  exp_cmd->add_option("--seed", params.rng_seed, "RNG seed");
  exp_cmd->add_option("--max-iter", params.max_iterations, "iteration cap");
  exp_cmd->add_option("--ca-pop-cap", params.ca_pop_cap, "cap on the rule-vector population");
  exp_cmd->add_flag("--pair-pop-squared", params.pair_pop_squared, "pair population 4^n instead of 2^n");
  exp_cmd->add_flag("--serial", serial, "use the serial reference kernels");

  auto* growth_cmd = app.add_subcommand("growth", "pairwise power-law exponents from n,e CSV");
  growth_cmd->add_option("--input", input, "CSV file, - for stdin");

  try {
    app.parse(argc, argv);
    if (decide_cmd->parsed())
      return cmd_decide(rules, source, dest, min_steps_required, json, count_edges, no_prune, out);
    if (evolve_cmd->parsed()) {
      cmd_evolve(rules, state, steps, out);
    } else if (traj_cmd->parsed()) {
      cmd_trajectory(rules, state, out);
    } else if (stg_cmd->parsed()) {
      out << stg_to_dot(build_stg(parse_rule_vector(rules)));
    } else if (tree_cmd->parsed()) {
      out << tree_to_dot(enumerate_full_tree(parse_rule_vector(rules)));
    } else if (leaves_cmd->parsed()) {
      cmd_leaves(rules, list, out);
    } else if (exp_cmd->parsed()) {
      params.threads = serial ? 1 : 0;
      std::vector<ExperimentReport> reports;
      for (int n : sizes) {
        reports.push_back(avg_explored_edges(n, params));
        const ExperimentReport& r = reports.back();
        err << "# n=" << r.ca_size << " m_pairs=" << r.m_pairs << " m_cas=" << r.m_cas
            << " iterations=" << r.iterations << " avg=" << r.final_avg_edges << "\n";
        for (const std::string& w : r.warnings) err << "# warning: " << w << "\n";
      }
      out << to_csv(reports);
    } else if (growth_cmd->parsed()) {
      std::vector<GrowthPoint> pts;
      if (input == "-") {
        pts = parse_growth_csv(std::cin);
      } else {
        std::ifstream f(input);
        if (!f) throw std::invalid_argument("cannot open '" + input + "'");
        pts = parse_growth_csv(f);
      }
      out << to_csv(fit_growth(std::move(pts)));
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("creach");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace creach
