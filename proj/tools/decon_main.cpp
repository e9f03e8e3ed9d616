// Copyright 2026 The decon Authors
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


#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "decon/bounds.hpp"
#include "decon/catalog.hpp"
#include "decon/edge_list.hpp"
#include "decon/errors.hpp"
#include "decon/generators.hpp"
#include "decon/matching.hpp"
#include "decon/oracle.hpp"
#include "decon/script.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitError = 1;
constexpr int kExitExhausted = 2;

struct TopoArgs {
  std::string topo;
  std::optional<std::uint64_t> seed;

  void add(CLI::App* app) {
    app->add_option("--topo", topo,
                    "Topology, e.g. path:5, mesh:4,6, spider:3,3,2, "
                    "random-tree:200,7, kahn-star:4,3, file:g.txt")
        ->required();
    app->add_option("--seed", seed, "Seed for random families");
  }

  decon::TopologyDescriptor descriptor() const {
    decon::TopologyDescriptor d = decon::parse_topology(topo);
    if (seed) d.seed = *seed;
    return d;
  }
};

struct VariantArgs {
  std::string variant;
  bool allow_stay = false;

  void add(CLI::App* app, const std::string& help) {
    app->add_option("--variant", variant, help)
        ->check(CLI::IsMember({"strict", "lenient"}));
    app->add_flag("--allow-stay", allow_stay, "Let the agent stay in place");
  }
};

int cmd_generate(const TopoArgs& topo, const std::string& out) {
  decon::Graph g = decon::generate(topo.descriptor());
  if (out.empty() || out == "-") {
    decon::write_edge_list(std::cout, g);
  } else {
    std::ofstream file(out);
    if (!file) throw decon::ParameterError("cannot write '" + out + "'");
    decon::write_edge_list(file, g);
  }
  return kExitClean;
}

int cmd_simulate(const TopoArgs& topo, const std::string& strategy_name,
                 const std::string& tau_text, const VariantArgs& va,
                 std::optional<int> budget, const std::string& trace_path) {
  const decon::StrategyEntry& s = decon::find_strategy(strategy_name);
  decon::Instance inst = decon::Instance::make(topo.descriptor());
  s.check(inst);
  int tau = 0;
  if (tau_text == "stated" || tau_text == "paper") {
    tau = s.stated_tau(inst);
  } else {
    try {
      std::size_t used = 0;
      tau = std::stoi(tau_text, &used);
      if (used != tau_text.size()) throw std::invalid_argument(tau_text);
    } catch (const std::logic_error&) {
      throw decon::ParameterError("--tau must be an integer or 'stated'");
    }
  }
  if (tau < 0) throw decon::ParameterError("--tau must be >= 0");
  decon::Rules rules{tau, {va.variant.empty() ? s.variant
                                              : decon::parse_rule(va.variant),
                           va.allow_stay}};
  decon::RunResult r = decon::run_strategy(s, inst, rules, budget);
  if (!trace_path.empty()) {
    std::ofstream file(trace_path);
    if (!file) throw decon::ParameterError("cannot write '" + trace_path + "'");
    decon::write_trace(file, r.trace);
  }
  std::cout << "result=" << decon::to_string(r.outcome.verdict)
            << " ticks=" << r.outcome.ticks_used
            << " monotone=" << (r.outcome.monotone ? "true" : "false")
            << " tau=" << tau
            << " variant=" << decon::to_string(rules.variant.rule) << '\n';
  return r.outcome.verdict == decon::Verdict::fully_clean ? kExitClean
                                                          : kExitExhausted;
}

int cmd_oracle(const TopoArgs& topo, const VariantArgs& va,
               std::optional<int> tau_max, std::uint64_t state_budget) {
  decon::Graph g = decon::generate(topo.descriptor());
  decon::SemanticVariant variant{
      va.variant.empty() ? decon::Rule::strict : decon::parse_rule(va.variant),
      va.allow_stay};
  decon::OracleOptions options;
  options.state_budget = state_budget;
  decon::OracleResult r = decon::immunity_number(g, variant, tau_max, options);
  for (std::size_t tau = 0; tau < r.feasible.size(); ++tau) {
    std::cout << "tau=" << tau
              << " feasible=" << (r.feasible[tau] ? "true" : "false")
              << " states=" << r.states[tau] << '\n';
  }
  std::cout << "iota=" << (r.iota ? std::to_string(*r.iota) : "none") << '\n';
  if (r.witness) decon::write_script(std::cout, *r.witness);
  return r.iota ? kExitClean : kExitExhausted;
}

int cmd_verify_matching(int side, const std::string& mode,
                        std::uint64_t samples, std::uint64_t seed) {
  decon::CutBoundOptions options;
  options.mode = mode == "sampled" ? decon::CheckMode::sampled
                                   : decon::CheckMode::exhaustive;
  options.samples = samples;
  options.seed = seed;
  decon::CutBoundReport report = decon::verify_cut_bound(side, options);
  decon::write_report(std::cout, report);
  return report.pass ? kExitClean : kExitExhausted;
}

int cmd_bounds_table(const decon::BoundsOptions& options,
                     const std::string& format) {
  auto rows = decon::bounds_table(options);
  if (format == "tsv") {
    decon::write_bounds_tsv(std::cout, rows);
  } else {
    decon::write_bounds_text(std::cout, rows);
  }
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-agent decontamination with temporal immunity"};
  app.require_subcommand(1);

  TopoArgs gen_topo;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Write a topology as an edge list");
  gen_topo.add(gen);
  gen->add_option("--out,-o", gen_out, "Output file (default stdout)");

  TopoArgs sim_topo;
  VariantArgs sim_variant;
  std::string strategy;
  std::string tau_text = "stated";
  std::optional<int> budget;
  std::string trace_path;
  auto* sim = app.add_subcommand("simulate", "Run a strategy");
  sim_topo.add(sim);
  sim->add_option("--strategy", strategy, "Strategy name")->required();
  sim->add_option("--tau", tau_text, "Temporal immunity, or 'stated' for the strategy's own bound");
  sim_variant.add(sim, "Recontamination rule (default: the strategy's own)");
  sim->add_option("--budget", budget, "Tick budget (default 8n(tau+2))")
      ->check(CLI::PositiveNumber);
  sim->add_option("--trace", trace_path, "Write the trace to this file");

  TopoArgs orc_topo;
  VariantArgs orc_variant;
  std::optional<int> tau_max;
  std::uint64_t state_budget = decon::kDefaultStateBudget;
  auto* orc = app.add_subcommand("oracle", "Exact immunity number by search");
  orc_topo.add(orc);
  orc_variant.add(orc, "Recontamination rule (default strict)");
  orc->add_option("--tau-max", tau_max, "Largest tau to try (default 2(n-1))");
  orc->add_option("--state-budget", state_budget,
                  "Largest configuration space to search");

  int side = 4;
  std::string mode = "exhaustive";
  std::uint64_t samples = 100'000;
  std::uint64_t seed = decon::kDefaultSeed;
  auto* mat = app.add_subcommand("verify-matching",
                                 "Check the mesh cut-matching bound");
  mat->add_option("--side", side, "Mesh side s");
  mat->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  mat->add_option("--samples", samples, "Subsets to draw in sampled mode");
  mat->add_option("--seed", seed, "Seed for sampled mode");

  decon::BoundsOptions bounds;
  std::string format = "text";
  std::vector<int> mesh_sides;
  auto* tab = app.add_subcommand("bounds-table",
                                 "Known bounds next to measured results");
  tab->add_option("--format", format)->check(CLI::IsMember({"text", "tsv"}));
  tab->add_option("--path-n", bounds.path_n);
  tab->add_option("--cycle-n", bounds.cycle_n);
  tab->add_option("--complete-n", bounds.complete_n);
  tab->add_option("--bipartite-m", bounds.bipartite_m);
  tab->add_option("--bipartite-n", bounds.bipartite_n);
  tab->add_option("--spider-arms", bounds.spider_arms)->delimiter(',');
  tab->add_option("--tree-n", bounds.tree_n);
  tab->add_option("--mesh", mesh_sides, "p,q")->delimiter(',')->expected(2);
  tab->add_option("--planar-side", bounds.planar_side);
  tab->add_option("--general-n", bounds.general_n);
  tab->add_option("--general-extra", bounds.general_extra);
  tab->add_option("--seed", bounds.seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_generate(gen_topo, gen_out);
    if (*sim) {
      return cmd_simulate(sim_topo, strategy, tau_text, sim_variant, budget,
                          trace_path);
    }
    if (*orc) return cmd_oracle(orc_topo, orc_variant, tau_max, state_budget);
    if (*mat) return cmd_verify_matching(side, mode, samples, seed);
    if (*tab) {
      if (mesh_sides.size() == 2) {
        bounds.mesh_p = mesh_sides[0];
        bounds.mesh_q = mesh_sides[1];
      }
      return cmd_bounds_table(bounds, format);
    }
  } catch (const decon::ApplicabilityError& e) {
    std::cerr << "applicability error: " << e.what() << '\n';
  } catch (const decon::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}
