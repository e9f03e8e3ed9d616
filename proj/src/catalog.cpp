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


#include "decon/catalog.hpp"

#include <cmath>
#include <string>

#include "decon/edge_list.hpp"
#include "decon/errors.hpp"
#include "decon/metrics.hpp"
#include "decon/script.hpp"
#include "decon/strategies.hpp"
#include "decon/tree.hpp"

namespace decon {
namespace {

int ceil_times_sqrt(double c, int n) {
  return static_cast<int>(std::ceil(c * std::sqrt(static_cast<double>(n)) - 1e-9));
}

std::unique_ptr<Policy> scripted(MoveScript s) {
  return std::make_unique<ScriptPolicy>(std::move(s));
}

void require(bool ok, std::string_view name, std::string_view what) {
  if (!ok) {
    throw ApplicabilityError(std::string(name) + " needs " + std::string(what));
  }
}

void need_tree(const Instance& inst, std::string_view name) {
  require(inst.graph.is_tree() && inst.graph.order() >= 2, name,
          "a tree on at least 2 vertices");
}

TreeView centred(const Instance& inst) {
  return TreeView::rooted(inst.graph, center_vertex(inst.graph));
}

bool is_binary(const TreeView& t) {
  if (t.children(t.root()).size() != 2 || t.height() < 2) return false;
  for (Vertex v : t.members()) {
    if (t.children(v).size() > 2) return false;
  }
  return true;
}

std::pair<int, int> mesh_sides(const Instance& inst) {
  return {inst.desc.params.at(0), inst.desc.params.at(1)};
}

std::vector<StrategyEntry> build() {
  std::vector<StrategyEntry> c;

  c.push_back({"path-sweep", Rule::strict, true,
               [](const Instance& i) {
                 require(is_path_graph(i.graph), "path-sweep", "a path");
               },
               [](const Instance&) { return 0; },
               [](const Instance& i, const Rules&) {
                 return scripted(path_sweep(i.graph));
               }});

  c.push_back({"cycle-sweep", Rule::strict, false,
               [](const Instance& i) {
                 require(is_cycle_graph(i.graph) && i.graph.order() >= 4,
                         "cycle-sweep", "a cycle on at least 4 vertices");
               },
               [](const Instance&) { return 2; },
               [](const Instance& i, const Rules&) {
                 return scripted(cycle_sweep(i.graph));
               }});

  c.push_back({"complete-seq", Rule::strict, true,
               [](const Instance& i) {
                 require(is_complete_graph(i.graph), "complete-seq",
                         "a complete graph");
               },
               [](const Instance& i) { return i.graph.order() - 1; },
               [](const Instance& i, const Rules&) {
                 return scripted(complete_sequential(i.graph));
               }});

  c.push_back({"bipartite-interleave", Rule::lenient, true,
               [](const Instance& i) {
                 auto sides = complete_bipartite_sides(i.graph);
                 require(sides && sides->first.size() >= 3,
                         "bipartite-interleave", "K_{m,n} with 3 <= m <= n");
               },
               [](const Instance& i) {
                 auto sides = complete_bipartite_sides(i.graph);
                 return 2 * static_cast<int>(sides->first.size()) - 1;
               },
               [](const Instance& i, const Rules&) {
                 return scripted(bipartite_interleaved(i.graph));
               }});

  c.push_back({"star-shuttle", Rule::lenient, true,
               [](const Instance& i) {
                 require(star_center(i.graph).has_value(), "star-shuttle",
                         "a star with at least 2 leaves");
               },
               [](const Instance&) { return 1; },
               [](const Instance& i, const Rules&) {
                 return scripted(star_shuttle(i.graph));
               }});

  c.push_back({"spider-iter", Rule::strict, std::nullopt,
               [](const Instance& i) {
                 require(spider_root(i.graph).has_value(), "spider-iter",
                         "a spider");
               },
               [](const Instance& i) {
                 Vertex root = *spider_root(i.graph);
                 auto arms = spider_arms(i.graph, root);
                 return spider_tau(static_cast<int>(arms.size()),
                                   static_cast<int>(arms.front().size()));
               },
               [](const Instance& i, const Rules&) -> std::unique_ptr<Policy> {
                 Vertex root = *spider_root(i.graph);
                 return std::make_unique<SpiderPolicy>(
                     i.graph, root, spider_arms(i.graph, root));
               }});

  c.push_back({"spider-sqrt", Rule::strict, std::nullopt,
               [](const Instance& i) {
                 require(spider_root(i.graph).has_value(), "spider-sqrt",
                         "a spider");
               },
               [](const Instance& i) {
                 return ceil_times_sqrt(4, i.graph.order());
               },
               [](const Instance& i, const Rules&) -> std::unique_ptr<Policy> {
                 return std::make_unique<SpiderSqrtPolicy>(
                     i.graph, *spider_root(i.graph));
               }});

  c.push_back({"kary-inorder", Rule::lenient, true,
               [](const Instance& i) { need_tree(i, "kary-inorder"); },
               [](const Instance& i) { return 2 * centred(i).height() - 1; },
               [](const Instance& i, const Rules&) {
                 return scripted(kary_inorder(centred(i)));
               }});

  c.push_back({"binary-2phase", Rule::lenient, true,
               [](const Instance& i) {
                 need_tree(i, "binary-2phase");
                 require(is_binary(centred(i)), "binary-2phase",
                         "a binary tree of height >= 2 whose centre has two "
                         "children");
               },
               [](const Instance& i) { return 2 * centred(i).height() - 3; },
               [](const Instance& i, const Rules&) {
                 return scripted(binary_two_phase(centred(i)));
               }});

  c.push_back({"mesh-column", Rule::strict, false,
               [](const Instance& i) {
                 require(i.desc.family == Family::mesh, "mesh-column",
                         "a mesh:p,q topology");
               },
               [](const Instance& i) {
                 auto [p, q] = mesh_sides(i);
                 int side = std::min(p, q);
                 return side == 1 ? 0 : side;
               },
               [](const Instance& i, const Rules&) {
                 auto [p, q] = mesh_sides(i);
                 return scripted(mesh_column_sweep(p, q).script);
               }});

  c.push_back({"tree-smallh", Rule::strict, true,
               [](const Instance& i) { need_tree(i, "tree-smallh"); },
               [](const Instance& i) { return 3 * centred(i).height(); },
               [](const Instance& i, const Rules& r) -> std::unique_ptr<Policy> {
                 return std::make_unique<SubtreeSweepPolicy>(centred(i),
                                                             r.flip_threshold());
               }});

  c.push_back({"tree-sqrt", Rule::strict, std::nullopt,
               [](const Instance& i) { need_tree(i, "tree-sqrt"); },
               [](const Instance& i) {
                 return ceil_times_sqrt(30, i.graph.order());
               },
               [](const Instance& i, const Rules& r) -> std::unique_ptr<Policy> {
                 return std::make_unique<TreeSqrtPolicy>(i.graph, r);
               }});

  c.push_back({"dfs", Rule::strict, true,
               [](const Instance&) {},
               [](const Instance& i) { return 2 * (i.graph.order() - 1); },
               [](const Instance& i, const Rules&) {
                 return scripted(generic_dfs(i.graph));
               }});

  c.push_back({"terminal", Rule::strict, std::nullopt,
               [](const Instance&) {},
               [](const Instance& i) { return i.graph.order() - 1; },
               [](const Instance& i, const Rules&) -> std::unique_ptr<Policy> {
                 return std::make_unique<TerminalPolicy>(i.graph);
               }});

  c.push_back({"kahn-star", Rule::strict, std::nullopt,
               [](const Instance& i) {
                 require(i.desc.family == Family::kahn_pair && i.desc.kahn_star,
                         "kahn-star", "a kahn-star:a,L topology");
               },
               [](const Instance&) { return 2; },
               [](const Instance& i, const Rules&) {
                 return scripted(kahn_star_strategy(
                     i.graph, i.desc.params.at(0), i.desc.params.at(1)));
               }});
  return c;
}

}  // namespace

Instance Instance::make(TopologyDescriptor desc) {
  Graph g = generate(desc);
  return {std::move(desc), std::move(g)};
}

const std::vector<StrategyEntry>& catalog() {
  static const std::vector<StrategyEntry> entries = build();
  return entries;
}

const StrategyEntry& find_strategy(std::string_view name) {
  for (const StrategyEntry& e : catalog()) {
    if (e.name == name) return e;
  }
  throw ParameterError("unknown strategy '" + std::string(name) + "'");
}

RunResult run_strategy(const StrategyEntry& strategy, const Instance& inst,
                       const Rules& rules, std::optional<int> tick_budget) {
  strategy.check(inst);
  if (rules.tau < 0) throw ContractError("tau must be >= 0");
  auto policy = strategy.make(inst, rules);
  int budget = tick_budget.value_or(default_tick_budget(inst.graph.order(), rules.tau));
  return run(inst.graph, *policy, rules, budget, strategy.name);
}

CrossCheck cross_check(const Instance& inst, const StrategyEntry& strategy,
                       SemanticVariant variant, const OracleOptions& options) {
  strategy.check(inst);
  CrossCheck c;
  c.strategy = std::string(strategy.name);
  c.strategy_tau = strategy.stated_tau(inst);
  OracleResult o = immunity_number(inst.graph, variant, std::nullopt, options);
  if (!o.iota) throw std::logic_error("oracle found no feasible tau");
  c.oracle_iota = *o.iota;
  c.gap = c.strategy_tau - c.oracle_iota;
  c.consistent = c.oracle_iota <= c.strategy_tau;
  Rules rules{c.strategy_tau, variant};
  c.strategy_succeeds =
      run_strategy(strategy, inst, rules).outcome.verdict == Verdict::fully_clean;
  return c;
}

}  // namespace decon
