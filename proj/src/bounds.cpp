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


#include "decon/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "decon/catalog.hpp"
#include "decon/errors.hpp"

namespace decon {
namespace {

std::string formula(const std::string& text, int value) {
  return text + "=" + std::to_string(value);
}

int ceil_times_sqrt(double c, int n) {
  return static_cast<int>(std::ceil(c * std::sqrt(static_cast<double>(n)) - 1e-9));
}

BoundsRow measure(std::string label, std::string upper, std::string lower,
                  TopologyDescriptor desc, std::string_view strategy,
                  const OracleOptions& oracle) {
  const StrategyEntry& s = find_strategy(strategy);
  Instance inst = Instance::make(std::move(desc));
  BoundsRow row;
  row.label = std::move(label);
  row.upper = std::move(upper);
  row.lower = std::move(lower);
  row.instance = to_string(inst.desc);
  row.strategy = std::string(strategy);
  row.variant = std::string(to_string(s.variant));
  row.tau = s.stated_tau(inst);
  Rules rules{row.tau, {s.variant, false}};
  RunResult r = run_strategy(s, inst, rules);
  row.success = r.outcome.verdict == Verdict::fully_clean;
  row.ticks = r.outcome.ticks_used;
  row.monotone = r.outcome.monotone;
  try {
    row.iota = immunity_number(inst.graph, rules.variant, std::nullopt, oracle).iota;
  } catch (const ResourceError&) {
    row.iota.reset();
  }
  return row;
}

std::string iota_text(const BoundsRow& r) {
  return r.iota ? std::to_string(*r.iota) : "?";
}

}  // namespace

std::vector<BoundsRow> bounds_table(const BoundsOptions& o) {
  std::vector<BoundsRow> rows;
  const auto& oracle = o.oracle;
  rows.push_back(measure("Path P_n", "0", "0",
                         TopologyDescriptor::path(o.path_n), "path-sweep", oracle));
  rows.push_back(measure("Cycle C_n", "2", "2",
                         TopologyDescriptor::cycle(o.cycle_n), "cycle-sweep", oracle));
  rows.push_back(measure("Complete K_n", formula("n-1", o.complete_n - 1),
                         formula("n-1", o.complete_n - 1),
                         TopologyDescriptor::complete(o.complete_n),
                         "complete-seq", oracle));
  const int m = std::min(o.bipartite_m, o.bipartite_n);
  rows.push_back(measure("Complete bipartite K_m,n",
                         formula("2(m-1)", 2 * (m - 1)),
                         formula("2(m-1)", 2 * (m - 1)),
                         TopologyDescriptor::complete_bipartite(o.bipartite_m,
                                                                o.bipartite_n),
                         "bipartite-interleave", oracle));
  int spider_n = 0;
  for (int len : o.spider_arms) spider_n += len;
  rows.push_back(measure("Spider on n+1 vertices",
                         formula("4sqrt(n)", ceil_times_sqrt(4, spider_n)), "-",
                         TopologyDescriptor::spider(o.spider_arms),
                         "spider-sqrt", oracle));
  rows.push_back(measure("Tree on n vertices",
                         formula("30sqrt(n)", ceil_times_sqrt(30, o.tree_n)), "-",
                         TopologyDescriptor::random_tree(o.tree_n, o.seed),
                         "tree-sqrt", oracle));
  const int side = std::min(o.mesh_p, o.mesh_q);
  rows.push_back(measure("Mesh m x n", formula("m", side),
                         formula("m/2", side / 2),
                         TopologyDescriptor::mesh(o.mesh_p, o.mesh_q),
                         "mesh-column", oracle));
  const int planar_n = o.planar_side * o.planar_side;
  rows.push_back(measure("Planar on n vertices", formula("n-1", planar_n - 1),
                         "Omega(sqrt(n))",
                         TopologyDescriptor::mesh(o.planar_side, o.planar_side),
                         "terminal", oracle));
  rows.push_back(measure("General graph", formula("n-1", o.general_n - 1),
                         formula("n-1", o.general_n - 1) + " (K_n)",
                         TopologyDescriptor::random_graph(o.general_n,
                                                          o.general_extra, o.seed),
                         "terminal", oracle));
  return rows;
}

void write_bounds_text(std::ostream& out, const std::vector<BoundsRow>& rows) {
  const char* head[] = {"topology", "upper", "lower", "instance", "strategy",
                        "variant", "tau", "result", "ticks", "monotone", "iota"};
  std::vector<std::vector<std::string>> cells;
  cells.emplace_back(std::begin(head), std::end(head));
  for (const BoundsRow& r : rows) {
    cells.push_back({r.label, r.upper, r.lower, r.instance, r.strategy,
                     r.variant, std::to_string(r.tau),
                     r.success ? "fully_clean" : "budget_exhausted",
                     std::to_string(r.ticks), r.monotone ? "true" : "false",
                     iota_text(r)});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
    }
    out << '\n';
  }
}

void write_bounds_tsv(std::ostream& out, const std::vector<BoundsRow>& rows) {
  out << "topology\tupper\tlower\tinstance\tstrategy\tvariant\ttau\tresult\t"
         "ticks\tmonotone\tiota\n";
  for (const BoundsRow& r : rows) {
    out << r.label << '\t' << r.upper << '\t' << r.lower << '\t' << r.instance
        << '\t' << r.strategy << '\t' << r.variant << '\t' << r.tau << '\t'
        << (r.success ? "fully_clean" : "budget_exhausted") << '\t' << r.ticks
        << '\t' << (r.monotone ? "true" : "false") << '\t' << iota_text(r)
        << '\n';
  }
}

}  // namespace decon
