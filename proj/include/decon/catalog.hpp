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


#ifndef DECON_CATALOG_HPP_
#define DECON_CATALOG_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "decon/dynamics.hpp"
#include "decon/generators.hpp"
#include "decon/graph.hpp"
#include "decon/oracle.hpp"

namespace decon {

// A generated graph together with the descriptor it came from. Policies made
// from an instance refer to its graph, so the instance must outlive them.
struct Instance {
  TopologyDescriptor desc;
  Graph graph;

  static Instance make(TopologyDescriptor desc);
};

struct StrategyEntry {
  std::string_view name;
  // Variant under which the strategy's stated tau is claimed.
  Rule variant = Rule::strict;
  // Claimed trace monotonicity, when the strategy makes a claim.
  std::optional<bool> monotone;
  // Throws ApplicabilityError when the instance is out of scope.
  std::function<void(const Instance&)> check;
  std::function<int(const Instance&)> stated_tau;
  std::function<std::unique_ptr<Policy>(const Instance&, const Rules&)> make;
};

const std::vector<StrategyEntry>& catalog();

// Throws ParameterError for an unknown name.
const StrategyEntry& find_strategy(std::string_view name);

// Checks applicability, then runs. The default budget is
// default_tick_budget(n, tau).
RunResult run_strategy(const StrategyEntry& strategy, const Instance& inst,
                       const Rules& rules,
                       std::optional<int> tick_budget = std::nullopt);

struct CrossCheck {
  std::string strategy;
  int strategy_tau = 0;
  int oracle_iota = 0;
  int gap = 0;                     // strategy_tau - oracle_iota
  bool strategy_succeeds = false;  // at strategy_tau under `variant`
  bool consistent = false;         // oracle_iota <= strategy_tau
};

CrossCheck cross_check(const Instance& inst, const StrategyEntry& strategy,
                       SemanticVariant variant,
                       const OracleOptions& options = {});

}  // namespace decon

#endif  // DECON_CATALOG_HPP_
