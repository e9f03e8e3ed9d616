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


#ifndef DECON_ORACLE_HPP_
#define DECON_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "decon/dynamics.hpp"
#include "decon/graph.hpp"
#include "decon/script.hpp"

namespace decon {

inline constexpr std::uint64_t kDefaultStateBudget = 500'000'000;

struct OracleOptions {
  // Upper bound on n * alphabet^n, the size of the encoded configuration
  // space. Must stay below 2^32.
  std::uint64_t state_budget = kDefaultStateBudget;
};

// Per-vertex symbols: 0 = contaminated, 1 + Xi = clean with exposure Xi.
// Exposure never reaches the flip threshold, so the alphabet has
// threshold + 1 symbols.
int oracle_alphabet(int tau, SemanticVariant variant);

// n * alphabet^n, saturating at UINT64_MAX.
std::uint64_t configuration_count(int n, int tau, SemanticVariant variant);

struct Feasibility {
  bool feasible = false;
  std::optional<MoveScript> witness;  // shortest, when feasible
  std::uint64_t states = 0;           // distinct configurations reached
};

// Breadth-first search from all n single-agent placements. Throws
// ResourceError when the configuration space exceeds the budget.
Feasibility feasible(const Graph& g, int tau, SemanticVariant variant,
                     const OracleOptions& options = {});

struct OracleResult {
  std::uint64_t graph_digest = 0;
  SemanticVariant variant;
  std::optional<int> iota;          // empty when no tau <= tau_max works
  std::vector<bool> feasible;       // indexed by tau, up to iota
  std::vector<std::uint64_t> states;
  std::optional<MoveScript> witness;
  std::uint64_t explored = 0;
  double seconds = 0;
};

// Linear scan over tau = 0, 1, ..., tau_max (default 2(n - 1)).
OracleResult immunity_number(const Graph& g, SemanticVariant variant,
                             std::optional<int> tau_max = std::nullopt,
                             const OracleOptions& options = {});

}  // namespace decon

#endif  // DECON_ORACLE_HPP_
