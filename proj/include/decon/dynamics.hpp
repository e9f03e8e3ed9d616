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

#ifndef DECON_DYNAMICS_HPP_
#define DECON_DYNAMICS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decon/graph.hpp"

namespace decon {

// When a clean, unoccupied vertex flips back to contaminated.
//   strict:  once its exposure count reaches tau
//   lenient: once its exposure count exceeds tau
// With tau == 0 both flip any vertex exposed for a single tick.
enum class Rule { strict, lenient };

std::string_view to_string(Rule rule);
Rule parse_rule(std::string_view text);

struct SemanticVariant {
  Rule rule = Rule::strict;
  bool allow_stay = false;

  friend bool operator==(const SemanticVariant&, const SemanticVariant&) = default;
};

struct Rules {
  int tau = 0;
  SemanticVariant variant;

  // Smallest exposure count at which a vertex flips.
  int flip_threshold() const {
    if (variant.rule == Rule::lenient) return tau + 1;
    return tau < 1 ? 1 : tau;
  }
};

// Full world state after `tick` transitions.
struct SimState {
  int tick = 0;
  std::vector<Vertex> agent_at;
  std::vector<std::uint8_t> contaminated;  // 1 = contaminated
  std::vector<int> exposure;               // 0 for contaminated vertices

  bool is_clean(Vertex v) const { return contaminated[v] == 0; }
  int clean_count() const;
  bool all_clean() const { return clean_count() == static_cast<int>(contaminated.size()); }

  friend bool operator==(const SimState&, const SimState&) = default;
};

struct TickRecord {
  int tick = 0;  // tick reached by this transition
  std::vector<Vertex> moves;
  std::vector<Vertex> cleaned;         // ascending
  std::vector<Vertex> recontaminated;  // ascending
  int clean_count = 0;
  std::uint64_t exposure_digest = 0;

  friend bool operator==(const TickRecord&, const TickRecord&) = default;
};

struct Trace {
  std::uint64_t graph_digest = 0;
  int tau = 0;
  SemanticVariant variant;
  std::string strategy;
  std::vector<Vertex> placements;
  std::vector<TickRecord> records;

  bool monotone() const;
  friend bool operator==(const Trace&, const Trace&) = default;
};

enum class Verdict { fully_clean, budget_exhausted };
std::string_view to_string(Verdict verdict);

struct Outcome {
  Verdict verdict = Verdict::budget_exhausted;
  int ticks_used = 0;
  int peak_clean = 0;
  bool monotone = true;
  int max_exposure = 0;
};

// Tick 0: the placement vertices are clean with zero exposure, everything
// else is contaminated. Throws ContractError on an empty or invalid
// placement or a negative tau.
SimState init(const Graph& g, std::span<const Vertex> placements, int tau,
              SemanticVariant variant = {});

// Applies transitions in place. Keeps per-vertex contaminated-neighbor
// counts and the set of clean vertices that are exposed or carry exposure,
// so a tick costs time proportional to the contamination frontier.
//
// One tick runs four phases:
//   1. agents move in index order; each destination becomes clean, Xi := 0
//   2. every clean unoccupied vertex with a contaminated neighbor gets
//      Xi += 1, every other clean vertex gets Xi := 0 (contamination as of
//      the end of phase 1)
//   3. all vertices at the flip threshold become contaminated at once
//   4. tick += 1
class Simulator {
 public:
  Simulator(const Graph& g, Rules rules, SimState state);

  const SimState& state() const { return state_; }
  const Rules& rules() const { return rules_; }
  std::uint64_t exposure_digest() const { return digest_; }

  // Throws ContractError naming the agent and the edge on an illegal move.
  TickRecord advance(std::span<const Vertex> moves);

 private:
  void set_exposure(Vertex v, int value);
  void activate(Vertex v);

  const Graph* graph_;
  Rules rules_;
  SimState state_;
  std::vector<int> dirty_neighbors_;
  std::vector<int> occupancy_;
  std::vector<Vertex> active_;
  std::vector<std::uint8_t> in_active_;
  std::uint64_t digest_ = 0;
};

// Pure form of one transition.
std::pair<SimState, TickRecord> step(const Graph& g, const Rules& rules,
                                     const SimState& state,
                                     std::span<const Vertex> moves);

// Weighted sum of exposures; changes whenever any exposure changes.
std::uint64_t exposure_digest(std::span<const int> exposure);

// A single-agent movement policy. Implementations see the full state.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual Vertex placement() = 0;
  // Next destination, or nullopt when the policy has nothing left to do.
  virtual std::optional<Vertex> next(const SimState& state) = 0;
};

struct RunResult {
  Outcome outcome;
  Trace trace;
  SimState final_state;
};

int default_tick_budget(int n, int tau);

// Drives `policy` until the graph is fully clean, the budget is spent, or
// the policy stops. A policy that stops early counts as budget_exhausted.
RunResult run(const Graph& g, Policy& policy, Rules rules, int tick_budget,
              std::string_view strategy_name = {});

// Re-applies the recorded moves from the recorded placement.
SimState replay(const Graph& g, const Trace& trace);

// Line format:
//   # trace graph=<hex> tau=<t> variant=<rule> allow_stay=<0|1>
//     strategy=<name> placement=<csv>
//   <tick> <agent csv> cleaned=<csv> recontaminated=<csv> clean_count=<c>
void write_trace(std::ostream& out, const Trace& trace);
Trace read_trace(std::istream& in);

}  // namespace decon

#endif  // DECON_DYNAMICS_HPP_
