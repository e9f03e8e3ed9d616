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


#ifndef DECON_SCRIPT_HPP_
#define DECON_SCRIPT_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "decon/dynamics.hpp"
#include "decon/graph.hpp"

namespace decon {

// A fixed single-agent schedule: where the agent starts and the destination
// of every tick. With `repeat` set the destination list is cycled forever.
struct MoveScript {
  Vertex placement = 0;
  std::vector<Vertex> moves;
  bool repeat = false;

  friend bool operator==(const MoveScript&, const MoveScript&) = default;
};

// Throws ContractError naming the first non-adjacent step.
void check_script(const Graph& g, const MoveScript& script);

// Text form:
//   placement=<v>
//   moves=<csv>
//   repeat=<0|1>
void write_script(std::ostream& out, const MoveScript& script);
MoveScript read_script(std::istream& in);

class ScriptPolicy : public Policy {
 public:
  explicit ScriptPolicy(MoveScript script) : script_(std::move(script)) {}

  Vertex placement() override { return script_.placement; }
  std::optional<Vertex> next(const SimState& state) override;

 private:
  MoveScript script_;
  std::size_t at_ = 0;
};

// Runs `policy` and keeps its moves as a script.
MoveScript record_script(const Graph& g, Policy& policy, const Rules& rules,
                         int tick_budget);

}  // namespace decon

#endif  // DECON_SCRIPT_HPP_
