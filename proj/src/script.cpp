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


#include "decon/script.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "decon/errors.hpp"

namespace decon {

void check_script(const Graph& g, const MoveScript& script) {
  if (!g.contains(script.placement)) {
    throw ContractError("script: placement " +
                        std::to_string(script.placement) + " is not a vertex");
  }
  Vertex at = script.placement;
  for (std::size_t i = 0; i < script.moves.size(); ++i) {
    Vertex to = script.moves[i];
    if (!g.contains(to) || !g.has_edge(at, to)) {
      throw ContractError("script: step " + std::to_string(i) + " (" +
                          std::to_string(at) + "," + std::to_string(to) +
                          ") is not an edge");
    }
    at = to;
  }
  if (script.repeat && !script.moves.empty() &&
      !g.has_edge(at, script.moves.front())) {
    throw ContractError("script: repeated schedule does not close up");
  }
}

void write_script(std::ostream& out, const MoveScript& script) {
  out << "placement=" << script.placement << "\nmoves=";
  for (std::size_t i = 0; i < script.moves.size(); ++i) {
    if (i) out << ',';
    out << script.moves[i];
  }
  out << "\nrepeat=" << (script.repeat ? 1 : 0) << '\n';
}

MoveScript read_script(std::istream& in) {
  MoveScript script;
  std::string line;
  bool have_placement = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("script: malformed line '" + line + "'");
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "placement") {
      script.placement = std::stoi(value);
      have_placement = true;
    } else if (key == "moves") {
      std::istringstream list(value);
      std::string item;
      while (std::getline(list, item, ',')) script.moves.push_back(std::stoi(item));
    } else if (key == "repeat") {
      script.repeat = value == "1";
    } else {
      throw ParameterError("script: unknown field '" + key + "'");
    }
  }
  if (!have_placement) throw ParameterError("script: missing placement");
  return script;
}

std::optional<Vertex> ScriptPolicy::next(const SimState& /*state*/) {
  if (script_.moves.empty()) return std::nullopt;
  if (at_ == script_.moves.size()) {
    if (!script_.repeat) return std::nullopt;
    at_ = 0;
  }
  return script_.moves[at_++];
}

MoveScript record_script(const Graph& g, Policy& policy, const Rules& rules,
                         int tick_budget) {
  RunResult r = run(g, policy, rules, tick_budget);
  MoveScript script;
  script.placement = r.trace.placements.front();
  for (const TickRecord& rec : r.trace.records) script.moves.push_back(rec.moves.front());
  return script;
}

}  // namespace decon
