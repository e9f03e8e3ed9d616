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

#include "decon/dynamics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "decon/errors.hpp"

namespace decon {
namespace {

std::uint64_t vertex_weight(Vertex v) {
  // splitmix64 finalizer
  std::uint64_t z = static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string join(std::span<const Vertex> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<Vertex> split_csv(std::string_view text) {
  std::vector<Vertex> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + comma, value);
    if (ec != std::errc() || ptr != text.data() + comma) {
      throw ParameterError("trace: bad vertex list '" + std::string(text) + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

std::string_view field_value(std::string_view token, std::string_view key) {
  if (token.size() < key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    throw ParameterError("trace: expected field '" + std::string(key) +
                         "', got '" + std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

}  // namespace

std::string_view to_string(Rule rule) {
  return rule == Rule::strict ? "strict" : "lenient";
}

Rule parse_rule(std::string_view text) {
  if (text == "strict") return Rule::strict;
  if (text == "lenient") return Rule::lenient;
  throw ParameterError("unknown variant '" + std::string(text) + "'");
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::fully_clean ? "fully_clean" : "budget_exhausted";
}

int SimState::clean_count() const {
  return static_cast<int>(std::ranges::count(contaminated, std::uint8_t{0}));
}

bool Trace::monotone() const {
  return std::ranges::all_of(
      records, [](const TickRecord& r) { return r.recontaminated.empty(); });
}

std::uint64_t exposure_digest(std::span<const int> exposure) {
  std::uint64_t d = 0;
  for (std::size_t v = 0; v < exposure.size(); ++v) {
    d += vertex_weight(static_cast<Vertex>(v)) *
         static_cast<std::uint64_t>(exposure[v]);
  }
  return d;
}

SimState init(const Graph& g, std::span<const Vertex> placements, int tau,
              SemanticVariant /*variant*/) {
  if (placements.empty()) throw ContractError("init: no agents placed");
  if (tau < 0) throw ContractError("init: tau must be >= 0");
  SimState s;
  s.contaminated.assign(g.order(), 1);
  s.exposure.assign(g.order(), 0);
  for (Vertex v : placements) {
    if (!g.contains(v)) {
      throw ContractError("init: placement " + std::to_string(v) +
                          " is not a vertex");
    }
    s.contaminated[v] = 0;
    s.agent_at.push_back(v);
  }
  return s;
}

Simulator::Simulator(const Graph& g, Rules rules, SimState state)
    : graph_(&g), rules_(rules), state_(std::move(state)) {
  const int n = g.order();
  if (static_cast<int>(state_.contaminated.size()) != n ||
      static_cast<int>(state_.exposure.size()) != n) {
    throw ContractError("simulator: state does not match graph order");
  }
  dirty_neighbors_.assign(n, 0);
  occupancy_.assign(n, 0);
  in_active_.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!state_.contaminated[v]) continue;
    for (Vertex w : g.neighbors(v)) ++dirty_neighbors_[w];
  }
  for (Vertex a : state_.agent_at) ++occupancy_[a];
  for (Vertex v = 0; v < n; ++v) {
    if (state_.contaminated[v]) continue;
    if (dirty_neighbors_[v] > 0 || state_.exposure[v] > 0) activate(v);
  }
  digest_ = decon::exposure_digest(state_.exposure);
}

void Simulator::activate(Vertex v) {
  if (!in_active_[v]) {
    in_active_[v] = 1;
    active_.push_back(v);
  }
}

void Simulator::set_exposure(Vertex v, int value) {
  int& xi = state_.exposure[v];
  if (xi == value) return;
  digest_ += vertex_weight(v) *
             (static_cast<std::uint64_t>(value) - static_cast<std::uint64_t>(xi));
  xi = value;
}

TickRecord Simulator::advance(std::span<const Vertex> moves) {
  const Graph& g = *graph_;
  if (moves.size() != state_.agent_at.size()) {
    throw ContractError("step: expected " +
                        std::to_string(state_.agent_at.size()) +
                        " moves, got " + std::to_string(moves.size()));
  }
  for (std::size_t i = 0; i < moves.size(); ++i) {
    Vertex from = state_.agent_at[i];
    Vertex to = moves[i];
    bool legal = g.has_edge(from, to) ||
                 (to == from && rules_.variant.allow_stay);
    if (!legal) {
      throw ContractError("step: agent " + std::to_string(i) +
                          " cannot move along (" + std::to_string(from) +
                          "," + std::to_string(to) + ")");
    }
  }

  TickRecord rec;
  rec.moves.assign(moves.begin(), moves.end());

  // Phase 1: move and clean.
  for (std::size_t i = 0; i < moves.size(); ++i) {
    Vertex to = moves[i];
    --occupancy_[state_.agent_at[i]];
    ++occupancy_[to];
    state_.agent_at[i] = to;
    set_exposure(to, 0);
    if (state_.contaminated[to]) {
      state_.contaminated[to] = 0;
      rec.cleaned.push_back(to);
      for (Vertex w : g.neighbors(to)) --dirty_neighbors_[w];
      if (dirty_neighbors_[to] > 0) activate(to);
    }
  }

  // Phase 2: exposure against post-move contamination.
  const int threshold = rules_.flip_threshold();
  std::vector<Vertex> flips;
  std::size_t keep = 0;
  for (std::size_t k = 0; k < active_.size(); ++k) {
    Vertex v = active_[k];
    if (state_.contaminated[v]) {
      in_active_[v] = 0;
      continue;
    }
    if (occupancy_[v] > 0 || dirty_neighbors_[v] == 0) {
      set_exposure(v, 0);
    } else {
      set_exposure(v, state_.exposure[v] + 1);
      if (state_.exposure[v] >= threshold) flips.push_back(v);
    }
    if (state_.exposure[v] > 0 || dirty_neighbors_[v] > 0) {
      active_[keep++] = v;
    } else {
      in_active_[v] = 0;
    }
  }
  active_.resize(keep);

  // Phase 3: simultaneous recontamination.
  for (Vertex v : flips) {
    state_.contaminated[v] = 1;
    set_exposure(v, 0);
  }
  for (Vertex v : flips) {
    for (Vertex w : g.neighbors(v)) {
      ++dirty_neighbors_[w];
      if (!state_.contaminated[w]) activate(w);
    }
  }

  // Phase 4.
  ++state_.tick;
  std::ranges::sort(rec.cleaned);
  std::ranges::sort(flips);
  rec.recontaminated = std::move(flips);
  rec.tick = state_.tick;
  rec.clean_count = 0;
  rec.exposure_digest = digest_;
  return rec;
}

std::pair<SimState, TickRecord> step(const Graph& g, const Rules& rules,
                                     const SimState& state,
                                     std::span<const Vertex> moves) {
  Simulator sim(g, rules, state);
  TickRecord rec = sim.advance(moves);
  rec.clean_count = sim.state().clean_count();
  return {sim.state(), std::move(rec)};
}

int default_tick_budget(int n, int tau) {
  long long budget = 8LL * n * (static_cast<long long>(tau) + 2);
  return static_cast<int>(std::min<long long>(budget, 2'000'000'000LL));
}

RunResult run(const Graph& g, Policy& policy, Rules rules, int tick_budget,
              std::string_view strategy_name) {
  if (tick_budget < 1) throw ContractError("run: tick budget must be >= 1");
  Vertex start = policy.placement();
  RunResult result;
  Trace& trace = result.trace;
  trace.graph_digest = g.digest();
  trace.tau = rules.tau;
  trace.variant = rules.variant;
  trace.strategy = std::string(strategy_name);
  trace.placements = {start};

  Simulator sim(g, rules, init(g, trace.placements, rules.tau, rules.variant));
  int clean = sim.state().clean_count();
  Outcome& out = result.outcome;
  out.peak_clean = clean;
  while (clean < g.order() && sim.state().tick < tick_budget) {
    std::optional<Vertex> dest = policy.next(sim.state());
    if (!dest) break;
    Vertex move[1] = {*dest};
    TickRecord rec = sim.advance(move);
    clean += static_cast<int>(rec.cleaned.size()) -
             static_cast<int>(rec.recontaminated.size());
    rec.clean_count = clean;
    if (!rec.recontaminated.empty()) out.monotone = false;
    out.peak_clean = std::max(out.peak_clean, clean);
    trace.records.push_back(std::move(rec));
    out.max_exposure = std::max(out.max_exposure, std::ranges::max(sim.state().exposure));
  }
  out.ticks_used = sim.state().tick;
  out.verdict = clean == g.order() ? Verdict::fully_clean
                                   : Verdict::budget_exhausted;
  result.final_state = sim.state();
  return result;
}

SimState replay(const Graph& g, const Trace& trace) {
  if (trace.graph_digest != 0 && trace.graph_digest != g.digest()) {
    throw ContractError("replay: trace was recorded on a different graph");
  }
  Rules rules{trace.tau, trace.variant};
  Simulator sim(g, rules, init(g, trace.placements, trace.tau, trace.variant));
  for (const TickRecord& rec : trace.records) sim.advance(rec.moves);
  return sim.state();
}

void write_trace(std::ostream& out, const Trace& trace) {
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx",
                static_cast<unsigned long long>(trace.graph_digest));
  out << "# trace graph=" << digest << " tau=" << trace.tau
      << " variant=" << to_string(trace.variant.rule)
      << " allow_stay=" << (trace.variant.allow_stay ? 1 : 0)
      << " strategy=" << (trace.strategy.empty() ? "-" : trace.strategy)
      << " placement=" << join(trace.placements) << '\n';
  for (const TickRecord& r : trace.records) {
    out << r.tick << ' ' << join(r.moves) << " cleaned=" << join(r.cleaned)
        << " recontaminated=" << join(r.recontaminated)
        << " clean_count=" << r.clean_count << '\n';
  }
}

Trace read_trace(std::istream& in) {
  Trace trace;
  std::string line;
  if (!std::getline(in, line)) throw ParameterError("trace: empty input");
  {
    std::istringstream header(line);
    std::string hash, tag, token;
    header >> hash >> tag;
    if (hash != "#" || tag != "trace") {
      throw ParameterError("trace: missing '# trace' header");
    }
    header >> token;
    trace.graph_digest = std::stoull(std::string(field_value(token, "graph")), nullptr, 16);
    header >> token;
    trace.tau = std::stoi(std::string(field_value(token, "tau")));
    header >> token;
    trace.variant.rule = parse_rule(field_value(token, "variant"));
    header >> token;
    trace.variant.allow_stay = field_value(token, "allow_stay") == "1";
    header >> token;
    std::string_view name = field_value(token, "strategy");
    trace.strategy = name == "-" ? "" : std::string(name);
    header >> token;
    trace.placements = split_csv(field_value(token, "placement"));
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    TickRecord r;
    std::string agents, cleaned, recont, count;
    if (!(fields >> r.tick >> agents >> cleaned >> recont >> count)) {
      throw ParameterError("trace: malformed record '" + line + "'");
    }
    r.moves = split_csv(agents);
    r.cleaned = split_csv(field_value(cleaned, "cleaned"));
    r.recontaminated = split_csv(field_value(recont, "recontaminated"));
    r.clean_count = std::stoi(std::string(field_value(count, "clean_count")));
    trace.records.push_back(std::move(r));
  }
  return trace;
}

}  // namespace decon
