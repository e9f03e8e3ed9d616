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


// Straightforward re-statements of the model used to cross-check the library.
// Nothing here shares code with src/.

#ifndef DECON_TESTS_REFERENCE_HPP_
#define DECON_TESTS_REFERENCE_HPP_

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "decon/graph.hpp"

namespace ref {

struct State {
  int agent = 0;
  std::vector<int> dirty;  // 1 = contaminated
  std::vector<int> xi;
  auto key() const { return std::tie(agent, dirty, xi); }
  bool operator<(const State& o) const { return key() < o.key(); }
  bool operator==(const State& o) const { return key() == o.key(); }
  bool all_clean() const {
    return std::ranges::none_of(dirty, [](int d) { return d != 0; });
  }
  int clean() const {
    return static_cast<int>(std::ranges::count(dirty, 0));
  }
};

inline int threshold(int tau, bool lenient) {
  if (lenient) return tau + 1;
  return std::max(tau, 1);
}

inline State start(int n, int at) {
  State s;
  s.agent = at;
  s.dirty.assign(n, 1);
  s.xi.assign(n, 0);
  s.dirty[at] = 0;
  return s;
}

inline State step(const decon::Graph& g, int tau, bool lenient,
                  const State& s, int to) {
  const int n = g.order();
  State t = s;
  t.agent = to;
  t.dirty[to] = 0;
  t.xi[to] = 0;
  std::vector<int> touched(n, 0);
  for (int v = 0; v < n; ++v) {
    if (t.dirty[v] || v == to) continue;
    bool bad = false;
    for (int w : g.neighbors(v)) bad = bad || t.dirty[w];
    t.xi[v] = bad ? t.xi[v] + 1 : 0;
  }
  const int thr = threshold(tau, lenient);
  for (int v = 0; v < n; ++v) {
    if (!t.dirty[v] && v != to && t.xi[v] >= thr) touched[v] = 1;
  }
  for (int v = 0; v < n; ++v) {
    if (touched[v]) {
      t.dirty[v] = 1;
      t.xi[v] = 0;
    }
  }
  return t;
}

inline std::vector<int> successors(const decon::Graph& g, const State& s,
                                   bool allow_stay) {
  std::vector<int> out(g.neighbors(s.agent).begin(), g.neighbors(s.agent).end());
  if (allow_stay) out.push_back(s.agent);
  return out;
}

// Breadth-first search over explicit states. Returns the shortest move list
// (placement first) or nothing.
inline std::optional<std::vector<int>> solve(const decon::Graph& g, int tau,
                                             bool lenient, bool allow_stay,
                                             bool monotone_only = false) {
  const int n = g.order();
  std::map<State, std::pair<State, int>> parent;
  std::deque<State> queue;
  std::set<State> seen;
  for (int v = 0; v < n; ++v) {
    State s = start(n, v);
    if (s.all_clean()) return std::vector<int>{v};
    seen.insert(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (int to : successors(g, s, allow_stay)) {
      State t = step(g, tau, lenient, s, to);
      if (monotone_only && t.clean() < s.clean()) continue;
      if (!seen.insert(t).second) continue;
      parent.emplace(t, std::make_pair(s, to));
      if (t.all_clean()) {
        std::vector<int> moves;
        State cur = t;
        while (parent.count(cur)) {
          auto& [prev, mv] = parent.at(cur);
          moves.push_back(mv);
          cur = prev;
        }
        moves.push_back(cur.agent);
        std::ranges::reverse(moves);
        return moves;
      }
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

inline std::optional<int> iota(const decon::Graph& g, bool lenient,
                               bool allow_stay, int tau_max) {
  for (int tau = 0; tau <= tau_max; ++tau) {
    if (solve(g, tau, lenient, allow_stay)) return tau;
  }
  return std::nullopt;
}

// Maximum matching by trying every edge subset; only for tiny edge sets.
inline int brute_matching(const std::vector<decon::Edge>& edges) {
  const int m = static_cast<int>(edges.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int count = __builtin_popcount(mask);
    if (count <= best) continue;
    std::set<int> used;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      ok = used.insert(edges[i].first).second && used.insert(edges[i].second).second;
    }
    if (ok) best = count;
  }
  return best;
}

}  // namespace ref

#endif  // DECON_TESTS_REFERENCE_HPP_
