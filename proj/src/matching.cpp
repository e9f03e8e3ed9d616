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


#include "decon/matching.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <random>
#include <string>

#include "decon/errors.hpp"

namespace decon {
namespace {

constexpr std::size_t kKeptExamples = 8;

void check_side(int side) {
  if (side < 1) throw ParameterError("mesh side must be >= 1");
  if ((side * side) % 2 != 0) {
    throw ParameterError("mesh side " + std::to_string(side) +
                         " gives an odd vertex count; |W| = n/2 needs n even");
  }
}

bool augment(const Graph& g, const std::vector<std::uint8_t>& in_w, Vertex u,
             std::vector<Vertex>& match_of, std::vector<int>& seen, int stamp) {
  for (Vertex v : g.neighbors(u)) {
    if (in_w[v] || seen[v] == stamp) continue;
    seen[v] = stamp;
    if (match_of[v] < 0 || augment(g, in_w, match_of[v], match_of, seen, stamp)) {
      match_of[v] = u;
      return true;
    }
  }
  return false;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vs[i]);
  }
  return s;
}

}  // namespace

CutInstance::CutInstance(int side, std::span<const Vertex> w)
    : side_(side),
      mesh_((check_side(side), generate(TopologyDescriptor::mesh(side, side)))),
      in_w_(mesh_.order(), 0) {
  const int n = mesh_.order();
  if (static_cast<int>(w.size()) * 2 != n) {
    throw ContractError("cut instance: |W| = " + std::to_string(w.size()) +
                        ", expected " + std::to_string(n / 2));
  }
  for (Vertex v : w) {
    if (!mesh_.contains(v) || in_w_[v]) {
      throw ContractError("cut instance: W must hold distinct mesh vertices");
    }
    in_w_[v] = 1;
  }
  w_.assign(w.begin(), w.end());
  std::ranges::sort(w_);
}

std::vector<Edge> CutInstance::cut_edges() const {
  std::vector<Edge> out;
  for (Vertex u : w_) {
    for (Vertex v : mesh_.neighbors(u)) {
      if (!in_w_[v]) out.emplace_back(u, v);
    }
  }
  return out;
}

Matching max_cut_matching(const CutInstance& inst) {
  const Graph& g = inst.mesh();
  std::vector<std::uint8_t> in_w(g.order());
  for (Vertex v = 0; v < g.order(); ++v) in_w[v] = inst.in_w(v);
  std::vector<Vertex> match_of(g.order(), -1);
  std::vector<int> seen(g.order(), -1);
  int stamp = 0;
  for (Vertex u : inst.w()) augment(g, in_w, u, match_of, seen, stamp++);
  Matching m;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (match_of[v] >= 0) m.edges.emplace_back(match_of[v], v);
  }
  std::ranges::sort(m.edges);
  m.size = static_cast<int>(m.edges.size());
  return m;
}

bool has_augmenting_path(const CutInstance& inst, const Matching& m) {
  const Graph& g = inst.mesh();
  std::vector<std::uint8_t> in_w(g.order());
  for (Vertex v = 0; v < g.order(); ++v) in_w[v] = inst.in_w(v);
  std::vector<Vertex> match_of(g.order(), -1);
  std::vector<std::uint8_t> matched(g.order(), 0);
  for (auto [u, v] : m.edges) {
    match_of[v] = u;
    matched[u] = 1;
  }
  std::vector<int> seen(g.order(), -1);
  int stamp = 0;
  for (Vertex u : inst.w()) {
    if (matched[u]) continue;
    std::vector<Vertex> copy = match_of;
    if (augment(g, in_w, u, copy, seen, stamp++)) return true;
  }
  return false;
}

bool is_rectangular(int side, std::span<const Vertex> w) {
  if (w.empty()) return false;
  int c0 = side, c1 = -1, r0 = side, r1 = -1;
  for (Vertex v : w) {
    int c = v / side, r = v % side;
    c0 = std::min(c0, c);
    c1 = std::max(c1, c);
    r0 = std::min(r0, r);
    r1 = std::max(r1, r);
  }
  return static_cast<long long>(c1 - c0 + 1) * (r1 - r0 + 1) ==
         static_cast<long long>(w.size());
}

std::string_view to_string(CheckMode mode) {
  return mode == CheckMode::exhaustive ? "exhaustive" : "sampled";
}

CutBoundReport verify_cut_bound(int side, const CutBoundOptions& options) {
  check_side(side);
  const int n = side * side;
  CutBoundReport rep;
  rep.side = side;
  rep.mode = options.mode;
  rep.seed = options.seed;
  rep.minimum = n;

  auto consider = [&](const std::vector<Vertex>& w) {
    CutInstance inst(side, w);
    int size = max_cut_matching(inst).size;
    ++rep.samples;
    if (size < rep.minimum) {
      rep.minimum = size;
      rep.worst = inst.w();
      rep.minimizers = 0;
      rep.rectangular_minimizers = 0;
      rep.nonrectangular_minimizers.clear();
    }
    if (size == rep.minimum) {
      ++rep.minimizers;
      if (is_rectangular(side, inst.w())) {
        ++rep.rectangular_minimizers;
      } else if (rep.nonrectangular_minimizers.size() < kKeptExamples) {
        rep.nonrectangular_minimizers.push_back(inst.w());
      }
    }
  };

  std::vector<Vertex> w;
  if (options.mode == CheckMode::exhaustive) {
    if (side > 4) {
      throw ResourceError("exhaustive verification is limited to side <= 4");
    }
    // Gosper's hack: next larger integer with the same popcount.
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t set = (std::uint32_t{1} << (n / 2)) - 1; set < limit;) {
      w.clear();
      for (int v = 0; v < n; ++v) {
        if (set >> v & 1U) w.push_back(v);
      }
      consider(w);
      std::uint32_t c = set & (~set + 1);
      std::uint32_t r = set + c;
      set = (((r ^ set) >> 2) / c) | r;
    }
  } else {
    std::mt19937_64 rng(options.seed);
    std::vector<Vertex> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      for (int k = 0; k < n / 2; ++k) {
        std::uniform_int_distribution<int> pick(k, n - 1);
        std::swap(all[k], all[pick(rng)]);
      }
      w.assign(all.begin(), all.begin() + n / 2);
      consider(w);
    }
  }
  rep.pass = rep.minimum >= side;
  return rep;
}

void write_report(std::ostream& out, const CutBoundReport& r) {
  out << "side=" << r.side << '\n'
      << "mode=" << to_string(r.mode) << '\n';
  if (r.mode == CheckMode::sampled) {
    out << "seed=" << r.seed << '\n'
        << "evidence=probabilistic\n";
  }
  out << "subsets=" << r.samples << '\n'
      << "minimum=" << r.minimum << '\n'
      << "bound=" << r.side << '\n'
      << "worst=" << join(r.worst) << '\n'
      << "minimizers=" << r.minimizers << '\n'
      << "rectangular_minimizers=" << r.rectangular_minimizers << '\n'
      << "nonrectangular_minimizers=" << r.minimizers - r.rectangular_minimizers
      << '\n';
  for (const auto& w : r.nonrectangular_minimizers) {
    out << "nonrectangular_example=" << join(w) << '\n';
  }
  out << "result=" << (r.pass ? "pass" : "fail") << '\n';
}

}  // namespace decon
