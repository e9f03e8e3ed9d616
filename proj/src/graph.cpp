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

#include "decon/graph.hpp"

#include <algorithm>
#include <string>

#include "decon/errors.hpp"

namespace decon {

Graph::Graph() : offsets_{0, 0} {}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 1) {
    throw ParameterError("graph needs at least one vertex, got n=" +
                         std::to_string(n));
  }
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParameterError("edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ") out of range for n=" +
                           std::to_string(n));
    }
    if (u == v) {
      throw ParameterError("loop at vertex " + std::to_string(u));
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::ranges::sort(edges_);
  if (auto dup = std::ranges::adjacent_find(edges_); dup != edges_.end()) {
    throw ParameterError("repeated edge (" + std::to_string(dup->first) +
                         "," + std::to_string(dup->second) + ")");
  }
  if (!is_connected(n, edges_)) {
    throw StructureError("graph on " + std::to_string(n) +
                         " vertices is not connected");
  }

  std::vector<int> degree(n, 0);
  for (auto [u, v] : edges_) {
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v],
              adjacency_.begin() + offsets_[v + 1]);
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  int best = degree(0);
  for (Vertex v = 1; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::uint64_t Graph::digest() const {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(order()));
  for (auto [u, v] : edges_) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

bool is_connected(int n, std::span<const Edge> edges) {
  if (n <= 1) return n == 1;
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&parent](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int components = n;
  for (auto [u, v] : edges) {
    int a = find(u);
    int b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace decon
