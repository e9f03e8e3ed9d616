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

#ifndef DECON_GRAPH_HPP_
#define DECON_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace decon {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Immutable, connected, undirected simple graph on vertices 0..n-1.
//
// Adjacency is stored in compressed form; every neighbor list is sorted
// ascending, so iteration order is deterministic everywhere.
class Graph {
 public:
  // Single isolated vertex.
  Graph();

  // Throws ParameterError on n < 1, out-of-range endpoints, loops or
  // repeated edges, and StructureError when the result is disconnected.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(offsets_.size()) - 1; }
  std::size_t size() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;
  int min_degree() const;
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  // Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  // FNV-1a over the order and the sorted edge list.
  std::uint64_t digest() const;

  bool is_tree() const { return size() + 1 == static_cast<std::size_t>(order()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<int> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<Edge> edges_;
};

// True when every vertex is reachable from vertex 0 along `edges`.
bool is_connected(int n, std::span<const Edge> edges);

}  // namespace decon

#endif  // DECON_GRAPH_HPP_
