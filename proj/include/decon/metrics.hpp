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

#ifndef DECON_METRICS_HPP_
#define DECON_METRICS_HPP_

#include <vector>

#include "decon/graph.hpp"

namespace decon {

struct Metrics {
  int radius = 0;
  int diameter = 0;
  std::vector<Vertex> center;      // ascending
  std::vector<int> eccentricity;   // per vertex
};

// Hop distances from `source`.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// All-pairs BFS.
Metrics center_and_metrics(const Graph& g);

// Lowest-identity center vertex.
Vertex center_vertex(const Graph& g);

}  // namespace decon

#endif  // DECON_METRICS_HPP_
