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

#include "decon/metrics.hpp"

#include <algorithm>

#include "decon/errors.hpp"

namespace decon {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Metrics center_and_metrics(const Graph& g) {
  Metrics m;
  m.eccentricity.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto dist = bfs_distances(g, v);
    if (std::ranges::find(dist, -1) != dist.end()) {
      throw StructureError("center_and_metrics: graph is disconnected");
    }
    m.eccentricity[v] = std::ranges::max(dist);
  }
  m.radius = std::ranges::min(m.eccentricity);
  m.diameter = std::ranges::max(m.eccentricity);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (m.eccentricity[v] == m.radius) m.center.push_back(v);
  }
  return m;
}

Vertex center_vertex(const Graph& g) { return center_and_metrics(g).center.front(); }

}  // namespace decon
