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

#include "decon/tree.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "decon/errors.hpp"

namespace decon {

TreeView TreeView::rooted(const Graph& g, Vertex root) {
  return TreeView(g, root, std::numeric_limits<int>::max());
}

TreeView TreeView::ball(const Graph& g, Vertex root, int radius) {
  if (radius < 0) throw ParameterError("ball radius must be >= 0");
  return TreeView(g, root, radius);
}

TreeView::TreeView(const Graph& g, Vertex root, int radius)
    : graph_(&g), root_(root) {
  if (!g.is_tree()) {
    throw StructureError("tree view requested on a graph with cycles");
  }
  if (!g.contains(root)) {
    throw ParameterError("root " + std::to_string(root) + " out of range");
  }
  const int n = g.order();
  parent_.assign(n, -1);
  depth_.assign(n, -1);
  child_begin_.assign(n, 0);
  child_count_.assign(n, 0);
  members_.push_back(root);
  depth_[root] = 0;
  for (std::size_t head = 0; head < members_.size(); ++head) {
    Vertex v = members_[head];
    child_begin_[v] = static_cast<int>(children_.size());
    if (depth_[v] == radius) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent_[v]) continue;
      parent_[w] = v;
      depth_[w] = depth_[v] + 1;
      children_.push_back(w);
      ++child_count_[v];
      members_.push_back(w);
    }
  }
  height_ = depth_[members_.back()];
}

std::vector<Vertex> TreeView::path_from_root(Vertex v) const {
  std::vector<Vertex> path;
  for (Vertex u = v; u >= 0; u = parent_[u]) path.push_back(u);
  std::ranges::reverse(path);
  return path;
}

TreeView truncate_at_depth(const TreeView& t, int depth) {
  if (depth < 0) throw ParameterError("truncation depth must be >= 0");
  // Every view is a ball around its root, so a smaller ball is a subset.
  return TreeView::ball(t.graph(), t.root(), std::min(depth, t.height()));
}

std::vector<Vertex> dfs_leaf_order(const TreeView& t) {
  std::vector<Vertex> leaves;
  std::vector<Vertex> stack{t.root()};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    auto kids = t.children(v);
    if (kids.empty()) {
      leaves.push_back(v);
      continue;
    }
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return leaves;
}

std::vector<int> subtree_sizes(const TreeView& t) {
  std::vector<int> size(t.graph().order(), 0);
  const auto& order = t.members();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    size[*it] += 1;
    if (*it != t.root()) size[t.parent(*it)] += size[*it];
  }
  return size;
}

}  // namespace decon
