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

#ifndef DECON_TREE_HPP_
#define DECON_TREE_HPP_

#include <span>
#include <vector>

#include "decon/graph.hpp"

namespace decon {

// A rooted subtree of a tree-shaped Graph, keeping the graph's vertex
// identities. Membership, parent and depth come from BFS out of the root,
// children are ascending by identity.
//
// The view refers to the graph it was built from; the graph must outlive it.
class TreeView {
 public:
  // The whole tree. Throws StructureError when `g` is not a tree.
  static TreeView rooted(const Graph& g, Vertex root);

  // T_x(root): every vertex within distance `radius` of `root`.
  static TreeView ball(const Graph& g, Vertex root, int radius);

  const Graph& graph() const { return *graph_; }
  Vertex root() const { return root_; }
  int height() const { return height_; }
  int size() const { return static_cast<int>(members_.size()); }

  bool contains(Vertex v) const { return depth_[v] >= 0; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  int depth(Vertex v) const { return depth_[v]; }
  std::span<const Vertex> children(Vertex v) const {
    return {children_.data() + child_begin_[v],
            children_.data() + child_begin_[v] + child_count_[v]};
  }
  bool is_leaf(Vertex v) const { return contains(v) && child_count_[v] == 0; }

  // Members in BFS order, root first.
  const std::vector<Vertex>& members() const { return members_; }

  // Path from the root down to `v`, both included.
  std::vector<Vertex> path_from_root(Vertex v) const;

 private:
  TreeView(const Graph& g, Vertex root, int radius);

  const Graph* graph_;
  Vertex root_;
  int height_ = 0;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
  std::vector<int> child_begin_;
  std::vector<int> child_count_;
  std::vector<Vertex> children_;
  std::vector<Vertex> members_;
};

TreeView truncate_at_depth(const TreeView& t, int depth);

// Leaves in depth-first discovery order, children visited by ascending
// identity. A lone root counts as a leaf.
std::vector<Vertex> dfs_leaf_order(const TreeView& t);

// Number of members in each member's subtree (0 for non-members).
std::vector<int> subtree_sizes(const TreeView& t);

}  // namespace decon

#endif  // DECON_TREE_HPP_
