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


#ifndef DECON_STRATEGIES_HPP_
#define DECON_STRATEGIES_HPP_

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "decon/dynamics.hpp"
#include "decon/graph.hpp"
#include "decon/script.hpp"
#include "decon/tree.hpp"

namespace decon {

// Shape recognition. Each returns false/nullopt rather than throwing.
bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);
bool is_complete_graph(const Graph& g);
// The two sides of a complete bipartite graph, smaller side first (ties:
// the side holding vertex 0 first).
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
complete_bipartite_sides(const Graph& g);
// Centre of a star with at least two leaves.
std::optional<Vertex> star_center(const Graph& g);
// The unique vertex of degree >= 3 in a tree whose other vertices have
// degree <= 2.
std::optional<Vertex> spider_root(const Graph& g);

// Arms of a spider rooted at `root`, each listed outward from the root.
// Ordered by descending length, then by the identity of the first vertex.
std::vector<std::vector<Vertex>> spider_arms(const Graph& g, Vertex root);

MoveScript path_sweep(const Graph& g);
MoveScript cycle_sweep(const Graph& g);
MoveScript complete_sequential(const Graph& g);
MoveScript bipartite_interleaved(const Graph& g);
MoveScript star_shuttle(const Graph& g);

struct SpiderSchedule {
  Vertex root = 0;
  std::vector<std::vector<Vertex>> arms;  // A_1..A_delta
  int delta = 0;
  int longest = 0;                        // m
  int t0 = 0;                             // ceil(delta + sqrt(delta^2 + 4m))
  std::vector<int> iteration_start;       // tick at which iteration j begins
  // reach[j][i]: farthest position (1-based) visited on A_{i+1} during
  // iteration j; 0 when the arm was skipped.
  std::vector<std::vector<int>> reach;
};

int spider_tau(int delta, int longest);

// Iteration j walks A_j to its tip and back, then A_{j-1}, ..., A_1 each out
// to its farthest contaminated vertex and back. Reads the live state.
class SpiderPolicy : public Policy {
 public:
  SpiderPolicy(const Graph& g, Vertex root,
               std::vector<std::vector<Vertex>> arms);

  Vertex placement() override { return schedule_.root; }
  std::optional<Vertex> next(const SimState& state) override;
  const SpiderSchedule& schedule() const { return schedule_; }

 private:
  bool dirty_beyond(const SimState& state, int arm, int pos) const;

  SpiderSchedule schedule_;
  int iteration_ = -1;
  std::vector<int> queue_;
  int arm_ = -1;
  int pos_ = -1;  // -1 = root
  bool outward_ = false;
};

std::pair<SpiderSchedule, MoveScript> spider_iterative(const Graph& g,
                                                       Vertex root,
                                                       const Rules& rules);

// Long arms (length >= sqrt n) by the iterative schedule, then every short
// arm root-tip-root in identity order.
class SpiderSqrtPolicy : public Policy {
 public:
  SpiderSqrtPolicy(const Graph& g, Vertex root);

  Vertex placement() override { return root_; }
  std::optional<Vertex> next(const SimState& state) override;

 private:
  Vertex root_;
  SpiderPolicy long_phase_;
  std::vector<Vertex> tail_;
  std::size_t at_ = 0;
  bool long_done_ = false;
};

MoveScript spider_sqrt(const Graph& g, Vertex root, const Rules& rules);

MoveScript kary_inorder(const TreeView& t);
MoveScript binary_two_phase(const TreeView& t);

struct MeshPlan {
  MoveScript script;
  // Sweep columns in order; for p > q these are the rows of the input mesh.
  std::vector<std::vector<Vertex>> columns;
  // Tick after which column k is declared clean.
  std::vector<int> declared_at;
};

MeshPlan mesh_column_sweep(int p, int q);

// Top-down monotone sweep of the part of `view` that is contaminated in
// `snapshot`, starting and ending at the view's root. Subtrees with at most
// (threshold - 2 height) / 2 contaminated-subtree vertices are cleaned in a
// single depth-first excursion, larger ones are entered and handled
// recursively. Before each excursion the agent walks up to refresh any
// ancestor that would otherwise flip.
class SubtreeSweep {
 public:
  SubtreeSweep(TreeView view, const SimState& snapshot, int threshold);

  std::optional<Vertex> next(const SimState& state);

 private:
  struct Frame {
    Vertex v;
    std::vector<Vertex> todo;
    std::size_t at = 0;
  };

  Frame make_frame(Vertex v) const;
  bool fits(const SimState& state, int cost) const;
  bool exposed(const SimState& state, Vertex v) const;
  bool plan_refresh(const SimState& state);
  void plan_excursion(Vertex child, Vertex from);

  TreeView view_;
  std::vector<int> work_;
  int threshold_;
  int light_;
  std::vector<Frame> stack_;
  std::vector<Vertex> pending_;
  std::size_t pending_at_ = 0;
  bool refreshed_ = false;
};

class SubtreeSweepPolicy : public Policy {
 public:
  SubtreeSweepPolicy(TreeView view, int threshold)
      : view_(std::move(view)), threshold_(threshold) {}

  Vertex placement() override { return view_.root(); }
  std::optional<Vertex> next(const SimState& state) override;

 private:
  TreeView view_;
  int threshold_;
  std::optional<SubtreeSweep> sweep_;
};

// Throws ParameterError for alpha <= 2.
MoveScript tree_small_height(const TreeView& t, double alpha,
                             const Rules& rules);

class TreeSqrtPolicy : public Policy {
 public:
  TreeSqrtPolicy(const Graph& g, const Rules& rules);

  Vertex placement() override { return view_.root(); }
  std::optional<Vertex> next(const SimState& state) override;

  // Moves spent in each started iteration.
  const std::vector<int>& iteration_moves() const { return iteration_moves_; }

 private:
  enum class Mode { start, outward, homeward };

  std::optional<Vertex> emit(Vertex v);

  const Graph* graph_;
  TreeView view_;
  int threshold_;
  int small_radius_;
  int large_radius_;
  int cooldown_;
  std::vector<Vertex> leaves_;
  std::size_t leaf_ = 0;
  std::vector<Vertex> path_;
  std::size_t pos_ = 0;
  int walked_ = 0;
  int last_aux_ = 0;
  bool aux_here_ = false;
  bool any_aux_ = false;
  Mode mode_ = Mode::start;
  std::optional<SubtreeSweep> sweep_;
  std::vector<int> iteration_moves_;
};

// Euler tour of the depth-first spanning tree from vertex 0.
MoveScript generic_dfs(const Graph& g);

class TerminalPolicy : public Policy {
 public:
  explicit TerminalPolicy(const Graph& g);

  Vertex placement() override { return 0; }
  std::optional<Vertex> next(const SimState& state) override;

 private:
  const Graph* graph_;
  std::vector<Vertex> path_;
  std::vector<std::uint8_t> used_;  // on the path or deleted
  std::vector<Vertex> pending_;
  std::size_t pending_at_ = 0;
};

// Throws ApplicabilityError when `g_star` is not the augmented kahn pair.
MoveScript kahn_star_strategy(const Graph& g_star, int arms, int long_length);

}  // namespace decon

#endif  // DECON_STRATEGIES_HPP_
