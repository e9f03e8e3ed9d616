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


#include "decon/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "decon/errors.hpp"
#include "decon/generators.hpp"
#include "decon/metrics.hpp"

namespace decon {
namespace {

int ceil_sqrt(int n) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

bool has_dirty_neighbor(const Graph& g, const SimState& s, Vertex v) {
  for (Vertex w : g.neighbors(v)) {
    if (s.contaminated[w]) return true;
  }
  return false;
}

}  // namespace

bool is_path_graph(const Graph& g) {
  if (!g.is_tree()) return false;
  return g.order() == 1 || g.max_degree() <= 2;
}

bool is_cycle_graph(const Graph& g) {
  return g.order() >= 3 && static_cast<int>(g.size()) == g.order() &&
         g.max_degree() == 2 && g.min_degree() == 2;
}

bool is_complete_graph(const Graph& g) {
  long long n = g.order();
  return static_cast<long long>(g.size()) == n * (n - 1) / 2;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
complete_bipartite_sides(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < n; ++v) {
    (g.has_edge(0, v) ? b : a).push_back(v);
  }
  if (static_cast<long long>(g.size()) !=
      static_cast<long long>(a.size()) * static_cast<long long>(b.size())) {
    return std::nullopt;
  }
  for (Vertex u : a) {
    for (Vertex w : b) {
      if (!g.has_edge(u, w)) return std::nullopt;
    }
  }
  if (b.size() < a.size()) std::swap(a, b);
  return std::make_pair(std::move(a), std::move(b));
}

std::optional<Vertex> star_center(const Graph& g) {
  if (!g.is_tree() || g.order() < 3) return std::nullopt;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return v;
  }
  return std::nullopt;
}

std::optional<Vertex> spider_root(const Graph& g) {
  if (!g.is_tree()) return std::nullopt;
  std::optional<Vertex> root;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3) {
      if (root) return std::nullopt;
      root = v;
    }
  }
  return root;
}

std::vector<std::vector<Vertex>> spider_arms(const Graph& g, Vertex root) {
  std::vector<std::vector<Vertex>> arms;
  for (Vertex first : g.neighbors(root)) {
    std::vector<Vertex> arm{first};
    Vertex prev = root;
    Vertex cur = first;
    while (true) {
      Vertex step = -1;
      for (Vertex w : g.neighbors(cur)) {
        if (w != prev) step = w;
      }
      if (step < 0 || g.degree(cur) > 2) break;
      arm.push_back(step);
      prev = cur;
      cur = step;
    }
    arms.push_back(std::move(arm));
  }
  std::ranges::stable_sort(arms, [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x.front() < y.front();
  });
  return arms;
}

MoveScript path_sweep(const Graph& g) {
  if (!is_path_graph(g)) throw ApplicabilityError("path-sweep needs a path");
  MoveScript s;
  if (g.order() == 1) return s;
  Vertex start = -1;
  for (Vertex v = 0; v < g.order() && start < 0; ++v) {
    if (g.degree(v) == 1) start = v;
  }
  s.placement = start;
  Vertex prev = -1;
  Vertex cur = start;
  for (int i = 1; i < g.order(); ++i) {
    for (Vertex w : g.neighbors(cur)) {
      if (w != prev) {
        prev = cur;
        cur = w;
        break;
      }
    }
    s.moves.push_back(cur);
  }
  return s;
}

MoveScript cycle_sweep(const Graph& g) {
  if (!is_cycle_graph(g) || g.order() < 4) {
    throw ApplicabilityError("cycle-sweep needs a cycle on at least 4 vertices");
  }
  MoveScript s;
  s.placement = 0;
  Vertex prev = 0;
  Vertex cur = g.neighbors(0).front();
  s.moves.push_back(cur);
  while (static_cast<int>(s.moves.size()) < 2 * g.order()) {
    auto nb = g.neighbors(cur);
    Vertex step = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = step;
    s.moves.push_back(cur);
  }
  return s;
}

MoveScript complete_sequential(const Graph& g) {
  if (!is_complete_graph(g)) throw ApplicabilityError("complete-seq needs K_n");
  MoveScript s;
  for (Vertex v = 1; v < g.order(); ++v) s.moves.push_back(v);
  return s;
}

MoveScript bipartite_interleaved(const Graph& g) {
  auto sides = complete_bipartite_sides(g);
  if (!sides || sides->first.size() < 3) {
    throw ApplicabilityError(
        "bipartite-interleave needs K_{m,n} with 3 <= m <= n");
  }
  const auto& [a, b] = *sides;
  MoveScript s;
  s.placement = a[0];
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i > 0) s.moves.push_back(a[i % a.size()]);
    s.moves.push_back(b[i]);
  }
  return s;
}

MoveScript star_shuttle(const Graph& g) {
  auto c = star_center(g);
  if (!c) throw ApplicabilityError("star-shuttle needs a star");
  MoveScript s;
  s.placement = *c;
  bool first = true;
  for (Vertex leaf : g.neighbors(*c)) {
    if (!first) s.moves.push_back(*c);
    s.moves.push_back(leaf);
    first = false;
  }
  return s;
}

int spider_tau(int delta, int longest) {
  double bound = delta + std::sqrt(static_cast<double>(delta) * delta +
                                   4.0 * longest);
  return static_cast<int>(std::ceil(bound - 1e-9));
}

SpiderPolicy::SpiderPolicy(const Graph& g, Vertex root,
                           std::vector<std::vector<Vertex>> arms) {
  (void)g;
  schedule_.root = root;
  schedule_.arms = std::move(arms);
  schedule_.delta = static_cast<int>(schedule_.arms.size());
  for (const auto& arm : schedule_.arms) {
    schedule_.longest = std::max(schedule_.longest, static_cast<int>(arm.size()));
  }
  schedule_.t0 = spider_tau(schedule_.delta, schedule_.longest);
}

bool SpiderPolicy::dirty_beyond(const SimState& state, int arm, int pos) const {
  const auto& a = schedule_.arms[arm];
  for (int i = static_cast<int>(a.size()) - 1; i > pos; --i) {
    if (state.contaminated[a[i]]) return true;
  }
  return false;
}

std::optional<Vertex> SpiderPolicy::next(const SimState& state) {
  const auto& arms = schedule_.arms;
  while (true) {
    if (arm_ >= 0) {
      const auto& a = arms[arm_];
      if (outward_) {
        bool full = arm_ == iteration_;
        bool more = full ? pos_ + 1 < static_cast<int>(a.size())
                         : dirty_beyond(state, arm_, pos_);
        if (more) {
          ++pos_;
          auto& r = schedule_.reach[iteration_][arm_];
          r = std::max(r, pos_ + 1);
          return a[pos_];
        }
        outward_ = false;
      }
      if (pos_ >= 0) {
        --pos_;
        return pos_ >= 0 ? a[pos_] : schedule_.root;
      }
      arm_ = -1;
    }
    if (queue_.empty()) {
      if (iteration_ + 1 >= schedule_.delta) return std::nullopt;
      ++iteration_;
      schedule_.iteration_start.push_back(state.tick);
      schedule_.reach.emplace_back(schedule_.delta, 0);
      for (int i = iteration_; i >= 0; --i) queue_.push_back(i);
      std::ranges::reverse(queue_);
    }
    int next_arm = queue_.back();
    queue_.pop_back();
    if (next_arm != iteration_ && !dirty_beyond(state, next_arm, -1)) continue;
    arm_ = next_arm;
    pos_ = -1;
    outward_ = true;
  }
}

std::pair<SpiderSchedule, MoveScript> spider_iterative(const Graph& g,
                                                       Vertex root,
                                                       const Rules& rules) {
  if (spider_root(g) != root) {
    throw ApplicabilityError("spider-iter needs a spider rooted at vertex " +
                             std::to_string(root));
  }
  SpiderPolicy policy(g, root, spider_arms(g, root));
  MoveScript script = record_script(
      g, policy, rules, default_tick_budget(g.order(), rules.tau));
  return {policy.schedule(), std::move(script)};
}

namespace {

std::vector<std::vector<Vertex>> long_arms(const Graph& g, Vertex root) {
  std::vector<std::vector<Vertex>> out;
  const long long n = g.order();
  for (auto& arm : spider_arms(g, root)) {
    long long len = static_cast<long long>(arm.size());
    if (len * len >= n) out.push_back(std::move(arm));
  }
  return out;
}

}  // namespace

SpiderSqrtPolicy::SpiderSqrtPolicy(const Graph& g, Vertex root)
    : root_(root), long_phase_(g, root, long_arms(g, root)) {
  const long long n = g.order();
  std::vector<std::vector<Vertex>> shorts;
  for (auto& arm : spider_arms(g, root)) {
    long long len = static_cast<long long>(arm.size());
    if (len * len < n) shorts.push_back(std::move(arm));
  }
  std::ranges::sort(shorts, {}, [](const auto& a) { return a.front(); });
  for (std::size_t i = 0; i < shorts.size(); ++i) {
    const auto& arm = shorts[i];
    for (Vertex v : arm) tail_.push_back(v);
    if (i + 1 == shorts.size()) break;
    for (auto it = arm.rbegin() + 1; it != arm.rend(); ++it) tail_.push_back(*it);
    tail_.push_back(root);
  }
}

std::optional<Vertex> SpiderSqrtPolicy::next(const SimState& state) {
  if (!long_done_) {
    if (auto v = long_phase_.next(state)) return v;
    long_done_ = true;
  }
  if (at_ < tail_.size()) return tail_[at_++];
  return std::nullopt;
}

MoveScript spider_sqrt(const Graph& g, Vertex root, const Rules& rules) {
  if (spider_root(g) != root) {
    throw ApplicabilityError("spider-sqrt needs a spider rooted at vertex " +
                             std::to_string(root));
  }
  SpiderSqrtPolicy policy(g, root);
  return record_script(g, policy, rules,
                       default_tick_budget(g.order(), rules.tau));
}

namespace {

// Root to each leaf and back in leaf order; the final return is dropped
// when `final_return` is false.
void leaf_tours(const TreeView& t, Vertex root, bool final_return,
                std::vector<Vertex>& out) {
  std::vector<Vertex> leaves;
  std::vector<Vertex> stack{root};
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
  if (leaves.size() == 1 && leaves.front() == root) return;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    std::vector<Vertex> down;
    for (Vertex u = leaves[i]; u != root; u = t.parent(u)) down.push_back(u);
    for (auto it = down.rbegin(); it != down.rend(); ++it) out.push_back(*it);
    if (i + 1 == leaves.size() && !final_return) break;
    for (std::size_t k = 1; k < down.size(); ++k) out.push_back(down[k]);
    out.push_back(root);
  }
}

}  // namespace

MoveScript kary_inorder(const TreeView& t) {
  MoveScript s;
  s.placement = t.root();
  leaf_tours(t, t.root(), false, s.moves);
  return s;
}

MoveScript binary_two_phase(const TreeView& t) {
  auto top = t.children(t.root());
  if (top.size() != 2) {
    throw ApplicabilityError("binary-2phase needs a root with two children");
  }
  for (Vertex v : t.members()) {
    if (t.children(v).size() > 2) {
      throw ApplicabilityError("binary-2phase needs a binary tree");
    }
  }
  MoveScript s;
  s.placement = top[0];
  leaf_tours(t, top[0], true, s.moves);
  s.moves.push_back(t.root());
  s.moves.push_back(top[1]);
  leaf_tours(t, top[1], false, s.moves);
  return s;
}

MeshPlan mesh_column_sweep(int p, int q) {
  if (p < 1 || q < 1) throw ParameterError("mesh sides must be >= 1");
  const bool transposed = p > q;
  const int height = std::min(p, q);
  const int width = std::max(p, q);
  auto at = [&](int column, int row) {
    return transposed ? mesh_vertex(p, row, column) : mesh_vertex(p, column, row);
  };
  MeshPlan plan;
  for (int k = 1; k <= width; ++k) {
    std::vector<Vertex> column;
    for (int r = 1; r <= height; ++r) column.push_back(at(k, r));
    plan.columns.push_back(std::move(column));
  }
  auto& moves = plan.script.moves;
  plan.script.placement = at(1, 1);
  if (height == 1) {
    for (int k = 2; k <= width; ++k) moves.push_back(at(k, 1));
    plan.declared_at.assign(width, static_cast<int>(moves.size()));
    return plan;
  }
  const int half = (height + 1) / 2 + 1;
  for (int r = 2; r <= height; ++r) moves.push_back(at(1, r));
  for (int k = 1; k < width; ++k) {
    moves.push_back(at(k + 1, height));
    for (int r = height - 1; r >= half; --r) moves.push_back(at(k + 1, r));
    moves.push_back(at(k, half));
    for (int r = half - 1; r >= 1; --r) moves.push_back(at(k, r));
    plan.declared_at.push_back(static_cast<int>(moves.size()));
    moves.push_back(at(k + 1, 1));
    for (int r = 2; r <= height; ++r) moves.push_back(at(k + 1, r));
  }
  plan.declared_at.push_back(static_cast<int>(moves.size()));
  return plan;
}

SubtreeSweep::SubtreeSweep(TreeView view, const SimState& snapshot,
                           int threshold)
    : view_(std::move(view)), threshold_(threshold) {
  light_ = std::max(0, (threshold - 2 * view_.height()) / 2);
  work_.assign(view_.graph().order(), 0);
  const auto& order = view_.members();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    int below = 0;
    for (Vertex c : view_.children(v)) below += work_[c];
    if (below > 0 || snapshot.contaminated[v]) work_[v] = below + 1;
  }
  if (work_[view_.root()] > 0) stack_.push_back(make_frame(view_.root()));
}

SubtreeSweep::Frame SubtreeSweep::make_frame(Vertex v) const {
  Frame f{v, {}, 0};
  std::vector<Vertex> heavy;
  for (Vertex c : view_.children(v)) {
    if (work_[c] == 0) continue;
    (work_[c] <= light_ ? f.todo : heavy).push_back(c);
  }
  f.todo.insert(f.todo.end(), heavy.begin(), heavy.end());
  return f;
}

bool SubtreeSweep::exposed(const SimState& state, Vertex v) const {
  if (state.contaminated[v]) return false;
  return state.exposure[v] > 0 || has_dirty_neighbor(view_.graph(), state, v);
}

bool SubtreeSweep::fits(const SimState& state, int cost) const {
  const int here = view_.depth(stack_.back().v);
  for (const Frame& f : stack_) {
    if (!exposed(state, f.v)) continue;
    int dist = here - view_.depth(f.v);
    if (cost + dist > threshold_ - state.exposure[f.v]) return false;
  }
  return true;
}

bool SubtreeSweep::plan_refresh(const SimState& state) {
  std::size_t top = stack_.size() - 1;
  for (std::size_t i = 0; i + 1 < stack_.size(); ++i) {
    if (exposed(state, stack_[i].v)) {
      top = i;
      break;
    }
  }
  if (top + 1 == stack_.size()) return false;
  pending_.clear();
  pending_at_ = 0;
  for (std::size_t i = stack_.size() - 1; i-- > top;) pending_.push_back(stack_[i].v);
  for (std::size_t i = top + 1; i < stack_.size(); ++i) pending_.push_back(stack_[i].v);
  return true;
}

void SubtreeSweep::plan_excursion(Vertex child, Vertex from) {
  pending_.clear();
  pending_at_ = 0;
  std::function<void(Vertex)> visit = [&](Vertex v) {
    pending_.push_back(v);
    for (Vertex c : view_.children(v)) {
      if (work_[c] == 0) continue;
      visit(c);
      pending_.push_back(v);
    }
  };
  visit(child);
  pending_.push_back(from);
}

std::optional<Vertex> SubtreeSweep::next(const SimState& state) {
  if (pending_at_ < pending_.size()) return pending_[pending_at_++];
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    if (f.at == f.todo.size()) {
      stack_.pop_back();
      if (stack_.empty()) return std::nullopt;
      return stack_.back().v;
    }
    Vertex c = f.todo[f.at];
    const bool heavy = work_[c] > light_;
    const int cost = heavy ? 2 : 2 * work_[c];
    if (!refreshed_ && !fits(state, cost) && plan_refresh(state)) {
      refreshed_ = true;
      return pending_[pending_at_++];
    }
    refreshed_ = false;
    ++f.at;
    if (heavy) {
      Frame child = make_frame(c);
      stack_.push_back(std::move(child));
      return c;
    }
    plan_excursion(c, f.v);
    return pending_[pending_at_++];
  }
  return std::nullopt;
}

std::optional<Vertex> SubtreeSweepPolicy::next(const SimState& state) {
  if (!sweep_) sweep_.emplace(view_, state, threshold_);
  return sweep_->next(state);
}

MoveScript tree_small_height(const TreeView& t, double alpha,
                             const Rules& rules) {
  if (!(alpha > 2.0)) throw ParameterError("tree-smallh needs alpha > 2");
  SubtreeSweepPolicy policy(t, rules.flip_threshold());
  return record_script(t.graph(), policy, rules,
                       default_tick_budget(t.graph().order(), rules.tau));
}

TreeSqrtPolicy::TreeSqrtPolicy(const Graph& g, const Rules& rules)
    : graph_(&g),
      view_(TreeView::rooted(g, center_vertex(g))),
      threshold_(rules.flip_threshold()) {
  const int n = g.order();
  const double root_n = std::sqrt(static_cast<double>(n));
  small_radius_ = ceil_sqrt(n);
  large_radius_ = static_cast<int>(std::ceil(10 * root_n - 1e-9));
  cooldown_ = static_cast<int>(std::ceil(5 * root_n - 1e-9));
  leaves_ = dfs_leaf_order(view_);
}

std::optional<Vertex> TreeSqrtPolicy::emit(Vertex v) {
  ++iteration_moves_.back();
  return v;
}

std::optional<Vertex> TreeSqrtPolicy::next(const SimState& state) {
  while (true) {
    if (sweep_) {
      if (auto v = sweep_->next(state)) return emit(*v);
      sweep_.reset();
    }
    switch (mode_) {
      case Mode::start:
        if (leaf_ == leaves_.size()) return std::nullopt;
        path_ = view_.path_from_root(leaves_[leaf_]);
        pos_ = 0;
        walked_ = 0;
        any_aux_ = false;
        aux_here_ = false;
        iteration_moves_.push_back(0);
        sweep_.emplace(TreeView::ball(*graph_, view_.root(), small_radius_),
                       state, threshold_);
        mode_ = Mode::outward;
        break;
      case Mode::outward: {
        Vertex here = path_[pos_];
        bool cooled = !any_aux_ || walked_ - last_aux_ >= cooldown_;
        if (pos_ > 0 && !aux_here_ && cooled && graph_->degree(here) > 2) {
          aux_here_ = true;
          any_aux_ = true;
          last_aux_ = walked_;
          sweep_.emplace(TreeView::ball(*graph_, here, large_radius_), state,
                         threshold_);
          break;
        }
        if (pos_ + 1 == path_.size()) {
          mode_ = Mode::homeward;
          break;
        }
        ++pos_;
        ++walked_;
        aux_here_ = false;
        return emit(path_[pos_]);
      }
      case Mode::homeward:
        if (pos_ == 0) {
          ++leaf_;
          mode_ = Mode::start;
          break;
        }
        --pos_;
        return emit(path_[pos_]);
    }
  }
}

MoveScript generic_dfs(const Graph& g) {
  MoveScript s;
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::function<void(Vertex)> visit = [&](Vertex v) {
    seen[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (seen[w]) continue;
      s.moves.push_back(w);
      visit(w);
      s.moves.push_back(v);
    }
  };
  visit(0);
  return s;
}

TerminalPolicy::TerminalPolicy(const Graph& g)
    : graph_(&g), path_{0}, used_(g.order(), 0) {
  used_[0] = 1;
}

std::optional<Vertex> TerminalPolicy::next(const SimState& /*state*/) {
  if (pending_at_ < pending_.size()) return pending_[pending_at_++];
  while (!path_.empty()) {
    Vertex end = path_.back();
    for (Vertex w : graph_->neighbors(end)) {
      if (!used_[w]) {
        used_[w] = 1;
        path_.push_back(w);
        return w;
      }
    }
    // `end` is terminal: back to the first vertex, out again to the new end.
    path_.pop_back();
    if (path_.empty()) return std::nullopt;
    pending_.clear();
    pending_at_ = 0;
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) pending_.push_back(*it);
    for (std::size_t i = 1; i < path_.size(); ++i) pending_.push_back(path_[i]);
    return pending_[pending_at_++];
  }
  return std::nullopt;
}

MoveScript kahn_star_strategy(const Graph& g_star, int arms, int long_length) {
  if (arms < 2 || arms % 2 != 0 || long_length < 1 ||
      !(generate_kahn_pair(arms, long_length).augmented == g_star)) {
    throw ApplicabilityError("kahn-star needs the augmented kahn graph");
  }
  const auto sets = kahn_arms(arms, long_length);
  const Vertex root = 0;
  MoveScript s;
  // First fan: zig-zag from the tip of the long arm back to the root.
  const Vertex hub = sets[0].front();
  const auto& first = sets[1];
  s.placement = hub;
  for (auto it = first.rbegin(); it != first.rend(); ++it) {
    s.moves.push_back(*it);
    s.moves.push_back(hub);
  }
  s.moves.push_back(root);
  // Remaining fans: zig-zag outward from the root.
  for (std::size_t f = 2; f < sets.size(); f += 2) {
    const Vertex h = sets[f].front();
    const auto& arm = sets[f + 1];
    s.moves.push_back(h);
    for (std::size_t i = 0; i < arm.size(); ++i) {
      s.moves.push_back(arm[i]);
      if (i + 1 < arm.size()) s.moves.push_back(h);
    }
    if (f + 2 < sets.size()) {
      s.moves.push_back(h);
      s.moves.push_back(root);
    }
  }
  return s;
}

}  // namespace decon
