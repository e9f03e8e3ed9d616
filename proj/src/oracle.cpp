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


#include "decon/oracle.hpp"

#include <chrono>
#include <limits>
#include <string>

#include "decon/errors.hpp"

namespace decon {
namespace {

using Code = std::uint32_t;

class Space {
 public:
  Space(const Graph& g, int tau, SemanticVariant variant)
      : g_(g),
        n_(g.order()),
        alphabet_(oracle_alphabet(tau, variant)),
        threshold_(Rules{tau, variant}.flip_threshold()),
        stay_(variant.allow_stay),
        digits_(n_) {
    pow_.assign(n_ + 1, 1);
    for (int i = 1; i <= n_; ++i) pow_[i] = pow_[i - 1] * alphabet_;
    total_ = static_cast<std::uint64_t>(n_) * pow_[n_];
  }

  std::uint64_t total() const { return total_; }

  Code initial(Vertex v) const {
    return static_cast<Code>(v + static_cast<std::uint64_t>(n_) * pow_[v]);
  }

  Vertex agent(Code c) const { return static_cast<Vertex>(c % n_); }

  // Calls visit(dest, successor, all_clean) for every legal move.
  template <typename F>
  void expand(Code c, F&& visit) {
    const Vertex a = static_cast<Vertex>(c % n_);
    std::uint64_t rest = c / n_;
    for (int v = 0; v < n_; ++v) {
      digits_[v] = static_cast<int>(rest % alphabet_);
      rest /= alphabet_;
    }
    if (stay_) apply(a, visit);
    for (Vertex b : g_.neighbors(a)) apply(b, visit);
  }

 private:
  template <typename F>
  void apply(Vertex b, F& visit) {
    const int saved = digits_[b];
    digits_[b] = 1;
    bool all_clean = true;
    std::uint64_t code = 0;
    for (int v = n_ - 1; v >= 0; --v) {
      int d = digits_[v];
      if (d != 0 && v != b) {
        bool hit = false;
        for (Vertex w : g_.neighbors(v)) {
          if (digits_[w] == 0) {
            hit = true;
            break;
          }
        }
        if (!hit) {
          d = 1;
        } else {
          d += 1;
          if (d - 1 >= threshold_) d = 0;
        }
      }
      if (d == 0) all_clean = false;
      code = code * alphabet_ + d;
    }
    digits_[b] = saved;
    visit(b, static_cast<Code>(code * n_ + b), all_clean);
  }

  const Graph& g_;
  int n_;
  int alphabet_;
  int threshold_;
  bool stay_;
  std::vector<std::uint64_t> pow_;
  std::uint64_t total_ = 0;
  std::vector<int> digits_;
};

}  // namespace

int oracle_alphabet(int tau, SemanticVariant variant) {
  if (tau < 0) throw ParameterError("tau must be >= 0");
  return Rules{tau, variant}.flip_threshold() + 1;
}

std::uint64_t configuration_count(int n, int tau, SemanticVariant variant) {
  const std::uint64_t a = static_cast<std::uint64_t>(oracle_alphabet(tau, variant));
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = static_cast<std::uint64_t>(n);
  for (int i = 0; i < n; ++i) {
    if (total > cap / a) return cap;
    total *= a;
  }
  return total;
}

Feasibility feasible(const Graph& g, int tau, SemanticVariant variant,
                     const OracleOptions& options) {
  if (options.state_budget >= (std::uint64_t{1} << 32)) {
    throw ParameterError("oracle state budget must be below 2^32");
  }
  const int n = g.order();
  const std::uint64_t need = configuration_count(n, tau, variant);
  if (need > options.state_budget) {
    throw ResourceError("oracle: " + std::to_string(n) + " * " +
                        std::to_string(oracle_alphabet(tau, variant)) + "^" +
                        std::to_string(n) + " configurations exceed the budget of " +
                        std::to_string(options.state_budget));
  }
  Feasibility out;
  if (n == 1) {
    out.feasible = true;
    out.witness = MoveScript{};
    out.states = 1;
    return out;
  }
  Space space(g, tau, variant);
  std::vector<std::uint64_t> seen((space.total() + 63) / 64, 0);
  auto mark = [&](Code c) {
    std::uint64_t& word = seen[c >> 6];
    std::uint64_t bit = std::uint64_t{1} << (c & 63);
    if (word & bit) return false;
    word |= bit;
    return true;
  };

  std::vector<std::vector<Code>> layers(1);
  for (Vertex v = 0; v < n; ++v) {
    Code c = space.initial(v);
    mark(c);
    layers[0].push_back(c);
  }
  out.states = layers[0].size();

  std::optional<Code> goal;
  while (!goal && !layers.back().empty()) {
    std::vector<Code> next;
    for (Code c : layers.back()) {
      space.expand(c, [&](Vertex, Code s, bool clean) {
        if (goal || !mark(s)) return;
        next.push_back(s);
        if (clean) goal = s;
      });
      if (goal) break;
    }
    out.states += next.size();
    layers.push_back(std::move(next));
  }
  if (!goal) return out;

  // Walk back through the layers to recover one shortest schedule.
  std::vector<Vertex> reversed;
  Code target = *goal;
  for (std::size_t d = layers.size() - 1; d > 0; --d) {
    bool found = false;
    for (Code c : layers[d - 1]) {
      space.expand(c, [&](Vertex b, Code s, bool) {
        if (!found && s == target) {
          found = true;
          reversed.push_back(b);
        }
      });
      if (found) {
        target = c;
        break;
      }
    }
    if (!found) throw std::logic_error("oracle: broken predecessor chain");
  }
  MoveScript w;
  w.placement = space.agent(target);
  w.moves.assign(reversed.rbegin(), reversed.rend());
  out.feasible = true;
  out.witness = std::move(w);
  return out;
}

OracleResult immunity_number(const Graph& g, SemanticVariant variant,
                             std::optional<int> tau_max,
                             const OracleOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  OracleResult r;
  r.graph_digest = g.digest();
  r.variant = variant;
  const int limit = tau_max.value_or(2 * (g.order() - 1));
  for (int tau = 0; tau <= limit; ++tau) {
    Feasibility f = feasible(g, tau, variant, options);
    r.feasible.push_back(f.feasible);
    r.states.push_back(f.states);
    r.explored += f.states;
    if (f.feasible) {
      r.iota = tau;
      r.witness = std::move(f.witness);
      break;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start).count();
  return r;
}

}  // namespace decon
