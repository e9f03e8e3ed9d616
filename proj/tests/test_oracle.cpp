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


#include <gtest/gtest.h>

#include <random>

#include "decon/errors.hpp"
#include "decon/generators.hpp"
#include "decon/oracle.hpp"
#include "decon/script.hpp"
#include "reference.hpp"

namespace {

using decon::Graph;
using decon::Rule;
using decon::SemanticVariant;
using decon::TopologyDescriptor;

Graph make(const char* text) {
  return decon::generate(decon::parse_topology(text));
}

bool replays_clean(const Graph& g, const decon::MoveScript& s, int tau,
                   SemanticVariant variant) {
  decon::ScriptPolicy policy(s);
  int budget = std::max<int>(1, static_cast<int>(s.moves.size()));
  auto r = decon::run(g, policy, decon::Rules{tau, variant}, budget);
  return r.outcome.verdict == decon::Verdict::fully_clean;
}

std::vector<Graph> small_graphs() {
  std::vector<Graph> out;
  for (const char* t : {"path:2", "path:5", "cycle:4", "cycle:5", "complete:4",
                        "star:3", "star:4", "spider:2,2,1", "bipartite:2,3",
                        "mesh:2,3", "kary:2,2"}) {
    out.push_back(make(t));
  }
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    out.push_back(decon::generate(TopologyDescriptor::random_graph(6, 3, seed)));
  }
  return out;
}

TEST(Oracle, Alphabet) {
  EXPECT_EQ(decon::oracle_alphabet(0, {}), 2);
  EXPECT_EQ(decon::oracle_alphabet(3, {Rule::strict, false}), 4);
  EXPECT_EQ(decon::oracle_alphabet(3, {Rule::lenient, false}), 5);
  EXPECT_EQ(decon::configuration_count(5, 4, {}), 5ULL * 3125);
  EXPECT_EQ(decon::configuration_count(200, 50, {}),
            std::numeric_limits<std::uint64_t>::max());
}

TEST(Oracle, AgreesWithExplicitSearch) {
  for (const Graph& g : small_graphs()) {
    for (Rule rule : {Rule::strict, Rule::lenient}) {
      for (bool stay : {false, true}) {
        SemanticVariant v{rule, stay};
        auto expect = ref::iota(g, rule == Rule::lenient, stay, 2 * (g.order() - 1));
        auto got = decon::immunity_number(g, v);
        ASSERT_TRUE(expect.has_value());
        ASSERT_TRUE(got.iota.has_value());
        EXPECT_EQ(*got.iota, *expect)
            << "n=" << g.order() << " m=" << g.size() << " rule="
            << decon::to_string(rule) << " stay=" << stay;
        ASSERT_TRUE(got.witness.has_value());
        EXPECT_TRUE(replays_clean(g, *got.witness, *got.iota, v));
        // Shortest witness length matches breadth-first search.
        auto path = ref::solve(g, *got.iota, rule == Rule::lenient, stay);
        ASSERT_TRUE(path);
        EXPECT_EQ(got.witness->moves.size() + 1, path->size());
      }
    }
  }
}

TEST(Oracle, FeasibilityIsMonotoneInTau) {
  for (const Graph& g : small_graphs()) {
    for (Rule rule : {Rule::strict, Rule::lenient}) {
      bool seen = false;
      for (int tau = 0; tau <= g.order(); ++tau) {
        auto f = decon::feasible(g, tau, {rule, false});
        if (seen) EXPECT_TRUE(f.feasible) << "tau=" << tau;
        seen = seen || f.feasible;
        if (f.feasible) {
          ASSERT_TRUE(f.witness);
          EXPECT_TRUE(replays_clean(g, *f.witness, tau, {rule, false}));
        } else {
          EXPECT_FALSE(f.witness);
        }
      }
      EXPECT_TRUE(seen);
    }
  }
}

TEST(Oracle, VariantAndStayOrdering) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    int room = n * (n - 1) / 2 - (n - 1);
    int extra = static_cast<int>(rng() % (room + 1));
    Graph g = decon::generate(TopologyDescriptor::random_graph(n, extra, rng()));
    int strict = *decon::immunity_number(g, {Rule::strict, false}).iota;
    int lenient = *decon::immunity_number(g, {Rule::lenient, false}).iota;
    int strict_stay = *decon::immunity_number(g, {Rule::strict, true}).iota;
    int lenient_stay = *decon::immunity_number(g, {Rule::lenient, true}).iota;
    EXPECT_LE(lenient, strict);
    EXPECT_LE(strict_stay, strict);
    EXPECT_LE(lenient_stay, lenient);
    EXPECT_LE(strict, 2 * (n - 1));
  }
}

TEST(Oracle, KnownFamilies) {
  for (int n = 2; n <= 8; ++n) {
    Graph g = decon::generate(TopologyDescriptor::path(n));
    EXPECT_EQ(decon::immunity_number(g, {}).iota, 0) << n;
  }
  for (int n = 4; n <= 7; ++n) {
    Graph g = decon::generate(TopologyDescriptor::cycle(n));
    EXPECT_EQ(decon::immunity_number(g, {}).iota, 2) << n;
  }
  for (int n = 3; n <= 5; ++n) {
    Graph g = decon::generate(TopologyDescriptor::complete(n));
    EXPECT_EQ(decon::immunity_number(g, {}).iota, n - 1) << n;
  }
}

// Expected red: under this phase order a recontaminated centre is cleaned
// again before its leaves are judged, so every star reaches iota = 0.
TEST(Oracle, StarsNeedOne) {
  for (int leaves = 3; leaves <= 6; ++leaves) {
    Graph g = decon::generate(TopologyDescriptor::star(leaves));
    EXPECT_EQ(decon::immunity_number(g, {}).iota, 1) << leaves << " leaves";
  }
}

TEST(Oracle, RecordsEveryTau) {
  Graph g = make("complete:4");
  auto r = decon::immunity_number(g, {});
  ASSERT_EQ(r.feasible.size(), 4u);
  EXPECT_EQ(r.feasible, (std::vector<bool>{false, false, false, true}));
  EXPECT_EQ(r.states.size(), 4u);
  EXPECT_EQ(r.graph_digest, g.digest());
  EXPECT_GT(r.explored, 0u);
  auto capped = decon::immunity_number(g, {}, 1);
  EXPECT_FALSE(capped.iota);
  EXPECT_FALSE(capped.witness);
}

TEST(Oracle, SingleVertex) {
  Graph g = make("path:1");
  auto r = decon::immunity_number(g, {});
  EXPECT_EQ(r.iota, 0);
  EXPECT_TRUE(r.witness->moves.empty());
}

TEST(Oracle, BudgetIsEnforced) {
  Graph g = make("complete:6");
  decon::OracleOptions tiny;
  tiny.state_budget = 1000;
  EXPECT_THROW(decon::feasible(g, 4, {}, tiny), decon::ResourceError);
  decon::OracleOptions huge;
  huge.state_budget = 1ULL << 40;
  EXPECT_THROW(decon::feasible(g, 4, {}, huge), decon::ParameterError);
}

}  // namespace
