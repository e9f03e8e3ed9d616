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

#include <set>
#include <sstream>

#include "decon/errors.hpp"
#include "decon/matching.hpp"
#include "reference.hpp"

namespace {

using decon::CutInstance;
using decon::Vertex;

std::vector<Vertex> members(unsigned mask, int n) {
  std::vector<Vertex> w;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1u) w.push_back(v);
  }
  return w;
}

void expect_valid(const CutInstance& inst, const decon::Matching& m) {
  std::set<Vertex> used;
  EXPECT_EQ(m.size, static_cast<int>(m.edges.size()));
  for (auto [a, b] : m.edges) {
    EXPECT_TRUE(inst.in_w(a));
    EXPECT_FALSE(inst.in_w(b));
    EXPECT_TRUE(inst.mesh().has_edge(a, b));
    EXPECT_TRUE(used.insert(a).second);
    EXPECT_TRUE(used.insert(b).second);
  }
}

TEST(CutInstance, Validation) {
  std::vector<Vertex> half{0, 1};
  EXPECT_NO_THROW(CutInstance(2, half));
  EXPECT_THROW(CutInstance(3, half), decon::ParameterError);
  EXPECT_THROW(CutInstance(0, half), decon::ParameterError);
  std::vector<Vertex> short_w{0};
  EXPECT_THROW(CutInstance(2, short_w), decon::ContractError);
  std::vector<Vertex> dup{1, 1};
  EXPECT_THROW(CutInstance(2, dup), decon::ContractError);
  std::vector<Vertex> out{0, 7};
  EXPECT_THROW(CutInstance(2, out), decon::ContractError);
}

TEST(CutInstance, CutEdges) {
  std::vector<Vertex> w{0, 1, 2, 3, 4, 5, 6, 7};  // two columns of the 4x4 mesh
  CutInstance inst(4, w);
  EXPECT_EQ(inst.cut_edges().size(), 4u);
  EXPECT_EQ(inst.mesh().order(), 16);
}

TEST(Matching, AgreesWithBruteForce) {
  const int n = 16;
  int compared = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != n / 2) continue;
    auto w = members(mask, n);
    CutInstance inst(4, w);
    auto cut = inst.cut_edges();
    auto m = decon::max_cut_matching(inst);
    expect_valid(inst, m);
    EXPECT_FALSE(decon::has_augmenting_path(inst, m));
    if (cut.size() > 12) continue;
    ++compared;
    ASSERT_EQ(m.size, ref::brute_matching(cut)) << "mask=" << mask;
  }
  EXPECT_GT(compared, 100);
}

TEST(Matching, AugmentingPathDetected) {
  std::vector<Vertex> w{0, 1, 2, 3, 4, 5, 6, 7};
  CutInstance inst(4, w);
  decon::Matching empty;
  EXPECT_TRUE(decon::has_augmenting_path(inst, empty));
}

TEST(Rectangular, Shapes) {
  std::vector<Vertex> column{0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_TRUE(decon::is_rectangular(4, column));
  std::vector<Vertex> rows{0, 4, 8, 12, 1, 5, 9, 13};
  EXPECT_TRUE(decon::is_rectangular(4, rows));
  std::vector<Vertex> ragged{0, 1, 2, 3, 4, 5, 6, 8};
  EXPECT_FALSE(decon::is_rectangular(4, ragged));
  std::vector<Vertex> corner{0, 5};
  EXPECT_FALSE(decon::is_rectangular(2, corner));
}

TEST(CutBound, SideTwo) {
  auto r = decon::verify_cut_bound(2);
  EXPECT_EQ(r.samples, 6u);
  EXPECT_EQ(r.minimum, 2);
  EXPECT_TRUE(r.pass);
}

TEST(CutBound, SideFourExhaustive) {
  auto r = decon::verify_cut_bound(4);
  EXPECT_EQ(r.samples, 12870u);
  EXPECT_EQ(r.minimum, 4);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.rectangular_minimizers, r.minimizers);
  EXPECT_GE(r.rectangular_minimizers, 1u);
  EXPECT_TRUE(decon::is_rectangular(4, r.worst) ||
              !r.nonrectangular_minimizers.empty());
  for (const auto& w : r.nonrectangular_minimizers) {
    EXPECT_FALSE(decon::is_rectangular(4, w));
    EXPECT_EQ(decon::max_cut_matching(CutInstance(4, w)).size, 4);
  }
  std::ostringstream out;
  decon::write_report(out, r);
  EXPECT_NE(out.str().find("result=pass"), std::string::npos);
  EXPECT_NE(out.str().find("subsets=12870"), std::string::npos);
}

TEST(CutBound, SampledIsReproducible) {
  decon::CutBoundOptions o;
  o.mode = decon::CheckMode::sampled;
  o.samples = 2000;
  o.seed = 7;
  auto a = decon::verify_cut_bound(6, o);
  auto b = decon::verify_cut_bound(6, o);
  EXPECT_EQ(a.minimum, b.minimum);
  EXPECT_EQ(a.worst, b.worst);
  EXPECT_GE(a.minimum, 6);
  EXPECT_TRUE(a.pass);
  std::ostringstream out;
  decon::write_report(out, a);
  EXPECT_NE(out.str().find("evidence=probabilistic"), std::string::npos);
  EXPECT_THROW(decon::verify_cut_bound(6), decon::ResourceError);
}

}  // namespace
