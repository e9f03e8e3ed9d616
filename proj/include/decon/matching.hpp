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


#ifndef DECON_MATCHING_HPP_
#define DECON_MATCHING_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "decon/generators.hpp"
#include "decon/graph.hpp"

namespace decon {

// A half-sized vertex subset W of the s x s mesh.
class CutInstance {
 public:
  // Throws ParameterError for s < 1 or odd s * s, ContractError when
  // |W| != s * s / 2 or W repeats or leaves the mesh.
  CutInstance(int side, std::span<const Vertex> w);

  int side() const { return side_; }
  const Graph& mesh() const { return mesh_; }
  bool in_w(Vertex v) const { return in_w_[v] != 0; }
  const std::vector<Vertex>& w() const { return w_; }

  // Edges (u, v) with u in W and v outside, ascending.
  std::vector<Edge> cut_edges() const;

 private:
  int side_;
  Graph mesh_;
  std::vector<std::uint8_t> in_w_;
  std::vector<Vertex> w_;
};

struct Matching {
  int size = 0;
  std::vector<Edge> edges;  // (W side, complement side)
};

// Maximum matching over the cut edges by repeated augmenting-path search.
Matching max_cut_matching(const CutInstance& inst);

// True when some unmatched W vertex still has an augmenting path.
bool has_augmenting_path(const CutInstance& inst, const Matching& m);

// W equals the full set of cells in its bounding box.
bool is_rectangular(int side, std::span<const Vertex> w);

enum class CheckMode { exhaustive, sampled };
std::string_view to_string(CheckMode mode);

struct CutBoundOptions {
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = kDefaultSeed;
};

struct CutBoundReport {
  int side = 0;
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t samples = 0;  // subsets examined
  std::uint64_t seed = 0;
  int minimum = 0;
  std::vector<Vertex> worst;  // first minimiser in enumeration order
  std::uint64_t minimizers = 0;
  std::uint64_t rectangular_minimizers = 0;
  std::vector<std::vector<Vertex>> nonrectangular_minimizers;  // first few
  bool pass = false;
};

// Exhaustive mode enumerates subsets in colexicographic order and is limited
// to s <= 4 (ResourceError beyond).
CutBoundReport verify_cut_bound(int side, const CutBoundOptions& options = {});

void write_report(std::ostream& out, const CutBoundReport& report);

}  // namespace decon

#endif  // DECON_MATCHING_HPP_
