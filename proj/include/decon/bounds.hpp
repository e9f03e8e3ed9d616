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


#ifndef DECON_BOUNDS_HPP_
#define DECON_BOUNDS_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "decon/generators.hpp"
#include "decon/oracle.hpp"

namespace decon {

// Instance sizes for the summary table.
struct BoundsOptions {
  int path_n = 6;
  int cycle_n = 6;
  int complete_n = 5;
  int bipartite_m = 3;
  int bipartite_n = 4;
  std::vector<int> spider_arms{3, 3, 2};
  int tree_n = 400;
  std::uint64_t seed = kDefaultSeed;
  int mesh_p = 3;
  int mesh_q = 4;
  int planar_side = 3;  // planar row uses the planar_side^2 mesh
  int general_n = 8;
  int general_extra = 4;
  OracleOptions oracle;
};

struct BoundsRow {
  std::string label;
  std::string upper;  // formula=value
  std::string lower;
  std::string instance;
  std::string strategy;
  std::string variant;
  int tau = 0;
  bool success = false;
  int ticks = 0;
  bool monotone = false;
  std::optional<int> iota;  // empty when the oracle is out of budget
};

std::vector<BoundsRow> bounds_table(const BoundsOptions& options = {});

void write_bounds_text(std::ostream& out, const std::vector<BoundsRow>& rows);
void write_bounds_tsv(std::ostream& out, const std::vector<BoundsRow>& rows);

}  // namespace decon

#endif  // DECON_BOUNDS_HPP_
