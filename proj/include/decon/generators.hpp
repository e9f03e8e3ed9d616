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

#ifndef DECON_GENERATORS_HPP_
#define DECON_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "decon/graph.hpp"

namespace decon {

inline constexpr std::uint64_t kDefaultSeed = 20130704;

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  spider,
  kary_tree,
  mesh,
  cylinder,
  random_tree,
  random_graph,
  kahn_pair,
  edge_list_file,
};

std::string_view family_name(Family family);

// Names one concrete graph. `params` is family specific:
//
//   path, cycle, complete   {n}
//   complete_bipartite      {m, n}      parts 0..m-1 and m..m+n-1
//   star                    {k}         centre 0, leaves 1..k (S_k)
//   spider                  {len_1, ..., len_d}  root 0, arms numbered
//                                       outward in the order given
//   kary_tree               {k, h}      perfect, heap numbering
//   mesh, cylinder          {p, q}      p rows, q columns; vertex at column
//                                       i, row j (1-based) is (i-1)*p+(j-1)
//   random_tree             {n}         uniform labelled tree (Pruefer)
//   random_graph            {n, extra}  random tree plus `extra` edges
//   kahn_pair               {a, L}      spider with a arms, odd arms of
//                                       length 1 and even arms of length L;
//                                       `kahn_star` selects the augmented
//                                       graph
//   edge_list_file          {}          reads `file`
struct TopologyDescriptor {
  Family family = Family::path;
  std::vector<int> params;
  std::uint64_t seed = kDefaultSeed;
  std::string file;
  bool kahn_star = false;

  static TopologyDescriptor path(int n);
  static TopologyDescriptor cycle(int n);
  static TopologyDescriptor complete(int n);
  static TopologyDescriptor complete_bipartite(int m, int n);
  static TopologyDescriptor star(int leaves);
  static TopologyDescriptor spider(std::vector<int> arm_lengths);
  static TopologyDescriptor kary_tree(int k, int height);
  static TopologyDescriptor mesh(int p, int q);
  static TopologyDescriptor cylinder(int p, int q);
  static TopologyDescriptor random_tree(int n, std::uint64_t seed = kDefaultSeed);
  static TopologyDescriptor random_graph(int n, int extra_edges,
                                         std::uint64_t seed = kDefaultSeed);
  static TopologyDescriptor kahn(int arms, int long_length, bool augmented);
  static TopologyDescriptor edge_list(std::string file);
};

// Throws ParameterError when the descriptor is outside its family's domain.
void validate(const TopologyDescriptor& desc);

Graph generate(const TopologyDescriptor& desc);

struct KahnPair {
  Graph spider;     // G
  Graph augmented;  // G*, a supergraph of G on the same vertices
};
KahnPair generate_kahn_pair(int arms, int long_length);

// Vertex lists of a kahn_pair spider, arm by arm (root excluded).
std::vector<std::vector<Vertex>> kahn_arms(int arms, int long_length);

// "mesh:4,6", "cycle:7", "spider:3,3,2", "random_tree:200,17",
// "kahn-star:4,3", "file:graph.txt", ...
TopologyDescriptor parse_topology(std::string_view text);
std::string to_string(const TopologyDescriptor& desc);

inline Vertex mesh_vertex(int p, int column, int row) {
  return (column - 1) * p + (row - 1);
}

}  // namespace decon

#endif  // DECON_GENERATORS_HPP_
