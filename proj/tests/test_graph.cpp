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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "decon/edge_list.hpp"
#include "decon/errors.hpp"
#include "decon/generators.hpp"
#include "decon/graph.hpp"
#include "decon/metrics.hpp"
#include "decon/tree.hpp"

namespace {

using decon::Edge;
using decon::Graph;
using decon::TopologyDescriptor;

Graph make(const char* text) {
  return decon::generate(decon::parse_topology(text));
}

TEST(Graph, BuildsSortedAdjacency) {
  std::vector<Edge> edges{{2, 0}, {1, 0}, {1, 2}, {3, 2}};
  Graph g(4, edges);
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.degree(2), 3);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(0, 3));
  auto nb = g.neighbors(2);
  EXPECT_TRUE(std::ranges::is_sorted(nb));
  EXPECT_EQ(g.max_degree(), 3);
  EXPECT_EQ(g.min_degree(), 1);
}

TEST(Graph, RejectsBadInput) {
  std::vector<Edge> loop{{0, 0}};
  EXPECT_THROW(Graph(1, loop), decon::ParameterError);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph(2, dup), decon::ParameterError);
  std::vector<Edge> range{{0, 5}};
  EXPECT_THROW(Graph(2, range), decon::ParameterError);
  std::vector<Edge> split{{0, 1}, {2, 3}};
  EXPECT_THROW(Graph(4, split), decon::StructureError);
  EXPECT_THROW(Graph(0, {}), decon::ParameterError);
}

TEST(Graph, DigestDependsOnEdges) {
  EXPECT_EQ(make("path:5").digest(), make("path:5").digest());
  EXPECT_NE(make("path:5").digest(), make("star:4").digest());
  EXPECT_NE(make("path:5").digest(), make("path:6").digest());
}

TEST(EdgeList, RoundTrip) {
  for (const char* t : {"mesh:3,4", "spider:3,1,2", "random-graph:12,9,5"}) {
    Graph g = make(t);
    std::stringstream ss;
    decon::write_edge_list(ss, g);
    EXPECT_EQ(decon::read_edge_list(ss), g) << t;
  }
}

TEST(EdgeList, CommentsAndDuplicates) {
  std::istringstream in("# header\n3\n0 1 # first\n\n1 0\n1 2\n");
  Graph g = decon::read_edge_list(in);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2u);
}

TEST(EdgeList, Errors) {
  std::istringstream trailing("2\n0 1 7\n");
  EXPECT_THROW(decon::read_edge_list(trailing), decon::ParameterError);
  std::istringstream range("2\n0 2\n");
  EXPECT_THROW(decon::read_edge_list(range), decon::ParameterError);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(decon::read_edge_list(empty), decon::ParameterError);
  std::istringstream split("4\n0 1\n2 3\n");
  EXPECT_THROW(decon::read_edge_list(split), decon::StructureError);
}

TEST(EdgeList, FileTopology) {
  auto path = std::filesystem::temp_directory_path() / "decon_test_edges.txt";
  {
    std::ofstream out(path);
    decon::write_edge_list(out, make("cycle:5"));
  }
  Graph g = make(("file:" + path.string()).c_str());
  EXPECT_EQ(g, make("cycle:5"));
  std::filesystem::remove(path);
}

TEST(Generators, Sizes) {
  struct Case {
    const char* text;
    int n;
    std::size_t m;
  };
  for (auto c : std::vector<Case>{{"path:7", 7, 6},
                                  {"cycle:7", 7, 7},
                                  {"complete:5", 5, 10},
                                  {"bipartite:3,4", 7, 12},
                                  {"star:5", 6, 5},
                                  {"spider:3,3,2", 9, 8},
                                  {"kary:3,2", 13, 12},
                                  {"mesh:3,4", 12, 17},
                                  {"cylinder:3,4", 12, 20},
                                  {"random-tree:50,3", 50, 49},
                                  {"random-graph:20,7,3", 20, 26},
                                  {"kahn:4,3", 9, 8}}) {
    Graph g = make(c.text);
    EXPECT_EQ(g.order(), c.n) << c.text;
    EXPECT_EQ(g.size(), c.m) << c.text;
  }
}

TEST(Generators, MeshLayout) {
  Graph g = make("mesh:3,4");
  EXPECT_TRUE(g.has_edge(decon::mesh_vertex(3, 1, 1), decon::mesh_vertex(3, 1, 2)));
  EXPECT_TRUE(g.has_edge(decon::mesh_vertex(3, 1, 3), decon::mesh_vertex(3, 2, 3)));
  EXPECT_FALSE(g.has_edge(decon::mesh_vertex(3, 1, 3), decon::mesh_vertex(3, 2, 1)));
  EXPECT_EQ(g.max_degree(), 4);
  EXPECT_EQ(g.min_degree(), 2);
}

TEST(Generators, RandomFamiliesAreSeeded) {
  EXPECT_EQ(make("random-tree:80,11"), make("random-tree:80,11"));
  EXPECT_NE(make("random-tree:80,11"), make("random-tree:80,12"));
  EXPECT_EQ(make("random-graph:30,10,4"), make("random-graph:30,10,4"));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(decon::generate(TopologyDescriptor::random_tree(40, seed)).is_tree());
  }
}

TEST(Generators, KahnPair) {
  auto pair = decon::generate_kahn_pair(4, 3);
  const Graph& g = pair.spider;
  const Graph& gs = pair.augmented;
  EXPECT_TRUE(g.is_tree());
  EXPECT_EQ(g.order(), gs.order());
  for (auto [u, v] : g.edges()) EXPECT_TRUE(gs.has_edge(u, v));
  auto arms = decon::kahn_arms(4, 3);
  ASSERT_EQ(arms.size(), 4u);
  EXPECT_EQ(arms[0].size(), 1u);
  EXPECT_EQ(arms[1].size(), 3u);
  // Each short-arm vertex sees the whole following arm in G*.
  for (std::size_t i = 0; i < arms.size(); i += 2) {
    for (auto w : arms[i + 1]) EXPECT_TRUE(gs.has_edge(arms[i][0], w));
  }
  EXPECT_EQ(gs.size(), g.size() + 2 * 3);
  EXPECT_EQ(make("kahn:4,3"), g);
  EXPECT_EQ(make("kahn-star:4,3"), gs);
}

TEST(Generators, ParseAndPrint) {
  for (const char* t : {"path:4", "mesh:3,5", "spider:4,2,2", "kary:2,3",
                        "random-tree:30,9"}) {
    auto d = decon::parse_topology(t);
    EXPECT_EQ(decon::generate(decon::parse_topology(decon::to_string(d))),
              decon::generate(d))
        << t;
  }
  EXPECT_EQ(decon::parse_topology("random_tree:10").seed, decon::kDefaultSeed);
}

TEST(Generators, Validation) {
  for (const char* t : {"cycle:2", "bipartite:0,3", "kahn:3,2", "kahn:4,0",
                        "random-graph:4,4", "mesh:0,3", "spider:2,0", "nope:3",
                        "path"}) {
    EXPECT_THROW(make(t), decon::ParameterError) << t;
  }
}

// Floyd-Warshall as an independent check of the BFS metrics.
TEST(Metrics, AgreesWithAllPairs) {
  for (const char* t : {"mesh:3,5", "random-graph:15,6,2", "random-tree:25,8",
                        "spider:4,1,3"}) {
    Graph g = make(t);
    const int n = g.order();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    auto m = decon::center_and_metrics(g);
    int radius = inf;
    int diameter = 0;
    for (int v = 0; v < n; ++v) {
      int ecc = *std::ranges::max_element(d[v]);
      EXPECT_EQ(m.eccentricity[v], ecc);
      EXPECT_EQ(decon::bfs_distances(g, v), d[v]);
      radius = std::min(radius, ecc);
      diameter = std::max(diameter, ecc);
    }
    EXPECT_EQ(m.radius, radius) << t;
    EXPECT_EQ(m.diameter, diameter) << t;
    for (auto c : m.center) EXPECT_EQ(m.eccentricity[c], radius);
    EXPECT_EQ(decon::center_vertex(g), m.center.front());
  }
}

TEST(Tree, RootedView) {
  Graph g = make("kary:2,3");
  auto t = decon::TreeView::rooted(g, 0);
  EXPECT_EQ(t.height(), 3);
  EXPECT_EQ(t.size(), 15);
  EXPECT_EQ(t.parent(0), -1);
  EXPECT_EQ(t.parent(4), 1);
  EXPECT_EQ(t.depth(14), 3);
  EXPECT_TRUE(t.is_leaf(7));
  EXPECT_FALSE(t.is_leaf(1));
  EXPECT_EQ(t.path_from_root(9), (std::vector<decon::Vertex>{0, 1, 4, 9}));
  EXPECT_EQ(decon::dfs_leaf_order(t).size(), 8u);
  auto sizes = decon::subtree_sizes(t);
  EXPECT_EQ(sizes[0], 15);
  EXPECT_EQ(sizes[2], 7);
  EXPECT_EQ(sizes[10], 1);
}

TEST(Tree, BallAndTruncation) {
  Graph g = make("path:9");
  auto ball = decon::TreeView::ball(g, 4, 2);
  EXPECT_EQ(ball.size(), 5);
  EXPECT_TRUE(ball.contains(2));
  EXPECT_FALSE(ball.contains(1));
  EXPECT_TRUE(ball.is_leaf(6));
  auto full = decon::TreeView::rooted(g, 0);
  auto cut = decon::truncate_at_depth(full, 3);
  EXPECT_EQ(cut.height(), 3);
  EXPECT_EQ(cut.size(), 4);
  EXPECT_THROW(decon::TreeView::ball(g, 0, -1), decon::ParameterError);
}

TEST(Tree, LeafOrderVisitsEveryLeafOnce) {
  Graph g = make("random-tree:200,17");
  auto t = decon::TreeView::rooted(g, decon::center_vertex(g));
  auto leaves = decon::dfs_leaf_order(t);
  std::set<decon::Vertex> seen(leaves.begin(), leaves.end());
  EXPECT_EQ(seen.size(), leaves.size());
  int count = 0;
  for (auto v : t.members()) count += t.is_leaf(v) ? 1 : 0;
  EXPECT_EQ(static_cast<int>(leaves.size()), count);
}

}  // namespace
