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

#include "decon/generators.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <string>

#include "decon/edge_list.hpp"
#include "decon/errors.hpp"

namespace decon {
namespace {

TopologyDescriptor make(Family family, std::vector<int> params) {
  TopologyDescriptor d;
  d.family = family;
  d.params = std::move(params);
  return d;
}

void require(bool ok, const TopologyDescriptor& desc, const std::string& what) {
  if (!ok) {
    throw ParameterError(std::string(family_name(desc.family)) + ": " + what);
  }
}

void require_arity(const TopologyDescriptor& desc, std::size_t arity) {
  require(desc.params.size() == arity, desc,
          "expected " + std::to_string(arity) + " parameter(s), got " +
              std::to_string(desc.params.size()));
}

std::vector<Edge> mesh_edges(int p, int q, bool wrap) {
  std::vector<Edge> edges;
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= p; ++j) {
      Vertex v = mesh_vertex(p, i, j);
      if (j < p) edges.emplace_back(v, mesh_vertex(p, i, j + 1));
      if (i < q) edges.emplace_back(v, mesh_vertex(p, i + 1, j));
    }
  }
  if (wrap) {
    for (int j = 1; j <= p; ++j) {
      edges.emplace_back(mesh_vertex(p, 1, j), mesh_vertex(p, q, j));
    }
  }
  return edges;
}

std::vector<Edge> spider_edges(const std::vector<int>& arms, int* order) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int length : arms) {
    Vertex prev = 0;
    for (int k = 0; k < length; ++k) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  *order = next;
  return edges;
}

// Uniform random labelled tree from a random Pruefer sequence.
std::vector<Edge> random_tree_edges(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (int c : code) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  int u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return edges;
}

std::vector<int> parse_ints(std::string_view text, std::string_view spec) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view field = text.substr(
        start, comma == std::string_view::npos ? text.size() - start
                                               : comma - start);
    long long value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() ||
        value < -2147483647LL || value > 2147483647LL) {
      throw ParameterError("bad integer '" + std::string(field) +
                           "' in topology '" + std::string(spec) + "'");
    }
    out.push_back(static_cast<int>(value));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::star: return "star";
    case Family::spider: return "spider";
    case Family::kary_tree: return "kary_tree";
    case Family::mesh: return "mesh";
    case Family::cylinder: return "cylinder";
    case Family::random_tree: return "random_tree";
    case Family::random_graph: return "random_graph";
    case Family::kahn_pair: return "kahn_pair";
    case Family::edge_list_file: return "edge_list_file";
  }
  return "unknown";
}

TopologyDescriptor TopologyDescriptor::path(int n) {
  return make(Family::path, {n});
}
TopologyDescriptor TopologyDescriptor::cycle(int n) {
  return make(Family::cycle, {n});
}
TopologyDescriptor TopologyDescriptor::complete(int n) {
  return make(Family::complete, {n});
}
TopologyDescriptor TopologyDescriptor::complete_bipartite(int m, int n) {
  return make(Family::complete_bipartite, {m, n});
}
TopologyDescriptor TopologyDescriptor::star(int leaves) {
  return make(Family::star, {leaves});
}
TopologyDescriptor TopologyDescriptor::spider(std::vector<int> arm_lengths) {
  return make(Family::spider, std::move(arm_lengths));
}
TopologyDescriptor TopologyDescriptor::kary_tree(int k, int height) {
  return make(Family::kary_tree, {k, height});
}
TopologyDescriptor TopologyDescriptor::mesh(int p, int q) {
  return make(Family::mesh, {p, q});
}
TopologyDescriptor TopologyDescriptor::cylinder(int p, int q) {
  return make(Family::cylinder, {p, q});
}
TopologyDescriptor TopologyDescriptor::random_tree(int n, std::uint64_t seed) {
  TopologyDescriptor d = make(Family::random_tree, {n});
  d.seed = seed;
  return d;
}
TopologyDescriptor TopologyDescriptor::random_graph(int n, int extra_edges,
                                                    std::uint64_t seed) {
  TopologyDescriptor d = make(Family::random_graph, {n, extra_edges});
  d.seed = seed;
  return d;
}
TopologyDescriptor TopologyDescriptor::kahn(int arms, int long_length,
                                            bool augmented) {
  TopologyDescriptor d = make(Family::kahn_pair, {arms, long_length});
  d.kahn_star = augmented;
  return d;
}
TopologyDescriptor TopologyDescriptor::edge_list(std::string file) {
  TopologyDescriptor d = make(Family::edge_list_file, {});
  d.file = std::move(file);
  return d;
}

void validate(const TopologyDescriptor& desc) {
  const auto& p = desc.params;
  switch (desc.family) {
    case Family::path:
    case Family::complete:
      require_arity(desc, 1);
      require(p[0] >= 1, desc, "n must be >= 1");
      break;
    case Family::cycle:
      require_arity(desc, 1);
      require(p[0] >= 3, desc, "n must be >= 3");
      break;
    case Family::complete_bipartite:
      require_arity(desc, 2);
      require(p[0] >= 1 && p[1] >= 1, desc, "both parts must be nonempty");
      break;
    case Family::star:
      require_arity(desc, 1);
      require(p[0] >= 1, desc, "needs at least one leaf");
      break;
    case Family::spider:
      require(!p.empty(), desc, "needs at least one arm");
      require(std::ranges::all_of(p, [](int len) { return len >= 1; }), desc,
              "arm lengths must be >= 1");
      break;
    case Family::kary_tree:
      require_arity(desc, 2);
      require(p[0] >= 1 && p[1] >= 0, desc, "needs k >= 1 and h >= 0");
      break;
    case Family::mesh:
      require_arity(desc, 2);
      require(p[0] >= 1 && p[1] >= 1, desc, "needs p, q >= 1");
      break;
    case Family::cylinder:
      require_arity(desc, 2);
      require(p[0] >= 1 && p[1] >= 3, desc, "needs p >= 1 and q >= 3");
      break;
    case Family::random_tree:
      require_arity(desc, 1);
      require(p[0] >= 1, desc, "n must be >= 1");
      break;
    case Family::random_graph: {
      require_arity(desc, 2);
      require(p[0] >= 1 && p[1] >= 0, desc, "needs n >= 1, extra >= 0");
      long long n = p[0];
      require(p[1] <= n * (n - 1) / 2 - (n - 1), desc,
              "more extra edges than the complement of a tree holds");
      break;
    }
    case Family::kahn_pair:
      require_arity(desc, 2);
      require(p[0] >= 2 && p[0] % 2 == 0, desc, "arm count must be even, >= 2");
      require(p[1] >= 1, desc, "long arm length must be >= 1");
      break;
    case Family::edge_list_file:
      require(!desc.file.empty(), desc, "missing file name");
      break;
  }
}

std::vector<std::vector<Vertex>> kahn_arms(int arms, int long_length) {
  std::vector<std::vector<Vertex>> out;
  Vertex next = 1;
  for (int i = 1; i <= arms; ++i) {
    int length = (i % 2 == 1) ? 1 : long_length;
    std::vector<Vertex> arm;
    for (int k = 0; k < length; ++k) arm.push_back(next++);
    out.push_back(std::move(arm));
  }
  return out;
}

KahnPair generate_kahn_pair(int arms, int long_length) {
  validate(TopologyDescriptor::kahn(arms, long_length, false));
  std::vector<int> lengths;
  for (int i = 1; i <= arms; ++i) {
    lengths.push_back(i % 2 == 1 ? 1 : long_length);
  }
  int n = 0;
  std::vector<Edge> edges = spider_edges(lengths, &n);
  Graph spider(n, edges);
  auto arm_sets = kahn_arms(arms, long_length);
  for (std::size_t i = 0; i + 1 < arm_sets.size(); i += 2) {
    for (Vertex v : arm_sets[i]) {
      for (Vertex w : arm_sets[i + 1]) edges.emplace_back(v, w);
    }
  }
  return {std::move(spider), Graph(n, edges)};
}

Graph generate(const TopologyDescriptor& desc) {
  validate(desc);
  const auto& p = desc.params;
  std::vector<Edge> edges;
  int n = 0;
  switch (desc.family) {
    case Family::path:
      n = p[0];
      for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case Family::cycle:
      n = p[0];
      for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      break;
    case Family::complete:
      n = p[0];
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      break;
    case Family::complete_bipartite:
      n = p[0] + p[1];
      for (int a = 0; a < p[0]; ++a) {
        for (int b = p[0]; b < n; ++b) edges.emplace_back(a, b);
      }
      break;
    case Family::star:
      n = p[0] + 1;
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Family::spider:
      edges = spider_edges(p, &n);
      break;
    case Family::kary_tree: {
      const int k = p[0];
      long long count = 1;
      long long level = 1;
      for (int d = 0; d < p[1]; ++d) {
        level *= k;
        count += level;
        require(count <= 50'000'000, desc, "tree too large");
      }
      n = static_cast<int>(count);
      for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / k, v);
      break;
    }
    case Family::mesh:
    case Family::cylinder:
      n = p[0] * p[1];
      edges = mesh_edges(p[0], p[1], desc.family == Family::cylinder);
      break;
    case Family::random_tree: {
      n = p[0];
      std::mt19937_64 rng(desc.seed);
      edges = random_tree_edges(n, rng);
      break;
    }
    case Family::random_graph: {
      n = p[0];
      std::mt19937_64 rng(desc.seed);
      edges = random_tree_edges(n, rng);
      std::set<Edge> present;
      for (auto [u, v] : edges) present.emplace(std::min(u, v), std::max(u, v));
      std::uniform_int_distribution<int> pick(0, n - 1);
      int added = 0;
      while (added < p[1]) {
        int u = pick(rng);
        int v = pick(rng);
        if (u == v) continue;
        Edge e{std::min(u, v), std::max(u, v)};
        if (present.insert(e).second) {
          edges.push_back(e);
          ++added;
        }
      }
      break;
    }
    case Family::kahn_pair: {
      auto pair = generate_kahn_pair(p[0], p[1]);
      return desc.kahn_star ? pair.augmented : pair.spider;
    }
    case Family::edge_list_file:
      return read_edge_list(std::filesystem::path(desc.file));
  }
  return Graph(n, edges);
}

TopologyDescriptor parse_topology(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParameterError("topology '" + std::string(text) +
                         "' must look like family:params");
  }
  std::string family(text.substr(0, colon));
  std::ranges::replace(family, '-', '_');
  std::string_view rest = text.substr(colon + 1);
  if (family == "file" || family == "edge_list" || family == "edges") {
    return TopologyDescriptor::edge_list(std::string(rest));
  }
  std::vector<int> values = parse_ints(rest, text);
  TopologyDescriptor desc;
  auto take_seed = [&](std::size_t arity) {
    if (values.size() == arity + 1) {
      desc.seed = static_cast<std::uint64_t>(values.back());
      values.pop_back();
    }
  };
  if (family == "path") {
    desc.family = Family::path;
  } else if (family == "cycle") {
    desc.family = Family::cycle;
  } else if (family == "complete") {
    desc.family = Family::complete;
  } else if (family == "bipartite" || family == "complete_bipartite") {
    desc.family = Family::complete_bipartite;
  } else if (family == "star") {
    desc.family = Family::star;
  } else if (family == "spider") {
    desc.family = Family::spider;
  } else if (family == "kary" || family == "kary_tree") {
    desc.family = Family::kary_tree;
  } else if (family == "mesh") {
    desc.family = Family::mesh;
  } else if (family == "cylinder") {
    desc.family = Family::cylinder;
  } else if (family == "random_tree" || family == "tree") {
    desc.family = Family::random_tree;
    take_seed(1);
  } else if (family == "random_graph" || family == "graph") {
    desc.family = Family::random_graph;
    take_seed(2);
  } else if (family == "kahn" || family == "kahn_pair") {
    desc.family = Family::kahn_pair;
  } else if (family == "kahn_star") {
    desc.family = Family::kahn_pair;
    desc.kahn_star = true;
  } else {
    throw ParameterError("unknown topology family '" + family + "'");
  }
  desc.params = std::move(values);
  validate(desc);
  return desc;
}

std::string to_string(const TopologyDescriptor& desc) {
  std::string out;
  switch (desc.family) {
    case Family::complete_bipartite: out = "bipartite"; break;
    case Family::kary_tree: out = "kary"; break;
    case Family::kahn_pair: out = desc.kahn_star ? "kahn-star" : "kahn"; break;
    case Family::edge_list_file: return "file:" + desc.file;
    default: out = std::string(family_name(desc.family)); break;
  }
  std::ranges::replace(out, '_', '-');
  out += ':';
  for (std::size_t i = 0; i < desc.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(desc.params[i]);
  }
  if (desc.family == Family::random_tree ||
      desc.family == Family::random_graph) {
    out += ',' + std::to_string(desc.seed);
  }
  return out;
}

}  // namespace decon
