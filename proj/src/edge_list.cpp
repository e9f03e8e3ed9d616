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

#include "decon/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "decon/errors.hpp"

namespace decon {
namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  return std::ranges::all_of(s, [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream fields(body);
    if (n < 0) {
      if (!(fields >> n) || n < 1) {
        throw ParameterError("edge list line " + std::to_string(line_no) +
                             ": expected a positive vertex count");
      }
      continue;
    }
    long long u = 0;
    long long v = 0;
    if (!(fields >> u >> v)) {
      throw ParameterError("edge list line " + std::to_string(line_no) +
                           ": expected 'u v'");
    }
    std::string extra;
    if (fields >> extra) {
      throw ParameterError("edge list line " + std::to_string(line_no) +
                           ": trailing token '" + extra + "'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParameterError("edge list line " + std::to_string(line_no) +
                           ": vertex out of range");
    }
    if (u == v) {
      throw ParameterError("edge list line " + std::to_string(line_no) +
                           ": loop at vertex " + std::to_string(u));
    }
    edges.emplace_back(static_cast<Vertex>(std::min(u, v)),
                       static_cast<Vertex>(std::max(u, v)));
  }
  if (n < 0) throw ParameterError("edge list is empty");
  std::ranges::sort(edges);
  auto [first, last] = std::ranges::unique(edges);
  edges.erase(first, last);
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParameterError("cannot open edge list " + file.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace decon
