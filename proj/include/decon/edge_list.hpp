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

#ifndef DECON_EDGE_LIST_HPP_
#define DECON_EDGE_LIST_HPP_

#include <filesystem>
#include <iosfwd>

#include "decon/graph.hpp"

namespace decon {

// Text interchange format: first non-comment line holds n, then one
// whitespace-separated 0-based "u v" pair per line. '#' starts a comment.
// Repeated edges (in either orientation) are dropped; loops, bad indices
// and disconnected inputs are rejected.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& file);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace decon

#endif  // DECON_EDGE_LIST_HPP_
