// Copyright 2026 The TrussLab Authors
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

// Edge-list text format: one edge per line as two whitespace-separated
// non-negative integers. Blank lines and lines starting with '#' are skipped.
// A trailing "# spurious" comment marks a spurious-clique edge; any other
// trailing comment is ignored.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "trusslab/graph.hpp"

namespace trusslab {

class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LabeledGraph {
  Graph graph;
  std::vector<bool> spurious;  // indexed by edge id
};

/// Throws EdgeListError on a malformed line.
LabeledGraph read_edge_list(std::istream& in);

/// Throws std::runtime_error if the file cannot be opened.
LabeledGraph read_edge_list_file(const std::string& path);

/// Writes edges in id order, so reading the output back preserves edge ids.
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<bool>& spurious = {});

}  // namespace trusslab
