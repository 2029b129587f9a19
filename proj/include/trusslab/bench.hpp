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

// Benchmark harness: runs estimators over a corpus of small graphs whose
// exact trussness is known and reports accuracy and runtime as CSV.
//
// Corpus lines (blank lines and '#' comments skipped):
//   random N P SEED [xQ]
//   clique K [xQ]
//   bipartite-apex S [xQ]
//   ladder X [xQ]
//   file PATH [xQ]
// A trailing xQ replaces the graph by its Q-fold blow-up.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trusslab/graph.hpp"

namespace trusslab {

struct CorpusEntry {
  std::string name;
  Graph graph;
};

/// Throws EdgeListError (with line number) on a malformed corpus line and
/// std::runtime_error if a referenced file cannot be read.
std::vector<CorpusEntry> read_corpus(std::istream& in);
std::vector<CorpusEntry> read_corpus_file(const std::string& path);

enum class Estimator { kExact, kThreshold, kApprox };

/// Accepts "exact", "threshold", "approx"; throws std::invalid_argument otherwise.
Estimator parse_estimator(const std::string& name);
const char* estimator_name(Estimator e);

struct BenchConfig {
  std::vector<Estimator> estimators{Estimator::kExact};
  std::vector<double> epsilons{0.5};
  std::vector<double> zetas{110.0};
  std::vector<std::uint64_t> seeds{0};
  bool pseudocode_growth = false;
  bool timing = true;
  std::size_t threads = 1;
};

struct BenchRow {
  std::string graph;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::uint64_t triangles = 0;
  std::uint32_t exact = 0;
  Estimator estimator = Estimator::kExact;
  double epsilon = 0.0;  // unused by exact
  double zeta = 0.0;     // approx only
  std::uint64_t seed = 0;
  std::string estimate;  // rational, "a/b" or integer
  double ratio = 1.0;    // estimate / exact, 1 when both are zero
  bool within = false;   // meets the estimator's guarantee
  bool exact_flag = false;
  bool fell_back = false;
  double runtime_ms = 0.0;
};

/// One row per (graph, estimator, epsilon, zeta, seed) cell; exact ignores the
/// grids and threshold ignores zeta and seed. Rows come back in corpus order
/// regardless of thread count. Threads are capped by cfg.threads.
std::vector<BenchRow> run_bench(const std::vector<CorpusEntry>& corpus, const BenchConfig& cfg);

/// CSV with a header, then '#' comment lines with per-configuration
/// aggregates. Runtime is printed only when cfg.timing is set.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, const BenchConfig& cfg);

}  // namespace trusslab
