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

#pragma once

#include <cstdint>

#include "trusslab/graph.hpp"

namespace trusslab {

/// Erdos-Renyi G(n, p) on nodes 0..n-1. Pairs are scanned in lexicographic
/// order and kept by geometric skipping; deterministic per seed. Throws
/// std::invalid_argument unless 0 <= p <= 1.
Graph gen_random(std::size_t n, double p, std::uint64_t seed);

}  // namespace trusslab
