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

#include "trusslab/sampler.hpp"

#include <cmath>
#include <limits>

namespace trusslab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

Rng make_rng(std::uint64_t seed) {
  const std::uint64_t a = splitmix64(seed);
  const std::uint64_t b = splitmix64(a);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return Rng(seq);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ull + 1));
}

std::uint64_t geometric_skip(double p, Rng& rng) {
  if (p >= 1.0) return 1;
  // 1 - U with U ~ [0, 1) gives (0, 1].
  const double u = 1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  const double k = std::ceil(std::log(u) / std::log1p(-p));
  if (!(k < 1.8e19)) return std::numeric_limits<std::uint64_t>::max();
  return k < 1.0 ? 1 : static_cast<std::uint64_t>(k);
}

}  // namespace trusslab
