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

#include "trusslab/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace trusslab {

Rational rational_from_double(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  const bool negative = x < 0;
  double rest = std::fabs(x);
  // Convergents h/k of the continued fraction expansion.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(rest));
  std::int64_t k_prev = 0, k = 1;
  double frac = rest - std::floor(rest);
  while (frac > 1e-12) {
    rest = 1.0 / frac;
    const auto a = static_cast<std::int64_t>(std::floor(rest));
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > max_den) break;
    const std::int64_t h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = rest - std::floor(rest);
  }
  return Rational(negative ? -h : h, k);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace trusslab
