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

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace trusslab {

using Rational = boost::rational<std::int64_t>;

/// Closest fraction with denominator at most `max_den` (continued fractions).
/// Decimal literals such as 0.3 come back as 3/10.
Rational rational_from_double(double x, std::int64_t max_den = 1'000'000);

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

/// "7/3" style text, or the bare integer when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace trusslab
