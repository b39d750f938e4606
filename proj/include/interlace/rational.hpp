// Copyright 2026 The Interlace Authors.
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
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace interlace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-3/4", "0.125" or "1e-2" into an exact rational. Decimal
/// notation is converted digit by digit, never through a double.
/// Throws ArgumentError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& r);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

/// Converts a small nonnegative integer-valued BigInt, throwing
/// ArgumentError when it does not fit.
std::uint64_t to_u64(const BigInt& v);

double to_double(const Rational& r);

}  // namespace interlace
