// Copyright 2026-present the icsmine project
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

namespace icsmine {

/// Exact nonnegative rational on 64-bit counts. Support and confidence are
/// always compared through this type; doubles exist for display only.
class Ratio {
public:
    constexpr Ratio() = default;
    Ratio(std::uint64_t num, std::uint64_t den);

    /// Parses a plain decimal such as "0.007", "1", or "0.77" into an exact
    /// rational (7/1000, 1/1, 77/100). Rejects exponents, signs, and empty
    /// or malformed text with ParseError.
    static Ratio parse_decimal(std::string_view text);

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }

    Ratio reduced() const;
    double to_double() const;

    /// "p/q" after reduction; integers render without the denominator.
    std::string str() const;

    /// Exact decimal form ("0.007") when the reduced denominator divides a
    /// power of ten and the scaling fits in 64 bits; otherwise str().
    std::string decimal_str() const;

    // Value comparisons via 128-bit cross multiplication.
    friend bool operator==(const Ratio& a, const Ratio& b);
    friend bool operator<(const Ratio& a, const Ratio& b);
    friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
    friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

/// ceil(r * n) on integers. Used to resolve fractional support thresholds
/// to absolute transaction counts.
std::uint64_t ceil_mul(const Ratio& r, std::uint64_t n);

}  // namespace icsmine
