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

#include "icsmine/ratio.hpp"

#include "doctest.h"
#include "icsmine/error.hpp"

using icsmine::Ratio;
using icsmine::ceil_mul;

TEST_CASE("ratio equality ignores representation") {
    CHECK(Ratio(1, 2) == Ratio(2, 4));
    CHECK(Ratio(3164, 410400) == Ratio(791, 102600));
    CHECK(Ratio(0, 5) == Ratio(0, 9));
    CHECK(Ratio(7, 7) == Ratio(1, 1));
    CHECK(Ratio(1, 3) != Ratio(1, 4));
}

TEST_CASE("ratio ordering is exact even near 64-bit limits") {
    CHECK(Ratio(1, 3) < Ratio(1, 2));
    CHECK(Ratio(2, 3) > Ratio(1, 2));
    CHECK(Ratio(1, 1) <= Ratio(1, 1));
    // Cross multiplication overflows 64 bits; must still order correctly.
    const std::uint64_t big = 0xfffffffffffffffeull;
    CHECK(Ratio(big, big + 1) < Ratio(1, 1));
    CHECK(Ratio(big, big + 1) > Ratio(big - 1, big));
    CHECK(Ratio(big, big) == Ratio(1, 1));
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Ratio(1, 0), icsmine::Error);
}

TEST_CASE("decimal parsing builds exact fractions") {
    CHECK(Ratio::parse_decimal("0.007") == Ratio(7, 1000));
    CHECK(Ratio::parse_decimal("0.77") == Ratio(77, 100));
    CHECK(Ratio::parse_decimal("1") == Ratio(1, 1));
    CHECK(Ratio::parse_decimal("1.0") == Ratio(1, 1));
    CHECK(Ratio::parse_decimal("0.5") == Ratio(1, 2));
    CHECK(Ratio::parse_decimal("0.0077") == Ratio(77, 10000));
    CHECK(Ratio::parse_decimal(".5") == Ratio(1, 2));
}

TEST_CASE("decimal parsing rejects what it cannot represent exactly") {
    CHECK_THROWS_AS(Ratio::parse_decimal(""), icsmine::ParseError);
    CHECK_THROWS_AS(Ratio::parse_decimal("1e-3"), icsmine::ParseError);
    CHECK_THROWS_AS(Ratio::parse_decimal("-0.5"), icsmine::ParseError);
    CHECK_THROWS_AS(Ratio::parse_decimal("+0.5"), icsmine::ParseError);
    CHECK_THROWS_AS(Ratio::parse_decimal("0..5"), icsmine::ParseError);
    CHECK_THROWS_AS(Ratio::parse_decimal("0.5x"), icsmine::ParseError);
    CHECK_THROWS_AS(Ratio::parse_decimal("."), icsmine::ParseError);
}

TEST_CASE("str reduces and renders integers bare") {
    CHECK(Ratio(3164, 410400).str() == "791/102600");
    CHECK(Ratio(4, 2).str() == "2");
    CHECK(Ratio(1, 1).str() == "1");
    CHECK(Ratio(0, 7).str() == "0");
    CHECK(Ratio(2, 3).str() == "2/3");
}

TEST_CASE("ceiling multiplication resolves support thresholds") {
    CHECK(ceil_mul(Ratio(7, 1000), 410400) == 2873);
    CHECK(ceil_mul(Ratio(8, 1000), 410400) == 3284);
    CHECK(ceil_mul(Ratio(1, 1), 5) == 5);
    CHECK(ceil_mul(Ratio(1, 3), 9) == 3);
    CHECK(ceil_mul(Ratio(1, 3), 10) == 4);
    CHECK(ceil_mul(Ratio(1, 2), 0) == 0);
    CHECK(ceil_mul(Ratio(7, 1000), 1) == 1);
}

TEST_CASE("to_double is close for display purposes") {
    CHECK(Ratio(3164, 410400).to_double() == doctest::Approx(0.00771).epsilon(0.001));
}

TEST_CASE("decimal_str inverts parse_decimal when exact") {
    CHECK(Ratio::parse_decimal("0.007").decimal_str() == "0.007");
    CHECK(Ratio::parse_decimal("0.5").decimal_str() == "0.5");
    CHECK(Ratio::parse_decimal("1.0").decimal_str() == "1");
    CHECK(Ratio(3, 4).decimal_str() == "0.75");
    CHECK(Ratio(10, 100).decimal_str() == "0.1");
    CHECK(Ratio(3164, 410400).decimal_str() == "791/102600");  // 102600 has factor 3^3*19
    CHECK(Ratio(1, 3).decimal_str() == "1/3");
    CHECK(Ratio(0, 9).decimal_str() == "0");
    CHECK(Ratio(5, 2).decimal_str() == "2.5");
}
