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

#include <numeric>

#include "icsmine/error.hpp"

namespace icsmine {

using u128 = unsigned __int128;

Ratio::Ratio(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den == 0) {
        throw Error("ratio with zero denominator");
    }
}

Ratio Ratio::parse_decimal(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty number");
    }
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    bool seen_dot = false;
    bool seen_digit = false;
    for (char c : text) {
        if (c == '.') {
            if (seen_dot) {
                throw ParseError("malformed number '" + std::string(text) + "'");
            }
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9') {
            throw ParseError("malformed number '" + std::string(text) + "'");
        }
        seen_digit = true;
        u128 next = u128(num) * 10 + std::uint64_t(c - '0');
        if (next > u128(UINT64_MAX)) {
            throw ParseError("number out of range '" + std::string(text) + "'");
        }
        num = std::uint64_t(next);
        if (seen_dot) {
            u128 d = u128(den) * 10;
            if (d > u128(UINT64_MAX)) {
                throw ParseError("number out of range '" + std::string(text) + "'");
            }
            den = std::uint64_t(d);
        }
    }
    if (!seen_digit) {
        throw ParseError("malformed number '" + std::string(text) + "'");
    }
    return Ratio(num, den);
}

Ratio Ratio::reduced() const {
    std::uint64_t g = std::gcd(num_, den_);
    if (g == 0) {
        return Ratio(0, 1);
    }
    return Ratio(num_ / g, den_ / g);
}

double Ratio::to_double() const {
    return double(num_) / double(den_);
}

std::string Ratio::str() const {
    Ratio r = reduced();
    if (r.den_ == 1) {
        return std::to_string(r.num_);
    }
    return std::to_string(r.num_) + "/" + std::to_string(r.den_);
}

std::string Ratio::decimal_str() const {
    Ratio r = reduced();
    if (r.den_ == 1) {
        return std::to_string(r.num_);
    }
    // 10^k representable iff den_ = 2^a * 5^b after reduction.
    std::uint64_t rest = r.den_;
    unsigned twos = 0;
    unsigned fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) {
        return str();
    }
    const unsigned k = twos > fives ? twos : fives;
    u128 scaled = r.num_;
    u128 pow10 = 1;
    for (unsigned i = 0; i < k - twos; ++i) scaled *= 2;
    for (unsigned i = 0; i < k - fives; ++i) scaled *= 5;
    for (unsigned i = 0; i < k; ++i) pow10 *= 10;
    if (scaled > u128(UINT64_MAX)) {
        return str();
    }
    const std::uint64_t whole = std::uint64_t(scaled / pow10);
    std::uint64_t frac = std::uint64_t(scaled % pow10);
    std::string digits(k, '0');
    for (unsigned i = 0; i < k; ++i) {
        digits[k - 1 - i] = char('0' + frac % 10);
        frac /= 10;
    }
    return std::to_string(whole) + "." + digits;
}

bool operator==(const Ratio& a, const Ratio& b) {
    return u128(a.num_) * b.den_ == u128(b.num_) * a.den_;
}

bool operator<(const Ratio& a, const Ratio& b) {
    return u128(a.num_) * b.den_ < u128(b.num_) * a.den_;
}

std::uint64_t ceil_mul(const Ratio& r, std::uint64_t n) {
    u128 p = u128(r.num()) * n;
    return std::uint64_t((p + r.den() - 1) / r.den());
}

}  // namespace icsmine
