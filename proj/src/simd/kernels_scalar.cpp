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

// Reference kernels. Plain loops, one element at a time. The vector
// backends are tested against these bit for bit.

#include <bit>
#include <cstddef>
#include <cstdint>

#include "icsmine/simd/kernels.hpp"

namespace icsmine::simd::detail {

namespace {

std::uint64_t popcount_scalar(const std::uint64_t* words, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        total += std::uint64_t(std::popcount(words[i]));
    }
    return total;
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        total += std::uint64_t(std::popcount(a[i] & b[i]));
    }
    return total;
}

std::uint64_t and_into_popcount_scalar(std::uint64_t* dst, const std::uint64_t* src,
                                       std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] &= src[i];
        total += std::uint64_t(std::popcount(dst[i]));
    }
    return total;
}

void threshold_ge_scalar(const double* values, std::size_t n, double threshold,
                         std::uint64_t* out) {
    std::size_t words = (n + 63) / 64;
    for (std::size_t w = 0; w < words; ++w) {
        out[w] = 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] >= threshold) {
            out[i / 64] |= std::uint64_t(1) << (i % 64);
        }
    }
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{popcount_scalar, and_popcount_scalar,
                           and_into_popcount_scalar, threshold_ge_scalar};
    return k;
}

}  // namespace icsmine::simd::detail
