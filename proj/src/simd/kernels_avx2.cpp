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

// AVX2 kernel variants. This translation unit is compiled with -mavx2 and
// only ever entered through the dispatch table after a CPUID check.
//
// Popcount uses the in-register nibble-lookup scheme (vpshufb + vpsadbw);
// AVX2 has no vector popcount instruction.

#if defined(__x86_64__)

#include <immintrin.h>

#include <bit>
#include <cstddef>
#include <cstdint>

#include "icsmine/simd/kernels.hpp"

namespace icsmine::simd::detail {

namespace {

inline __m256i popcount_bytes(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2,
                                            3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                            2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                     _mm256_shuffle_epi8(lookup, hi));
    // Per-8-byte sums, four 64-bit partials per vector.
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::uint64_t hsum_epi64(__m256i v) {
    __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v),
                              _mm256_extracti128_si256(v, 1));
    return std::uint64_t(_mm_cvtsi128_si64(s)) +
           std::uint64_t(_mm_extract_epi64(s, 1));
}

std::uint64_t popcount_avx2(const std::uint64_t* words, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        acc = _mm256_add_epi64(acc, popcount_bytes(v));
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; i < n; ++i) {
        total += std::uint64_t(std::popcount(words[i]));
    }
    return total;
}

std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount_bytes(_mm256_and_si256(va, vb)));
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; i < n; ++i) {
        total += std::uint64_t(std::popcount(a[i] & b[i]));
    }
    return total;
}

std::uint64_t and_into_popcount_avx2(std::uint64_t* dst, const std::uint64_t* src,
                                     std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i v = _mm256_and_si256(vd, vs);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
        acc = _mm256_add_epi64(acc, popcount_bytes(v));
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; i < n; ++i) {
        dst[i] &= src[i];
        total += std::uint64_t(std::popcount(dst[i]));
    }
    return total;
}

void threshold_ge_avx2(const double* values, std::size_t n, double threshold,
                       std::uint64_t* out) {
    const __m256d thr = _mm256_set1_pd(threshold);
    std::size_t full_words = n / 64;
    for (std::size_t w = 0; w < full_words; ++w) {
        const double* base = values + w * 64;
        std::uint64_t bits = 0;
        for (std::size_t k = 0; k < 16; ++k) {
            __m256d v = _mm256_loadu_pd(base + 4 * k);
            // GE_OQ: quiet, NaN compares false, same as the scalar >=.
            int m = _mm256_movemask_pd(_mm256_cmp_pd(v, thr, _CMP_GE_OQ));
            bits |= std::uint64_t(unsigned(m)) << (4 * k);
        }
        out[w] = bits;
    }
    std::size_t rest = n % 64;
    if (rest > 0) {
        std::uint64_t bits = 0;
        const double* base = values + full_words * 64;
        for (std::size_t i = 0; i < rest; ++i) {
            if (base[i] >= threshold) {
                bits |= std::uint64_t(1) << i;
            }
        }
        out[full_words] = bits;
    }
}

}  // namespace

const Kernels& avx2_kernels() {
    static const Kernels k{popcount_avx2, and_popcount_avx2, and_into_popcount_avx2,
                           threshold_ge_avx2};
    return k;
}

}  // namespace icsmine::simd::detail

#endif  // __x86_64__
