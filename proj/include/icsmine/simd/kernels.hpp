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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace icsmine::simd {

// Bitmap and thresholding kernels behind runtime dispatch. Support counting
// over vertical transaction bitmaps (AND + popcount) and columnar sensor
// thresholding are the arithmetic inner loops of the pipeline; everything
// else is tree and set work and stays scalar.
//
// The scalar implementations are the reference semantics. Vector variants
// must be bit-for-bit equivalent and are selected once at startup based on
// CPU features. ICSMINE_SIMD=scalar|avx2 in the environment overrides the
// choice; force_backend() does the same from code (tests use it).

enum class Backend { scalar, avx2 };

Backend active_backend();
bool backend_available(Backend backend);

/// Throws icsmine::Error if the backend is not available on this CPU/build.
void force_backend(Backend backend);

const char* backend_name(Backend backend);

/// Total set bits.
std::uint64_t popcount(std::span<const std::uint64_t> words);

/// Set bits in a AND b, without materializing the intersection.
/// a and b must have equal length.
std::uint64_t and_popcount(std::span<const std::uint64_t> a,
                           std::span<const std::uint64_t> b);

/// dst &= src; returns the resulting popcount. Equal lengths required.
std::uint64_t and_into_popcount(std::span<std::uint64_t> dst,
                                std::span<const std::uint64_t> src);

/// Packs (values[i] >= threshold) into bits, little-endian within each
/// 64-bit word: bit i of out[w] corresponds to values[64*w + i]. Trailing
/// bits of the last word are zero. NaN compares false on every backend.
/// out must hold (values.size() + 63) / 64 words.
void threshold_ge(std::span<const double> values, double threshold,
                  std::span<std::uint64_t> out);

namespace detail {

using popcount_fn = std::uint64_t (*)(const std::uint64_t*, std::size_t);
using and_popcount_fn = std::uint64_t (*)(const std::uint64_t*, const std::uint64_t*,
                                          std::size_t);
using and_into_popcount_fn = std::uint64_t (*)(std::uint64_t*, const std::uint64_t*,
                                               std::size_t);
using threshold_ge_fn = void (*)(const double*, std::size_t, double, std::uint64_t*);

struct Kernels {
    popcount_fn popcount;
    and_popcount_fn and_popcount;
    and_into_popcount_fn and_into_popcount;
    threshold_ge_fn threshold_ge;
};

const Kernels& scalar_kernels();

#if defined(__x86_64__)
const Kernels& avx2_kernels();
#endif

}  // namespace detail

}  // namespace icsmine::simd
