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

#include "icsmine/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "icsmine/error.hpp"

namespace icsmine::simd {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

struct Active {
    const detail::Kernels* kernels;
    Backend backend;
};

Active pick_default() {
    const char* env = std::getenv("ICSMINE_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) {
        return {&detail::scalar_kernels(), Backend::scalar};
    }
#if defined(__x86_64__)
    bool want_avx2 = env == nullptr || std::strcmp(env, "avx2") == 0;
    if (want_avx2 && cpu_has_avx2()) {
        return {&detail::avx2_kernels(), Backend::avx2};
    }
#endif
    return {&detail::scalar_kernels(), Backend::scalar};
}

std::atomic<const detail::Kernels*>& active_kernels() {
    static std::atomic<const detail::Kernels*> active{pick_default().kernels};
    return active;
}

std::atomic<Backend>& active_backend_id() {
    static std::atomic<Backend> active{pick_default().backend};
    return active;
}

}  // namespace

Backend active_backend() {
    return active_backend_id().load(std::memory_order_relaxed);
}

bool backend_available(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
            return cpu_has_avx2();
    }
    return false;
}

void force_backend(Backend backend) {
    if (!backend_available(backend)) {
        throw Error(std::string("simd backend '") + backend_name(backend) +
                    "' is not available on this CPU");
    }
    switch (backend) {
        case Backend::scalar:
            active_kernels().store(&detail::scalar_kernels());
            break;
        case Backend::avx2:
#if defined(__x86_64__)
            active_kernels().store(&detail::avx2_kernels());
#endif
            break;
    }
    active_backend_id().store(backend);
}

const char* backend_name(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
    }
    return "unknown";
}

std::uint64_t popcount(std::span<const std::uint64_t> words) {
    return active_kernels().load(std::memory_order_relaxed)
        ->popcount(words.data(), words.size());
}

std::uint64_t and_popcount(std::span<const std::uint64_t> a,
                           std::span<const std::uint64_t> b) {
    return active_kernels().load(std::memory_order_relaxed)
        ->and_popcount(a.data(), b.data(), a.size());
}

std::uint64_t and_into_popcount(std::span<std::uint64_t> dst,
                                std::span<const std::uint64_t> src) {
    return active_kernels().load(std::memory_order_relaxed)
        ->and_into_popcount(dst.data(), src.data(), dst.size());
}

void threshold_ge(std::span<const double> values, double threshold,
                  std::span<std::uint64_t> out) {
    active_kernels().load(std::memory_order_relaxed)
        ->threshold_ge(values.data(), values.size(), threshold, out.data());
}

}  // namespace icsmine::simd
