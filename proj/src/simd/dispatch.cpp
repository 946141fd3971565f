// Copyright 2026 the hyperlap authors
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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hyperlap/simd/kernels.hpp"

namespace hyperlap::simd {

bool available(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
            if (detail::avx2_table() == nullptr) return false;
            __builtin_cpu_init();
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& kernels(Isa isa) {
    if (!available(isa)) {
        throw std::runtime_error("SIMD kernels not available on this CPU: " + std::string(name(isa)));
    }
    return isa == Isa::avx2 ? *detail::avx2_table() : detail::scalar_table();
}

Isa detect() {
    const char* env = std::getenv("HYPERLAP_SIMD");
    const std::string choice = env ? env : "auto";
    if (choice == "scalar") return Isa::scalar;
    if (choice == "avx2") {
        if (!available(Isa::avx2)) throw std::runtime_error("HYPERLAP_SIMD=avx2 but the CPU lacks AVX2/FMA");
        return Isa::avx2;
    }
    if (choice != "auto" && !choice.empty()) {
        throw std::runtime_error("HYPERLAP_SIMD must be scalar, avx2 or auto, got '" + choice + "'");
    }
    return available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

const KernelTable& active() {
    static const KernelTable& table = kernels(detect());
    return table;
}

std::string_view name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
    }
    return "unknown";
}

}  // namespace hyperlap::simd
