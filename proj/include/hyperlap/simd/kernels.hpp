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

#pragma once

// Inner-loop kernels with a portable scalar reference and an AVX2/FMA variant.
// The variant is chosen once at runtime from CPU features; HYPERLAP_SIMD
// (scalar | avx2 | auto) overrides the choice.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace hyperlap::simd {

enum class Isa { scalar, avx2 };

inline constexpr std::size_t kSturmLanes = 4;

struct KernelTable {
    Isa isa;

    /// sum x[i] * y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);

    /// y += a * x
    void (*axpy)(double a, const double* x, double* y, std::size_t n);

    /// Householder reflector on three rows, columnwise:
    ///   p = r0 + q r1 + r r2;  r0 -= p x;  r1 -= p y;  r2 -= p z.
    /// r2 may be null, in which case the third row is dropped.
    void (*reflect_rows)(double* r0, double* r1, double* r2, std::size_t n, double q, double r,
                         double x, double y, double z);

    /// Sturm sign counts of the symmetric tridiagonal (diag, offdiag^2) at
    /// kSturmLanes shifts at once. counts[s] = #{negative pivots of T - shifts[s]}.
    /// Pivots smaller than pivmin in magnitude are replaced by -pivmin.
    void (*sturm_counts)(const double* diag, const double* offdiag_sq, std::size_t m,
                         const double* shifts, double pivmin, std::int64_t* counts);
};

bool available(Isa isa) noexcept;

/// Kernel table for a specific ISA. Requesting an unavailable ISA throws.
const KernelTable& kernels(Isa isa);

/// Best available ISA, honouring HYPERLAP_SIMD.
Isa detect();

/// Kernel table for detect(), resolved once.
const KernelTable& active();

std::string_view name(Isa isa) noexcept;

namespace detail {
const KernelTable& scalar_table() noexcept;
const KernelTable* avx2_table() noexcept;  // null when not compiled in
}  // namespace detail

}  // namespace hyperlap::simd
