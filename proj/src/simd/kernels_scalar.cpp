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

#include <cmath>

#include "hyperlap/simd/kernels.hpp"

namespace hyperlap::simd {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void reflect_rows_scalar(double* r0, double* r1, double* r2, std::size_t n, double q, double r,
                         double x, double y, double z) {
    if (r2 != nullptr) {
        for (std::size_t j = 0; j < n; ++j) {
            const double p = r0[j] + q * r1[j] + r * r2[j];
            r2[j] -= p * z;
            r1[j] -= p * y;
            r0[j] -= p * x;
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            const double p = r0[j] + q * r1[j];
            r1[j] -= p * y;
            r0[j] -= p * x;
        }
    }
}

void sturm_counts_scalar(const double* diag, const double* offdiag_sq, std::size_t m,
                         const double* shifts, double pivmin, std::int64_t* counts) {
    for (std::size_t s = 0; s < kSturmLanes; ++s) {
        const double lam = shifts[s];
        std::int64_t c = 0;
        double q = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            q = (i == 0) ? diag[0] - lam : (diag[i] - lam) - offdiag_sq[i - 1] / q;
            if (std::fabs(q) < pivmin) q = -pivmin;
            if (q < 0.0) ++c;
        }
        counts[s] = c;
    }
}

constexpr KernelTable kScalar{
    Isa::scalar, dot_scalar, axpy_scalar, reflect_rows_scalar, sturm_counts_scalar,
};

}  // namespace

namespace detail {
const KernelTable& scalar_table() noexcept { return kScalar; }
}  // namespace detail

}  // namespace hyperlap::simd
