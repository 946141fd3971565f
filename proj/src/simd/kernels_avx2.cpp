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

// Compiled with -mavx2 -mfma -ffp-contract=off. Nothing here may run before
// the dispatcher has confirmed CPU support.

#include "hyperlap/simd/kernels.hpp"

#if defined(HYPERLAP_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

namespace hyperlap::simd {
namespace {

double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void reflect_rows_avx2(double* r0, double* r1, double* r2, std::size_t n, double q, double r,
                       double x, double y, double z) {
    const __m256d vq = _mm256_set1_pd(q);
    const __m256d vx = _mm256_set1_pd(x);
    const __m256d vy = _mm256_set1_pd(y);
    std::size_t j = 0;
    if (r2 != nullptr) {
        const __m256d vr = _mm256_set1_pd(r);
        const __m256d vz = _mm256_set1_pd(z);
        for (; j + 4 <= n; j += 4) {
            __m256d a0 = _mm256_loadu_pd(r0 + j);
            __m256d a1 = _mm256_loadu_pd(r1 + j);
            __m256d a2 = _mm256_loadu_pd(r2 + j);
            const __m256d p = _mm256_fmadd_pd(vr, a2, _mm256_fmadd_pd(vq, a1, a0));
            _mm256_storeu_pd(r2 + j, _mm256_fnmadd_pd(p, vz, a2));
            _mm256_storeu_pd(r1 + j, _mm256_fnmadd_pd(p, vy, a1));
            _mm256_storeu_pd(r0 + j, _mm256_fnmadd_pd(p, vx, a0));
        }
        for (; j < n; ++j) {
            const double p = r0[j] + q * r1[j] + r * r2[j];
            r2[j] -= p * z;
            r1[j] -= p * y;
            r0[j] -= p * x;
        }
    } else {
        for (; j + 4 <= n; j += 4) {
            __m256d a0 = _mm256_loadu_pd(r0 + j);
            __m256d a1 = _mm256_loadu_pd(r1 + j);
            const __m256d p = _mm256_fmadd_pd(vq, a1, a0);
            _mm256_storeu_pd(r1 + j, _mm256_fnmadd_pd(p, vy, a1));
            _mm256_storeu_pd(r0 + j, _mm256_fnmadd_pd(p, vx, a0));
        }
        for (; j < n; ++j) {
            const double p = r0[j] + q * r1[j];
            r1[j] -= p * y;
            r0[j] -= p * x;
        }
    }
}

// Lanes are independent shifts; the per-lane arithmetic is the same
// sub/div/sub sequence as the scalar kernel, so counts agree exactly.
void sturm_counts_avx2(const double* diag, const double* offdiag_sq, std::size_t m,
                       const double* shifts, double pivmin, std::int64_t* counts) {
    const __m256d lam = _mm256_loadu_pd(shifts);
    const __m256d vpiv = _mm256_set1_pd(pivmin);
    const __m256d neg_piv = _mm256_set1_pd(-pivmin);
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    const __m256d zero = _mm256_setzero_pd();
    __m256i cnt = _mm256_setzero_si256();
    __m256d q = zero;
    for (std::size_t i = 0; i < m; ++i) {
        const __m256d shifted = _mm256_sub_pd(_mm256_set1_pd(diag[i]), lam);
        q = (i == 0) ? shifted
                     : _mm256_sub_pd(shifted, _mm256_div_pd(_mm256_set1_pd(offdiag_sq[i - 1]), q));
        const __m256d tiny = _mm256_cmp_pd(_mm256_and_pd(q, abs_mask), vpiv, _CMP_LT_OQ);
        q = _mm256_blendv_pd(q, neg_piv, tiny);
        const __m256d neg = _mm256_cmp_pd(q, zero, _CMP_LT_OQ);
        cnt = _mm256_sub_epi64(cnt, _mm256_castpd_si256(neg));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(counts), cnt);
}

constexpr KernelTable kAvx2{
    Isa::avx2, dot_avx2, axpy_avx2, reflect_rows_avx2, sturm_counts_avx2,
};

}  // namespace

namespace detail {
const KernelTable* avx2_table() noexcept { return &kAvx2; }
}  // namespace detail

}  // namespace hyperlap::simd

#else

namespace hyperlap::simd::detail {
const KernelTable* avx2_table() noexcept { return nullptr; }
}  // namespace hyperlap::simd::detail

#endif
