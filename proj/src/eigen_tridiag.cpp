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

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <limits>

#include "hyperlap/eigen.hpp"
#include "hyperlap/errors.hpp"
#include "hyperlap/simd/kernels.hpp"

namespace hyperlap {
namespace {

struct SturmData {
    std::vector<double> offdiag_sq;
    double pivmin = 0.0;
    double lower = 0.0;  // Gershgorin enclosure
    double upper = 0.0;
};

SturmData prepare(const TridiagOperator& op) {
    const std::size_t m = op.size();
    if (m == 0) throw DomainError("empty tridiagonal operator");
    if (op.offdiag.size() + 1 != m) throw DomainError("tridiagonal off-diagonal has the wrong length");
    SturmData s;
    s.offdiag_sq.resize(op.offdiag.size());
    double max_sq = 1.0;
    for (std::size_t i = 0; i < op.offdiag.size(); ++i) {
        s.offdiag_sq[i] = op.offdiag[i] * op.offdiag[i];
        max_sq = std::max(max_sq, s.offdiag_sq[i]);
    }
    s.pivmin = DBL_MIN * max_sq;
    s.lower = std::numeric_limits<double>::infinity();
    s.upper = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::fabs(op.offdiag[i - 1]);
        if (i + 1 < m) radius += std::fabs(op.offdiag[i]);
        s.lower = std::min(s.lower, op.diag[i] - radius);
        s.upper = std::max(s.upper, op.diag[i] + radius);
    }
    const double pad = 4.0 * DBL_EPSILON * std::max(std::fabs(s.lower), std::fabs(s.upper)) + s.pivmin;
    s.lower -= pad;
    s.upper += pad;
    return s;
}

std::size_t count_below(const TridiagOperator& op, const SturmData& s, double lam) {
    std::array<double, simd::kSturmLanes> shifts;
    shifts.fill(lam);
    std::array<std::int64_t, simd::kSturmLanes> counts{};
    simd::active().sturm_counts(op.diag.data(), s.offdiag_sq.data(), op.size(), shifts.data(), s.pivmin,
                                counts.data());
    return static_cast<std::size_t>(counts[0]);
}

// Number of eigenvalues <= x.
std::size_t count_at_most(const TridiagOperator& op, const SturmData& s, double x) {
    if (x == -std::numeric_limits<double>::infinity() || x < s.lower) return 0;
    if (x >= s.upper) return op.size();
    return count_below(op, s, std::nextafter(x, std::numeric_limits<double>::infinity()));
}

bool narrow_enough(double a, double b) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) return true;
    return (b - a) <= 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace

std::size_t sturm_count(const TridiagOperator& op, double lam) {
    if (!std::isfinite(lam)) throw DomainError("sturm_count needs a finite shift");
    const SturmData s = prepare(op);
    return count_below(op, s, lam);
}

Spectrum tridiag_eigenvalues(const TridiagOperator& op, double lo, double hi) {
    if (!(lo < hi)) throw DomainError("tridiag_eigenvalues needs lo < hi");
    const SturmData s = prepare(op);
    const std::size_t first = count_at_most(op, s, lo);
    const std::size_t last = count_at_most(op, s, hi);

    Spectrum out;
    if (first >= last) return out;
    out.values.resize(last - first);

    const double start_lo = std::max(lo, s.lower);
    const double start_hi = std::min(hi, s.upper);
    const auto& kern = simd::active();
    constexpr std::size_t lanes = simd::kSturmLanes;

    // Lane l brackets eigenvalue number idx[l]: count(a) <= idx < count(b).
    for (std::size_t base = first; base < last; base += lanes) {
        std::array<std::size_t, lanes> idx{};
        std::array<double, lanes> a{};
        std::array<double, lanes> b{};
        std::array<bool, lanes> live{};
        for (std::size_t l = 0; l < lanes; ++l) {
            idx[l] = std::min(base + l, last - 1);
            a[l] = start_lo;
            b[l] = start_hi;
            live[l] = base + l < last;
        }
        std::array<double, lanes> mid{};
        std::array<std::int64_t, lanes> counts{};
        for (;;) {
            bool any = false;
            for (std::size_t l = 0; l < lanes; ++l) {
                if (live[l] && narrow_enough(a[l], b[l])) live[l] = false;
                any = any || live[l];
                mid[l] = 0.5 * (a[l] + b[l]);
            }
            if (!any) break;
            kern.sturm_counts(op.diag.data(), s.offdiag_sq.data(), op.size(), mid.data(), s.pivmin, counts.data());
            ++out.iterations;
            for (std::size_t l = 0; l < lanes; ++l) {
                if (!live[l]) continue;
                if (static_cast<std::size_t>(counts[l]) > idx[l]) {
                    b[l] = mid[l];
                } else {
                    a[l] = mid[l];
                }
            }
        }
        for (std::size_t l = 0; l < lanes && base + l < last; ++l) {
            out.values[base + l - first] = 0.5 * (a[l] + b[l]);
        }
    }
    return out;
}

}  // namespace hyperlap
