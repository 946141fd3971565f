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
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include "hyperlap/eigen.hpp"
#include "hyperlap/errors.hpp"
#include "hyperlap/simd/kernels.hpp"

namespace hyperlap {
namespace detail {

void balance(Matrix& a) {
    constexpr double radix = 2.0;
    constexpr double radix_sq = radix * radix;
    const std::size_t n = a.rows();
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t i = 0; i < n; ++i) {
            double r = 0.0;
            double c = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::fabs(a(j, i));
                r += std::fabs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= radix_sq;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix_sq;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                const double inv = 1.0 / f;
                for (std::size_t j = 0; j < n; ++j) a(i, j) *= inv;
                for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
            }
        }
    }
}

void reduce_to_hessenberg(Matrix& a) {
    const std::size_t n = a.rows();
    if (n < 3) return;
    const auto& kern = simd::active();
    std::vector<double> v(n);
    std::vector<double> w(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t len = n - k - 1;
        double scale = 0.0;
        for (std::size_t i = 0; i < len; ++i) scale = std::max(scale, std::fabs(a(k + 1 + i, k)));
        if (scale == 0.0) continue;
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
            v[i] = a(k + 1 + i, k) / scale;
            norm_sq += v[i] * v[i];
        }
        if (norm_sq == v[0] * v[0]) continue;  // already reduced
        const double alpha = -std::copysign(std::sqrt(norm_sq), v[0]);
        v[0] -= alpha;
        const double beta = 1.0 / (-alpha * v[0]);  // 2 / (v^T v)

        // Left: rows k+1.., columns k..
        const std::size_t width = n - k;
        std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(width), 0.0);
        for (std::size_t i = 0; i < len; ++i) kern.axpy(v[i], &a(k + 1 + i, k), w.data(), width);
        for (std::size_t i = 0; i < len; ++i) kern.axpy(-beta * v[i], w.data(), &a(k + 1 + i, k), width);

        // Right: all rows, columns k+1..
        for (std::size_t i = 0; i < n; ++i) {
            double* row = &a(i, k + 1);
            const double s = kern.dot(row, v.data(), len);
            kern.axpy(-beta * s, v.data(), row, len);
        }
        a(k + 1, k) = alpha * scale;
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
    }
}

}  // namespace detail

namespace {

// Francis double-shift QR on an upper Hessenberg matrix, eigenvalues only.
// Updates are confined to the active window [low, high].
std::vector<std::complex<double>> hessenberg_qr(Matrix& a, long max_sweeps, long& sweeps) {
    const auto& kern = simd::active();
    const int n = static_cast<int>(a.rows());
    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::vector<std::complex<double>> eig(static_cast<std::size_t>(n));

    double anorm = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::fabs(a(i, j));
    }

    int high = n - 1;
    double shift_acc = 0.0;
    int its = 0;
    sweeps = 0;
    while (high >= 0) {
        int low = high;
        for (; low >= 1; --low) {
            double s = std::fabs(a(low - 1, low - 1)) + std::fabs(a(low, low));
            if (s == 0.0) s = anorm;
            if (std::fabs(a(low, low - 1)) <= eps * s) {
                a(low, low - 1) = 0.0;
                break;
            }
        }
        double x = a(high, high);
        if (low == high) {
            eig[high] = {x + shift_acc, 0.0};
            --high;
            its = 0;
            continue;
        }
        double y = a(high - 1, high - 1);
        double w = a(high, high - 1) * a(high - 1, high);
        if (low == high - 1) {
            const double p = 0.5 * (y - x);
            const double q = p * p + w;
            double z = std::sqrt(std::fabs(q));
            x += shift_acc;
            if (q >= 0.0) {
                z = p + std::copysign(z, p);
                eig[high - 1] = {x + z, 0.0};
                eig[high] = {z != 0.0 ? x - w / z : x + z, 0.0};
            } else {
                eig[high - 1] = {x + p, z};
                eig[high] = {x + p, -z};
            }
            high -= 2;
            its = 0;
            continue;
        }
        if (sweeps >= max_sweeps) {
            throw ConvergenceError("QR iteration did not converge", static_cast<std::size_t>(high - low + 1));
        }
        if (its == 10 || its == 20) {
            // exceptional shift
            shift_acc += x;
            for (int i = 0; i <= high; ++i) a(i, i) -= x;
            const double s = std::fabs(a(high, high - 1)) + std::fabs(a(high - 1, high - 2));
            x = y = 0.75 * s;
            w = -0.4375 * s * s;
        }
        ++its;
        ++sweeps;

        int m = high - 2;
        double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
        for (; m >= low; --m) {
            z = a(m, m);
            r = x - z;
            const double s0 = y - z;
            p = (r * s0 - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s0;
            r = a(m + 2, m + 1);
            const double s = std::fabs(p) + std::fabs(q) + std::fabs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == low) break;
            const double u = std::fabs(a(m, m - 1)) * (std::fabs(q) + std::fabs(r));
            const double v = std::fabs(p) * (std::fabs(a(m - 1, m - 1)) + std::fabs(z) + std::fabs(a(m + 1, m + 1)));
            if (u <= eps * v) break;
        }
        for (int i = m + 2; i <= high; ++i) {
            a(i, i - 2) = 0.0;
            if (i != m + 2) a(i, i - 3) = 0.0;
        }
        for (int k = m; k <= high - 1; ++k) {
            if (k != m) {
                p = a(k, k - 1);
                q = a(k + 1, k - 1);
                r = (k != high - 1) ? a(k + 2, k - 1) : 0.0;
                x = std::fabs(p) + std::fabs(q) + std::fabs(r);
                if (x != 0.0) {
                    p /= x;
                    q /= x;
                    r /= x;
                }
            }
            const double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
                if (low != m) a(k, k - 1) = -a(k, k - 1);
            } else {
                a(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            const bool three = (k != high - 1);
            kern.reflect_rows(&a(k, k), &a(k + 1, k), three ? &a(k + 2, k) : nullptr,
                              static_cast<std::size_t>(high - k + 1), q, r, x, y, z);
            const int row_end = std::min(high, k + 3);
            for (int i = low; i <= row_end; ++i) {
                double pp = x * a(i, k) + y * a(i, k + 1);
                if (three) {
                    pp += z * a(i, k + 2);
                    a(i, k + 2) -= pp * r;
                }
                a(i, k + 1) -= pp * q;
                a(i, k) -= pp;
            }
        }
    }
    return eig;
}

}  // namespace

Spectrum dense_eigenvalues(Matrix a, const DenseEigenOptions& options) {
    if (!a.square() || a.rows() == 0) throw DomainError("dense_eigenvalues needs a non-empty square matrix");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (double v : a.row(i)) {
            if (!std::isfinite(v)) throw DomainError("dense_eigenvalues: matrix has non-finite entries");
        }
    }
    if (options.balance) detail::balance(a);
    detail::reduce_to_hessenberg(a);

    Spectrum out;
    const auto eig = hessenberg_qr(a, options.sweeps_per_order * static_cast<long>(a.rows()), out.iterations);
    out.values.reserve(eig.size());
    for (const auto& e : eig) {
        const double im = std::fabs(e.imag());
        out.max_imag = std::max(out.max_imag, im);
        if (im > options.reality_tol * (1.0 + std::fabs(e.real()))) {
            throw RealityError("complex eigenvalue " + std::to_string(e.real()) + " +/- " +
                               std::to_string(im) + "i in a problem expected to be real");
        }
        out.values.push_back(e.real());
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

}  // namespace hyperlap
