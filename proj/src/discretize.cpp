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

#include "hyperlap/discretize.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "hyperlap/errors.hpp"

namespace hyperlap {
namespace {

void require_finite_potential(double q, double t) {
    if (!std::isfinite(q)) {
        throw DomainError("potential is not finite at t = " + std::to_string(t));
    }
}

}  // namespace

void Interval::validate() const {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !(alpha < beta)) {
        throw DomainError("interval needs finite alpha < beta");
    }
}

double PotentialSpec::kappa() const noexcept {
    return transverse_scale * static_cast<double>(ell) * static_cast<double>(ell);
}

double PotentialSpec::operator()(double t) const {
    double q = kappa() * std::exp(2.0 * t);
    if (extra) q += extra(t);
    return q;
}

std::vector<double> cheb_nodes(int n) {
    if (n < 2) throw DomainError("Chebyshev degree must be >= 2");
    // sin form is exactly antisymmetric and hits 0 exactly for even n.
    std::vector<double> x(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        x[j] = std::sin(std::numbers::pi * (n - 2.0 * j) / (2.0 * n));
    }
    return x;
}

Matrix cheb_diff_matrix(int n) {
    if (n < 2) throw DomainError("Chebyshev degree must be >= 2");
    const auto size = static_cast<std::size_t>(n) + 1;
    std::vector<double> c(size, 1.0);
    c.front() = 2.0;
    c.back() = 2.0;
    for (std::size_t i = 1; i < size; i += 2) c[i] = -c[i];

    Matrix d(size, size);
    const double theta = std::numbers::pi / (2.0 * n);
    for (std::size_t i = 0; i < size; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < size; ++j) {
            if (i == j) continue;
            // x_i - x_j = 2 sin((i+j) pi / 2n) sin((j-i) pi / 2n), free of cancellation
            const double ii = static_cast<double>(i);
            const double jj = static_cast<double>(j);
            const double diff = 2.0 * std::sin((ii + jj) * theta) * std::sin((jj - ii) * theta);
            d(i, j) = (c[i] / c[j]) / diff;
            row_sum += d(i, j);
        }
        d(i, i) = -row_sum;
    }
    return d;
}

std::shared_ptr<const Matrix> cheb_second_derivative_interior(int n) {
    if (n < 2) throw DomainError("Chebyshev degree must be >= 2");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const Matrix>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    const Matrix d = cheb_diff_matrix(n);
    const Matrix d2 = multiply(d, d);
    const auto m = static_cast<std::size_t>(n) - 1;
    auto interior = std::make_shared<Matrix>(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) (*interior)(i, j) = d2(i + 1, j + 1);
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(interior)).first->second;
}

ChebOperator assemble_cheb(const Interval& interval, const PotentialSpec& pot, int n) {
    interval.validate();
    if (n < 4) throw DomainError("Chebyshev resolution must be >= 4");
    const auto d2 = cheb_second_derivative_interior(n);
    const auto x = cheb_nodes(n);
    const double scale = 4.0 / (interval.length() * interval.length());

    ChebOperator op;
    op.n = n;
    const auto m = static_cast<std::size_t>(n) - 1;
    op.matrix = Matrix(m, m);
    op.nodes.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double t = interval.alpha + 0.5 * interval.length() * (x[i + 1] + 1.0);
        op.nodes[i] = t;
        for (std::size_t j = 0; j < m; ++j) op.matrix(i, j) = -scale * (*d2)(i, j);
        const double q = pot(t);
        require_finite_potential(q, t);
        op.matrix(i, i) += q;
    }
    return op;
}

TridiagOperator assemble_fd(const Interval& interval, const PotentialSpec& pot, int m) {
    interval.validate();
    if (m < 3) throw DomainError("finite-difference grid needs >= 3 interior points");
    TridiagOperator op;
    op.h = interval.length() / (m + 1.0);
    const double inv_h2 = 1.0 / (op.h * op.h);
    op.diag.resize(static_cast<std::size_t>(m));
    op.offdiag.assign(static_cast<std::size_t>(m) - 1, -inv_h2);
    for (int i = 0; i < m; ++i) {
        const double t = interval.alpha + (i + 1.0) * op.h;
        const double q = pot(t);
        require_finite_potential(q, t);
        op.diag[i] = 2.0 * inv_h2 + q;
    }
    return op;
}

Matrix to_dense(const TridiagOperator& op) {
    const std::size_t m = op.size();
    Matrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        a(i, i) = op.diag[i];
        if (i + 1 < m) {
            a(i, i + 1) = op.offdiag[i];
            a(i + 1, i) = op.offdiag[i];
        }
    }
    return a;
}

}  // namespace hyperlap
