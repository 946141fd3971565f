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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "hyperlap/discretize.hpp"
#include "hyperlap/eigen.hpp"
#include "hyperlap/errors.hpp"

using namespace hyperlap;
using hyperlap::testing::Gen;

namespace {
constexpr double kPi = std::numbers::pi;

double exact_box(int k, double length) { return std::pow(k * kPi / length, 2); }

std::vector<double> cheb_spectrum(const Interval& iv, const PotentialSpec& pot, int n) {
    return dense_eigenvalues(assemble_cheb(iv, pot, n).matrix).values;
}
}  // namespace

TEST_CASE("Chebyshev nodes") {
    const auto n2 = cheb_nodes(2);
    REQUIRE(n2.size() == 3);
    CHECK(n2[0] == 1.0);
    CHECK(n2[1] == 0.0);
    CHECK(n2[2] == -1.0);

    const auto n3 = cheb_nodes(3);
    CHECK(n3[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(n3[2] == doctest::Approx(-0.5).epsilon(1e-15));

    const auto n4 = cheb_nodes(4);
    CHECK(std::abs(n4[1] - std::sqrt(0.5)) <= 2.3e-16);
    CHECK(n4[2] == 0.0);
    CHECK(std::abs(n4[3] + std::sqrt(0.5)) <= 2.3e-16);

    for (int n : {5, 16, 101, 400}) {
        const auto x = cheb_nodes(n);
        CHECK(std::is_sorted(x.rbegin(), x.rend()));
        for (int j = 0; j <= n; ++j) CHECK(x[j] == -x[n - j]);  // exact symmetry of the sine form
    }
    CHECK_THROWS_AS(cheb_nodes(1), DomainError);
}

TEST_CASE("differentiation matrix, n = 2") {
    const Matrix d = cheb_diff_matrix(2);
    const double want[3][3] = {{1.5, -2.0, 0.5}, {0.5, 0.0, -0.5}, {-0.5, 2.0, -1.5}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::abs(d(i, j) - want[i][j]) < 1e-15);
    CHECK_THROWS_AS(cheb_diff_matrix(1), DomainError);
}

TEST_CASE("differentiation matrix is exact on constants and linears") {
    for (int n : {2, 3, 8, 33, 64, 200}) {
        const Matrix d = cheb_diff_matrix(n);
        const auto x = cheb_nodes(n);
        for (int i = 0; i <= n; ++i) {
            double row_sum = 0.0, deriv = 0.0, row_abs = 0.0;
            for (int j = 0; j <= n; ++j) {
                row_sum += d(i, j);
                row_abs += std::abs(d(i, j));
                deriv += d(i, j) * x[j];
            }
            CHECK(std::abs(row_sum) < 1e-13 * std::max(1.0, row_abs));  // summation order differs
            CHECK(std::abs(deriv - 1.0) < 1e-12 * std::max(1, n / 16));
        }
    }
}

TEST_CASE("differentiation matrix is exact on polynomials of degree n") {
    const int n = 12;
    const Matrix d = cheb_diff_matrix(n);
    const auto x = cheb_nodes(n);
    for (int i = 0; i <= n; ++i) {
        double got = 0.0;
        for (int j = 0; j <= n; ++j) got += d(i, j) * std::pow(x[j], n);
        CHECK(std::abs(got - n * std::pow(x[i], n - 1)) < 1e-11);
    }
}

TEST_CASE("interval and potential validation") {
    CHECK_THROWS_AS(assemble_cheb({1.0, 1.0}, {}, 16), DomainError);
    CHECK_THROWS_AS(assemble_cheb({1.0, -1.0}, {}, 16), DomainError);
    CHECK_THROWS_AS(assemble_cheb({-INFINITY, 1.0}, {}, 16), DomainError);
    CHECK_THROWS_AS(assemble_cheb({}, {}, 3), DomainError);
    CHECK_THROWS_AS(assemble_fd({}, {}, 2), DomainError);
    PotentialSpec bad;
    bad.extra = [](double) { return std::nan(""); };
    CHECK_THROWS_AS(assemble_cheb({}, bad, 16), DomainError);
}

TEST_CASE("collocation operator layout") {
    PotentialSpec pot;
    pot.ell = 3;
    const ChebOperator op = assemble_cheb({-1.0, 1.0}, pot, 20);
    CHECK(op.n == 20);
    CHECK(op.matrix.rows() == 19);
    CHECK(op.matrix.cols() == 19);
    REQUIRE(op.nodes.size() == 19);
    CHECK(std::is_sorted(op.nodes.rbegin(), op.nodes.rend()));
    CHECK(op.nodes.front() < 1.0);
    CHECK(op.nodes.back() > -1.0);

    // the potential sits on the diagonal: compare against ell = 0
    const ChebOperator free_op = assemble_cheb({-1.0, 1.0}, {}, 20);
    for (std::size_t i = 0; i < 19; ++i) {
        CHECK(std::abs(op.matrix(i, i) - free_op.matrix(i, i) - 9.0 * std::exp(2.0 * op.nodes[i])) <
              1e-12 * std::abs(op.matrix(i, i)));
        for (std::size_t j = 0; j < 19; ++j)
            if (i != j) CHECK(op.matrix(i, j) == free_op.matrix(i, j));
    }
}

TEST_CASE("smallest collocation eigenvalue on (-1, 1)") {
    const auto v = cheb_spectrum({-1.0, 1.0}, {}, 400);
    CHECK(std::abs(v.front() - 2.4674011002723395) < 1e-10);
}

TEST_CASE("translation invariance with zero potential") {
    const auto a = cheb_spectrum({-1.0, 1.0}, {}, 48);
    const auto b = cheb_spectrum({0.0, 2.0}, {}, 48);
    REQUIRE(a.size() == b.size());
    for (std::size_t j = 0; j < 20; ++j) CHECK(std::abs(a[j] - b[j]) < 1e-9 * a[j]);
}

TEST_CASE("spectral convergence for the free operator") {
    // The low modes are resolved to rounding level by n = 32, so the ratio
    // is measured one doubling earlier, where it is still meaningful.
    const auto coarse = cheb_spectrum({-1.0, 1.0}, {}, 8);
    const auto fine = cheb_spectrum({-1.0, 1.0}, {}, 16);
    for (int j = 1; j <= 5; ++j) {
        const double e_c = std::abs(coarse[j - 1] - exact_box(j, 2.0));
        const double e_f = std::abs(fine[j - 1] - exact_box(j, 2.0));
        INFO("j = " << j << " errors " << e_c << " -> " << e_f);
        CHECK(e_f < 1e-3 * e_c);
    }
    const auto at32 = cheb_spectrum({-1.0, 1.0}, {}, 32);
    for (int j = 1; j <= 5; ++j) CHECK(std::abs(at32[j - 1] - exact_box(j, 2.0)) < 1e-12 * exact_box(j, 2.0));
}

TEST_CASE("finite-difference operator") {
    const TridiagOperator op = assemble_fd({-1.0, 1.0}, {}, 3);
    CHECK(op.size() == 3);
    CHECK(op.h == 0.5);
    for (double e : op.offdiag) CHECK(e == -4.0);
    for (double d : op.diag) CHECK(d == 8.0);
    const auto v = tridiag_eigenvalues(op, 0.0, 100.0).values;
    REQUIRE(v.size() == 3);
    // bisection stops at width 1e-12 relative
    CHECK(std::abs(v[0] - 16.0 * std::pow(std::sin(kPi / 8.0), 2)) < 1e-11);
    CHECK(std::abs(v[1] - 8.0) < 1e-11 * 8.0);
    CHECK(std::abs(v[2] - 16.0 * std::pow(std::sin(3.0 * kPi / 8.0), 2)) < 1e-11 * 14.0);
}

TEST_CASE("finite-difference textbook spectrum and grid") {
    Gen g(11);
    for (int rep = 0; rep < 10; ++rep) {
        const int m = g.integer(3, 300);
        const TridiagOperator op = assemble_fd({-1.0, 1.0}, {}, m);
        const double h = 2.0 / (m + 1);
        CHECK(std::abs(op.h - h) < 1e-16);
        for (double e : op.offdiag) CHECK(e == -1.0 / (op.h * op.h));
        const auto v = tridiag_eigenvalues(op, -1.0, INFINITY).values;
        REQUIRE(v.size() == static_cast<std::size_t>(m));
        for (int k = 1; k <= m; ++k) {
            const double want = 4.0 / (h * h) * std::pow(std::sin(k * kPi / (2.0 * (m + 1))), 2);
            CHECK(std::abs(v[k - 1] - want) < 1e-11 * want);
        }
    }
}

TEST_CASE("finite-difference convergence and Richardson extrapolation") {
    const int m = 400;
    const auto coarse = tridiag_eigenvalues(assemble_fd({-1.0, 1.0}, {}, m), 0.0, 100.0).values;
    const auto fine = tridiag_eigenvalues(assemble_fd({-1.0, 1.0}, {}, 2 * m + 1), 0.0, 100.0).values;
    for (int j = 1; j <= 5; ++j) {
        const double exact = exact_box(j, 2.0);
        const double e_c = std::abs(coarse[j - 1] - exact);
        const double e_f = std::abs(fine[j - 1] - exact);
        CHECK(e_f / e_c == doctest::Approx(0.25).epsilon(0.01));  // second order
        const double extrap = (4.0 * fine[j - 1] - coarse[j - 1]) / 3.0;
        CHECK(std::abs(extrap - exact) < 1e-3 * e_f);
    }
}

TEST_CASE("the two discretisations agree on a smooth potential") {
    for (int ell : {1, 5, 10}) {
        PotentialSpec pot;
        pot.ell = ell;
        const auto cheb = cheb_spectrum({-1.0, 1.0}, pot, 96);
        const int m = 1500;
        const auto c = tridiag_eigenvalues(assemble_fd({-1.0, 1.0}, pot, m), -1.0, 2000.0).values;
        const auto f = tridiag_eigenvalues(assemble_fd({-1.0, 1.0}, pot, 2 * m + 1), -1.0, 2000.0).values;
        for (int j = 0; j < 10; ++j) {
            const double extrap = (4.0 * f[j] - c[j]) / 3.0;
            INFO("ell " << ell << " j " << j);
            CHECK(std::abs(cheb[j] - extrap) < 1e-6 * cheb[j]);
        }
    }
}

TEST_CASE("min-max bracketing by the potential range") {
    Gen g(7);
    for (int rep = 0; rep < 6; ++rep) {
        const double alpha = g.uniform(-2.0, 0.5);
        const double beta = alpha + g.uniform(0.5, 2.5);
        PotentialSpec pot;
        pot.ell = g.integer(0, 12);
        pot.transverse_scale = g.uniform(0.25, 2.0);
        const double c = g.uniform(-5.0, 5.0);
        pot.extra = [c](double t) { return c * std::sin(3.0 * t); };
        double qmin = INFINITY, qmax = -INFINITY;
        for (int i = 0; i <= 4000; ++i) {
            const double t = alpha + (beta - alpha) * i / 4000.0;
            qmin = std::min(qmin, pot(t));
            qmax = std::max(qmax, pot(t));
        }
        const auto v = cheb_spectrum({alpha, beta}, pot, 64);
        for (int j = 1; j <= 10; ++j) {
            const double base = exact_box(j, beta - alpha);
            CHECK(v[j - 1] >= base + qmin - 1e-9 * v[j - 1]);
            CHECK(v[j - 1] <= base + qmax + 1e-9 * v[j - 1]);
        }
    }
}

TEST_CASE("cached second-derivative matrix is shared") {
    const auto a = cheb_second_derivative_interior(40);
    const auto b = cheb_second_derivative_interior(40);
    CHECK(a.get() == b.get());
    CHECK(a->rows() == 39);
}

TEST_CASE("dense view of a tridiagonal operator") {
    const TridiagOperator op = assemble_fd({-1.0, 1.0}, {}, 5);
    const Matrix d = to_dense(op);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            const double want = i == j ? op.diag[i] : (i + 1 == j || j + 1 == i ? op.offdiag[std::min(i, j)] : 0.0);
            CHECK(d(i, j) == want);
        }
}
