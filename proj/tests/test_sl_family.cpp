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
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "generators.hpp"
#include "hyperlap/eigen.hpp"
#include "hyperlap/errors.hpp"
#include "hyperlap/sl_family.hpp"

using namespace hyperlap;
using hyperlap::testing::Gen;

namespace {
constexpr double kPi = std::numbers::pi;

SLProblem problem(int ell, Interval iv = {-1.0, 1.0}, double scale = 1.0) {
    SLProblem p{iv, {}};
    p.pot.ell = ell;
    p.pot.transverse_scale = scale;
    return p;
}

// Finite differences on grids m and 2m + 1 (half the mesh width), combined
// to cancel the h^2 term.
std::vector<double> fd_oracle(const SLProblem& p, int m, double hi) {
    const auto c = tridiag_eigenvalues(assemble_fd(p.interval, p.pot, m), -INFINITY, hi).values;
    const auto f = tridiag_eigenvalues(assemble_fd(p.interval, p.pot, 2 * m + 1), -INFINITY, hi).values;
    std::vector<double> out;
    for (std::size_t i = 0; i < std::min(c.size(), f.size()); ++i) out.push_back((4.0 * f[i] - c[i]) / 3.0);
    return out;
}

double lowest(int ell, Interval iv = {-1.0, 1.0}, double scale = 1.0) {
    const SLProblem p = problem(ell, iv, scale);
    return dense_eigenvalues(assemble_cheb(p.interval, p.pot, 64).matrix).values.front();
}

SweepOptions small_sweep() {
    SweepOptions o;
    o.certify.n = 64;
    o.certify.fd_points = 1500;
    return o;
}
}  // namespace

TEST_CASE("uncertified solve of the free problem") {
    const auto s = solve_problem(problem(0), 64, 100.0);
    REQUIRE(s.values.size() == 6);
    for (int k = 1; k <= 6; ++k) CHECK(std::abs(s.values[k - 1] - std::pow(k * kPi / 2.0, 2)) < 1e-10);
    CHECK_THROWS_AS(solve_problem(problem(0), 64, 0.0), DomainError);
    // half the discrete spectrum is never trusted
    CHECK_THROWS_AS(solve_problem(problem(0), 16, 1e6), CertificationError);
}

TEST_CASE("certified solve of the free problem up to 1000") {
    const auto s = solve_certified(problem(0), 1000.0, {400, 1e-10, 4000});
    REQUIRE(s.values.size() == 20);
    for (int k = 1; k <= 20; ++k) {
        const double exact = std::pow(k * kPi / 2.0, 2);
        CHECK(std::abs(s.values[k - 1] - exact) < 1e-10 * exact);
    }
}

TEST_CASE("certified solve against the finite-difference oracle") {
    const SLProblem p = problem(1);
    const auto s = solve_certified(p, 1000.0, {200, 1e-8, 4000});
    const auto oracle = fd_oracle(p, 2000, 1100.0);
    REQUIRE(oracle.size() >= s.values.size());
    for (std::size_t i = 0; i < s.values.size(); ++i) CHECK(std::abs(s.values[i] - oracle[i]) < 1e-8 * s.values[i]);
    CHECK(std::abs(s.values.front() - 3.6568899593412425) < 1e-10 * 3.66);
}

TEST_CASE("certified solve edge cases") {
    CHECK(solve_certified(problem(3), 1.0, {64, 1e-10, 500}).values.empty());
    CHECK_THROWS_AS(solve_certified(problem(0), 100.0, {64, 1e-14, 500}), DomainError);
    CHECK_THROWS_AS(solve_certified(problem(0), -1.0, {64, 1e-10, 500}), DomainError);
    // too coarse to certify
    try {
        solve_certified(problem(0), 300.0, {12, 1e-10, 500});
        FAIL("expected a certification failure");
    } catch (const CertificationError& e) {
        CHECK(e.first_bad_index() < 12);
    }
}

TEST_CASE("high transverse modes: the lowest eigenvalue at ell = 50") {
    // Pins the value that decides where the sweep stops; 544.56 is well below
    // 1000, so the family does not end at ell = 50 for this cutoff.
    const SLProblem p = problem(50);
    const auto s = solve_certified(p, 600.0, {400, 1e-10, 4000});
    REQUIRE(s.values.size() == 1);
    const auto oracle = fd_oracle(p, 4000, 600.0);
    CHECK(std::abs(s.values[0] - oracle[0]) < 1e-8 * s.values[0]);
    CHECK(s.values[0] == doctest::Approx(544.56).epsilon(1e-5));
}

TEST_CASE("ell_max search") {
    for (double cutoff : {20.0, 100.0, 400.0}) {
        const int ell_max = find_ell_max({-1.0, 1.0}, cutoff, 64);
        INFO("cutoff " << cutoff << " ell_max " << ell_max);
        CHECK(lowest(ell_max) > cutoff);
        if (ell_max > 1) CHECK(lowest(ell_max - 1) <= cutoff);
    }
    // other intervals and transverse scales
    const Interval iv{0.0, 1.5};
    const int ell_max = find_ell_max(iv, 300.0, 64, 2.0);
    CHECK(lowest(ell_max, iv, 2.0) > 300.0);
    CHECK(lowest(ell_max - 1, iv, 2.0) <= 300.0);
    CHECK_THROWS_AS(find_ell_max({-1.0, 1.0}, 0.0, 64), DomainError);
}

TEST_CASE("small sweep: structure, truncation and monotonicity") {
    const EigenTable t = sweep({-1.0, 1.0}, 150.0, small_sweep());
    CHECK(t.cutoff == 150.0);
    CHECK(t.resolution == 64);
    CHECK(t.ell_max == find_ell_max({-1.0, 1.0}, 150.0, 64));
    REQUIRE(!t.entries.empty());
    CHECK_NOTHROW(check_monotonicity(t));
    const double solve_to = 150.0 * (1.0 + t.margin);
    for (int ell = 1; ell < t.ell_max; ++ell) {
        std::size_t kept = 0;
        for (const auto& e : t.entries) {
            if (e.ell != ell) continue;
            ++kept;
            CHECK(e.nu <= solve_to);
            CHECK(e.k == static_cast<int>(kept));
        }
        // the first discarded eigenvalue lies past the retained range
        const auto full = solve_problem(problem(ell), 64, 2000.0).values;
        REQUIRE(full.size() > kept);
        CHECK(full[kept] > solve_to);
    }
    for (const auto& e : t.entries) CHECK(e.ell >= 1);
    const auto sorted = t.sorted_values();
    CHECK(std::is_sorted(sorted.begin(), sorted.end()));
    CHECK(sorted.size() == t.entries.size());
}

TEST_CASE("sweeps are deterministic and independent of the thread count") {
    SweepOptions one = small_sweep(), many = small_sweep();
    one.threads = 1;
    many.threads = 3;
    const EigenTable a = sweep({-1.0, 1.0}, 120.0, one);
    const EigenTable b = sweep({-1.0, 1.0}, 120.0, many);
    const EigenTable c = sweep({-1.0, 1.0}, 120.0, many);
    CHECK(a.entries == b.entries);
    CHECK(b.entries == c.entries);
}

TEST_CASE("explicit ell_max") {
    SweepOptions o = small_sweep();
    const EigenTable adaptive = sweep({-1.0, 1.0}, 100.0, o);
    o.ell_max = adaptive.ell_max + 3;
    const EigenTable wider = sweep({-1.0, 1.0}, 100.0, o);
    std::vector<EigenEntry> below_a, below_w;
    for (const auto& e : adaptive.entries)
        if (e.nu < 100.0) below_a.push_back(e);
    for (const auto& e : wider.entries)
        if (e.nu < 100.0) below_w.push_back(e);
    CHECK(below_a == below_w);

    o.ell_max = adaptive.ell_max - 1;
    CHECK_THROWS_AS(sweep({-1.0, 1.0}, 100.0, o), CertificationError);
    o.ell_max = 0;
    CHECK_THROWS_AS(sweep({-1.0, 1.0}, 100.0, o), DomainError);
}

TEST_CASE("monotonicity checker rejects broken tables") {
    EigenTable t;
    t.entries = {{1, 1, 3.0}, {1, 2, 10.0}, {2, 1, 6.0}, {2, 2, 14.0}};
    CHECK_NOTHROW(check_monotonicity(t));
    t.entries[1].nu = 2.0;
    CHECK_THROWS_AS(check_monotonicity(t), CertificationError);
    t.entries[1].nu = 10.0;
    t.entries[3].nu = 9.0;
    CHECK_THROWS_AS(check_monotonicity(t), CertificationError);
}

TEST_CASE("CSV round trip is exact") {
    Gen g(13);
    EigenTable t;
    for (int ell = 1; ell <= 5; ++ell) {
        double nu = g.uniform(1.0, 10.0) * ell;
        for (int k = 1; k <= 7; ++k) t.entries.push_back({ell, k, nu += g.uniform(0.1, 50.0) / 3.0});
    }
    std::stringstream ss;
    write_csv(t, ss);
    CHECK(ss.str().rfind("ell,k,nu\n", 0) == 0);
    CHECK(read_csv(ss) == t.entries);

    std::stringstream bad("ell;k;nu\n1;1;2\n");
    CHECK_THROWS_AS(read_csv(bad), DomainError);
    std::stringstream bad_row("ell,k,nu\n1,1\n");
    CHECK_THROWS_AS(read_csv(bad_row), DomainError);
}

TEST_CASE("spectral parameter conversion") {
    CHECK(to_lambda(0.0, 2) == 0.25);
    CHECK(to_lambda(3.0, 3) == 4.0);
    Gen g(19);
    for (int i = 0; i < 100; ++i) {
        const double nu = g.uniform(-5.0, 1000.0);
        const int d = g.integer(2, 8);
        CHECK(std::abs(to_nu(to_lambda(nu, d), d) - nu) < 1e-12 * std::max(1.0, std::abs(nu)));
    }
}

TEST_CASE("thread count resolution") {
    CHECK(resolve_threads(5) == 5);
    setenv("HYPERLAP_THREADS", "2", 1);
    CHECK(resolve_threads(0) == 2);
    setenv("HYPERLAP_THREADS", "0", 1);
    CHECK(resolve_threads(0) >= 1);
    setenv("HYPERLAP_THREADS", "junk", 1);
    CHECK(resolve_threads(0) >= 1);
    unsetenv("HYPERLAP_THREADS");
}
