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

// Acceptance suite: one PASS/FAIL line per criterion, then a summary.
// Exit status is the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperlap/constants.hpp"
#include "hyperlap/counting.hpp"
#include "hyperlap/discretize.hpp"
#include "hyperlap/eigen.hpp"
#include "hyperlap/lt_verify.hpp"
#include "hyperlap/sl_family.hpp"
#include "hyperlap/simd/kernels.hpp"

using namespace hyperlap;

namespace {

constexpr double kPi = std::numbers::pi;
const Interval kInterval{-1.0, 1.0};
const ProductDomain kDomain{kPi, std::exp(-1.0), std::exp(1.0)};

// Pinned tolerances.
constexpr int kResolution = 400;
constexpr double kCutoff = 1000.0;
constexpr double kFreeTolLow = 1e-10;   // k <= 100
constexpr double kFreeTolHigh = 1e-8;   // k <= 150
constexpr double kSingleSolveSeconds = 30.0;
constexpr double kSweepSeconds = 600.0;
constexpr int kFigureGrid = 10000;
constexpr int kExpectedEllMax = 50;
constexpr int kOracleGrid = 2000;
constexpr int kCountGrid = 4000;
constexpr double kOracleTol = 1e-8;
constexpr double kIdentityTol = 1e-12;
constexpr double kRatioAt2 = 1.18959;
constexpr double kRatioTol = 1e-4;
constexpr double kSobolevTol = 1e-9;
constexpr double kAlgebraTol = 1e-12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
    std::fflush(stdout);
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct SweepResult {
    EigenTable table;
    double seconds = 0.0;
};

const SweepResult& main_sweep() {
    static const SweepResult r = [] {
        SweepOptions o;
        o.certify.n = kResolution;
        const auto t0 = Clock::now();
        SweepResult s;
        s.table = sweep(kInterval, kCutoff, o);
        s.seconds = seconds_since(t0);
        return s;
    }();
    return r;
}

CountingFunction main_counting() {
    return CountingFunction::from_table(main_sweep().table, hyperbolic_volume(kDomain), 2);
}

double lowest(int ell, int n) {
    SLProblem p{kInterval, {}};
    p.pot.ell = ell;
    return dense_eigenvalues(assemble_cheb(p.interval, p.pot, n).matrix).values.front();
}

Outcome free_accuracy() {
    const auto t0 = Clock::now();
    const auto v = dense_eigenvalues(assemble_cheb(kInterval, {}, kResolution).matrix).values;
    const double secs = seconds_since(t0);
    double worst_low = 0.0, worst_high = 0.0;
    for (int k = 1; k <= 150; ++k) {
        const double exact = std::pow(k * kPi / 2.0, 2);
        const double err = std::abs(v[k - 1] - exact) / exact;
        (k <= 100 ? worst_low : worst_high) = std::max(k <= 100 ? worst_low : worst_high, err);
    }
    return {worst_low <= kFreeTolLow && worst_high <= kFreeTolHigh && secs < kSingleSolveSeconds,
            fmt("max rel err %.2e (k<=100), %.2e (100<k<=150); solve %.2f s", worst_low, worst_high, secs)};
}

Outcome figure2() {
    const auto& s = main_sweep();
    const auto t0 = Clock::now();
    const auto r = verify_bound(main_counting(), {}, kCutoff, kFigureGrid);
    const double total = s.seconds + seconds_since(t0);
    return {!r.violated && total < kSweepSeconds,
            fmt("%zu families, N(1000) = %zu, %zu samples, min margin %.4f at Lambda = %.4g, %s; %.1f s",
                static_cast<std::size_t>(s.table.ell_max - 1), count(main_counting(), kCutoff), r.lambda_grid.size(),
                r.min_margin, r.argmin_lambda, r.violated ? "VIOLATED" : "no violations", total)};
}

Outcome truncation() {
    const int ell_max = main_sweep().table.ell_max;
    const double at_expected = lowest(kExpectedEllMax, kResolution);
    const double before = lowest(kExpectedEllMax - 1, kResolution);
    return {ell_max == kExpectedEllMax && at_expected > kCutoff && before <= kCutoff,
            fmt("adaptive ell_max = %d (expected %d); lowest eigenvalue %.4f at ell = %d, %.4f at ell = %d, "
                "%.4f at ell = %d",
                ell_max, kExpectedEllMax, before, kExpectedEllMax - 1, at_expected, kExpectedEllMax,
                lowest(ell_max, kResolution), ell_max)};
}

Outcome oracle() {
    double worst = 0.0;
    for (int ell : {1, 5, 10}) {
        SLProblem p{kInterval, {}};
        p.pot.ell = ell;
        const auto cheb = dense_eigenvalues(assemble_cheb(p.interval, p.pot, kResolution).matrix).values;
        const auto coarse = assemble_fd(p.interval, p.pot, kOracleGrid);
        const auto fine = assemble_fd(p.interval, p.pot, 2 * kOracleGrid + 1);
        const double top = cheb[19] * 1.5;
        const auto c = tridiag_eigenvalues(coarse, -INFINITY, top).values;
        const auto f = tridiag_eigenvalues(fine, -INFINITY, top).values;
        const double r2 = std::pow(coarse.h / fine.h, 2);
        for (int j = 0; j < 20; ++j) {
            const double extrap = (r2 * f[j] - c[j]) / (r2 - 1.0);
            worst = std::max(worst, std::abs(cheb[j] - extrap) / cheb[j]);
        }
    }
    // Exact count comparison below the cutoff for every mode up to 50.
    const auto& t = main_sweep().table;
    int mismatches = 0;
    std::size_t total = 0;
    for (int ell = 0; ell <= 50; ++ell) {
        SLProblem p{kInterval, {}};
        p.pot.ell = ell;
        std::size_t cheb_count = 0;
        if (ell == 0) {
            cheb_count = solve_certified(p, kCutoff).values.size();
        } else {
            for (const auto& e : t.entries)
                if (e.ell == ell && e.nu < kCutoff) ++cheb_count;
        }
        const std::size_t fd_count = sturm_count(assemble_fd(p.interval, p.pot, kCountGrid), kCutoff);
        total += cheb_count;
        if (fd_count != cheb_count) ++mismatches;
    }
    return {worst <= kOracleTol && mismatches == 0,
            fmt("max rel deviation %.2e over 20 eigenvalues x ell {1,5,10}; Sturm counts below 1000 agree for "
                "%d/51 modes (%zu eigenvalues)",
                worst, 51 - mismatches, total)};
}

Outcome identities() {
    double worst = 0.0;
    for (double g : {0.5, 1.0, 1.5, 2.0}) {
        for (int d = 2; d <= 8; ++d) {
            const double rhs = constants::lt_classical({g, d}).value;
            const double lhs =
                constants::lt_classical({g, 1}).value * constants::lt_classical({g + 0.5, d - 1}).value;
            worst = std::max(worst, std::abs(lhs - rhs) / rhs);
            const double m0 = constants::lt_classical({0.0, d}).value;
            worst = std::max(worst, std::abs((1.0 + d / 2.0) * constants::lt_classical({1.0, d}).value - m0) / m0);
        }
    }
    return {worst <= kIdentityTol, fmt("max rel deviation %.2e", worst)};
}

Outcome figure1() {
    const auto rows = figure1_data(2, 20);
    double min_ratio = INFINITY;
    for (const auto& r : rows) min_ratio = std::min(min_ratio, r.ratio);
    const double r2 = rows.front().ratio;
    return {min_ratio > 1.0 && std::abs(r2 - kRatioAt2) <= kRatioTol,
            fmt("ratio(2) = %.6f, min over d=2..20 = %.6f", r2, min_ratio)};
}

Outcome lieb_thirring() {
    double worst = 0.0, worst_product = 0.0;
    bool ok = true;
    for (double gamma : {0.5, 1.0, 1.5}) {
        for (double lam : {10.0, 100.0, 1000.0}) {
            const auto r = lt_check(main_sweep().table, {kDomain, lam}, gamma);
            ok = ok && r.passed;
            worst = std::max(worst, r.ratio);
        }
    }
    const auto cf = main_counting();
    for (double gamma : {0.5, 0.75}) {
        for (double lam : {10.0, 100.0, 1000.0}) {
            const double lhs = riesz_mean(cf, lam, gamma);
            const double rhs = product_riesz_rhs(lam, gamma, 2, cf.domain_volume);
            ok = ok && lhs <= rhs;
            worst_product = std::max(worst_product, lhs / rhs);
        }
    }
    return {ok, fmt("max ratio %.4f (best-known constants), %.4f (product-domain constant)", worst, worst_product)};
}

Outcome sobolev() {
    bool ok = true;
    std::ostringstream detail;
    for (const char* name : {"sine-cos2", "sine2-sine", "poly", "gauss-bump", "skewed"}) {
        const double width = std::string(name) == "gauss-bump" ? 0.02 : 0.05;
        const auto r = sobolev_check(trial_function(name, kDomain, width), kDomain);
        ok = ok && r.margin >= -kSobolevTol * r.rhs;
        detail << name << " margin/rhs " << fmt("%.3g", r.margin / r.rhs) << "; ";
    }
    std::string d = detail.str();
    d.resize(d.size() - 2);
    return {ok, d};
}

Outcome counting_algebra() {
    const auto cf = main_counting();
    std::mt19937_64 rng(20261017);
    std::uniform_real_distribution<double> u(0.0, kCutoff);
    int bad = 0;
    for (int i = 0; i < 10; ++i) {
        double a = u(rng), b = u(rng);
        if (a > b) std::swap(a, b);
        if (a == b) b = std::nextafter(a, kCutoff);
        if (static_cast<double>(count(cf, a)) > riesz_mean(cf, b, 1.0) / (b - a) * (1.0 + kAlgebraTol)) ++bad;
    }
    int bad_al = 0;
    for (double lam : {100.0, 1000.0}) {
        const double r05 = riesz_mean(cf, lam, 0.5), r1 = riesz_mean(cf, lam, 1.0), r15 = riesz_mean(cf, lam, 1.5);
        if (r1 > std::sqrt(lam) * r05 * (1.0 + kAlgebraTol)) ++bad_al;
        if (r15 > std::sqrt(lam) * r1 * (1.0 + kAlgebraTol)) ++bad_al;
    }
    return {bad == 0 && bad_al == 0,
            fmt("%d/10 Chebyshev-type pairs hold, %d/4 Riesz monotonicity steps hold", 10 - bad, 4 - bad_al)};
}

}  // namespace

int main() {
    std::printf("hyperlap acceptance suite (kernels: %s)\n", std::string(simd::name(simd::active().isa)).c_str());
    report(1, "free spectrum at n = 400 matches (k pi / 2)^2", free_accuracy);
    report(2, "counting function stays below the Polya line on (0, 1000]", figure2);
    report(3, "sweep truncates at ell_max = 50 for cutoff 1000", truncation);
    report(4, "Chebyshev eigenvalues agree with the finite-difference oracle", oracle);
    report(5, "product and moment identities for classical constants", identities);
    report(6, "constant ratio exceeds one for d = 2..20", figure1);
    report(7, "Lieb-Thirring sums stay below the best-known and product bounds", lieb_thirring);
    report(8, "interpolation inequality holds for five trial functions", sobolev);
    report(9, "Chebyshev-type and Riesz monotonicity relations on the sweep", counting_algebra);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures;
}
