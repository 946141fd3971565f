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

#include "hyperlap/lt_verify.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include <json.hpp>

#include "hyperlap/counting.hpp"
#include "hyperlap/discretize.hpp"
#include "hyperlap/errors.hpp"
#include "hyperlap/quadrature.hpp"

namespace hyperlap {

void ProductDomain::validate() const {
    if (!(x_length > 0.0) || !std::isfinite(x_length)) throw DomainError("x_length must be positive and finite");
    if (!(a > 0.0) || !(b > a) || !std::isfinite(b)) throw DomainError("product domain needs 0 < a < b < inf");
}

Interval ProductDomain::log_interval() const {
    validate();
    return {std::log(a), std::log(b)};
}

double ProductDomain::transverse_scale() const {
    validate();
    const double s = std::numbers::pi / x_length;
    return s * s;
}

double hyperbolic_volume(const ProductDomain& dom) {
    dom.validate();
    return dom.x_length * (1.0 / dom.a - 1.0 / dom.b);
}

double potential_integral(const BoxPotential& pot, double gamma, int dim) {
    if (!(pot.height > 0.0)) throw DomainError("box potential height must be positive");
    if (!(gamma >= 0.5)) throw DomainError("Lieb-Thirring check needs gamma >= 1/2");
    return std::pow(pot.height, gamma + 0.5 * dim) * hyperbolic_volume(pot.domain);
}

LtReport lt_check(const BoxPotential& pot, double gamma, const SweepOptions& options, double r11) {
    SweepOptions o = options;
    o.transverse_scale = pot.domain.transverse_scale();
    const EigenTable table = sweep(pot.domain.log_interval(), pot.height, o);
    return lt_check(table, pot, gamma, r11);
}

LtReport lt_check(const EigenTable& table, const BoxPotential& pot, double gamma, double r11) {
    const Interval interval = pot.domain.log_interval();
    if (std::fabs(table.interval.alpha - interval.alpha) > 1e-12 ||
        std::fabs(table.interval.beta - interval.beta) > 1e-12 ||
        std::fabs(table.transverse_scale - pot.domain.transverse_scale()) > 1e-12 * table.transverse_scale) {
        throw DomainError("eigen table was swept on a different domain");
    }
    const double volume = hyperbolic_volume(pot.domain);
    const auto cf = CountingFunction::from_table(table, volume, 2);

    LtReport r;
    r.gamma = gamma;
    r.lambda = pot.height;
    r.lhs = riesz_mean(cf, pot.height, gamma);
    r.rhs = constants::lt_theorem({gamma, 2}, r11).value * potential_integral(pot, gamma, 2);
    r.ratio = r.lhs / r.rhs;
    r.passed = r.ratio <= 1.0;
    if (gamma >= 0.5 && gamma < 1.0) {
        r.product_rhs = product_riesz_rhs(pot.height, gamma, 2, volume);
        r.product_ratio = r.lhs / *r.product_rhs;
    }
    return r;
}

void write_json(const LtReport& report, std::ostream& out) {
    nlohmann::ordered_json j;
    j["gamma"] = report.gamma;
    j["lambda"] = report.lambda;
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["ratio"] = report.ratio;
    j["passed"] = report.passed;
    out << j.dump(2) << '\n';
}

Profile spectral_profile(std::function<double(double)> f, double lo, double hi, int n) {
    if (!(lo < hi)) throw DomainError("spectral_profile needs lo < hi");
    const auto x = cheb_nodes(n);
    const Matrix d = cheb_diff_matrix(n);
    const auto size = x.size();
    std::vector<double> values(size);
    std::vector<double> deriv(size, 0.0);
    std::vector<double> points(size);
    for (std::size_t j = 0; j < size; ++j) {
        points[j] = lo + 0.5 * (hi - lo) * (x[j] + 1.0);
        values[j] = f(points[j]);
    }
    const double chain = 2.0 / (hi - lo);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) deriv[i] += d(i, j) * values[j];
        deriv[i] *= chain;
    }
    // Barycentric interpolation of the derivative samples at Chebyshev points.
    auto interpolate = [points, deriv](double t) {
        double num = 0.0;
        double den = 0.0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            const double diff = t - points[j];
            if (diff == 0.0) return deriv[j];
            double w = (j % 2 == 0) ? 1.0 : -1.0;
            if (j == 0 || j + 1 == points.size()) w *= 0.5;
            num += w * deriv[j] / diff;
            den += w / diff;
        }
        return num / den;
    };
    return {std::move(f), interpolate};
}

SobolevReport sobolev_check(const SobolevTrialFunction& u, const ProductDomain& dom, double k, double rel_tol) {
    const Interval ti = dom.log_interval();
    const Box box{0.0, dom.x_length, ti.alpha, ti.beta};
    const Profile xp = u.x_profile.derivative ? u.x_profile
                                              : spectral_profile(u.x_profile.value, 0.0, dom.x_length);
    const Profile tp = u.t_profile.derivative ? u.t_profile : spectral_profile(u.t_profile.value, ti.alpha, ti.beta);

    // With y = e^t the measure dx dy / y^2 becomes e^{-t} dx dt.
    auto norm_density = [&](double x, double t) {
        const double v = xp.value(x) * tp.value(t);
        return v * v * std::exp(-t);
    };
    // |d_y u|^2 dy = X^2 T'^2 e^{-t} dt and |d_x u|^2 dy = X'^2 T^2 e^{t} dt
    auto gradient_density = [&](double x, double t) {
        const double X = xp.value(x);
        const double T = tp.value(t);
        const double dX = xp.derivative(x);
        const double dT = tp.derivative(t);
        return X * X * dT * dT * std::exp(-t) + dX * dX * T * T * std::exp(t);
    };
    // y^{-1} |u|^4 dx dy / y^2 = X^4 T^4 e^{-2t} dx dt
    auto quartic_density = [&](double x, double t) {
        const double v = xp.value(x) * tp.value(t);
        const double v2 = v * v;
        return v2 * v2 * std::exp(-2.0 * t);
    };

    SobolevReport r;
    const auto n1 = integrate_tensor_adaptive(norm_density, box, rel_tol);
    const auto n2 = integrate_tensor_adaptive(gradient_density, box, rel_tol);
    const auto n3 = integrate_tensor_adaptive(quartic_density, box, rel_tol);
    r.norm_sq = n1.value;
    r.gradient = n2.value;
    r.quartic = n3.value;
    r.nodes = std::max({n1.nodes, n2.nodes, n3.nodes});

    constexpr double d = 2.0;
    const double shift = (d - 1.0) * (d - 1.0) / 4.0;
    r.lhs = std::pow(r.norm_sq, 2.0 / d) * r.gradient;
    r.rhs = k * r.quartic + shift * std::pow(r.norm_sq, 1.0 + 2.0 / d);
    r.margin = r.lhs - r.rhs;
    r.passed = r.margin >= -1e-9 * r.rhs;
    return r;
}

}  // namespace hyperlap

namespace hyperlap {

SobolevTrialFunction trial_function(std::string_view name, const ProductDomain& dom, double width) {
    const Interval ti = dom.log_interval();
    const double X = dom.x_length;
    const double pi = std::numbers::pi;
    const double lo = ti.alpha;
    const double hi = ti.beta;
    const double len = hi - lo;
    const double mid = 0.5 * (lo + hi);

    const Profile sine{[=](double x) { return std::sin(pi * x / X); },
                       [=](double x) { return pi / X * std::cos(pi * x / X); }};

    if (name == "sine-cos2") {
        return {sine,
                {[=](double t) {
                     const double c = std::cos(pi * (t - mid) / len);
                     return c * c;
                 },
                 [=](double t) {
                     const double s = pi * (t - mid) / len;
                     return -2.0 * std::cos(s) * std::sin(s) * pi / len;
                 }}};
    }
    if (name == "sine2-sine") {
        return {{[=](double x) {
                     const double s = std::sin(pi * x / X);
                     return s * s;
                 },
                 [=](double x) { return 2.0 * std::sin(pi * x / X) * std::cos(pi * x / X) * pi / X; }},
                {[=](double t) { return std::sin(pi * (t - lo) / len); },
                 [=](double t) { return pi / len * std::cos(pi * (t - lo) / len); }}};
    }
    if (name == "poly") {
        return {{[=](double x) { return x * (X - x); }, [=](double x) { return X - 2.0 * x; }},
                {[=](double t) { return (t - lo) * (hi - t); }, [=](double t) { return lo + hi - 2.0 * t; }}};
    }
    if (name == "gauss-bump") {
        if (!(width > 0.0)) throw DomainError("bump width must be positive");
        const double w2 = width * width;
        return {sine,
                {[=](double t) { return (t - lo) * (hi - t) * std::exp(-(t - mid) * (t - mid) / (2.0 * w2)); },
                 [=](double t) {
                     const double g = std::exp(-(t - mid) * (t - mid) / (2.0 * w2));
                     const double p = (t - lo) * (hi - t);
                     return ((lo + hi - 2.0 * t) - p * (t - mid) / w2) * g;
                 }}};
    }
    if (name == "skewed") {
        return {{[=](double x) { return x * x * (X - x); }, {}},
                {[=](double t) { return (t - lo) * (t - lo) * (hi - t) * std::exp(t); }, {}}};
    }
    throw DomainError("unknown trial function '" + std::string(name) + "'");
}

}  // namespace hyperlap
