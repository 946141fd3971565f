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

#include "hyperlap/constants.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hyperlap/errors.hpp"

namespace hyperlap::constants {
namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos(double x) {
    if (x < 0.5) {
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos(1.0 - x));
    }
    x -= 1.0;
    double a = kLanczos[0];
    const double t = x + kLanczosG + 0.5;
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

void require_dim_at_least_two(int dim) {
    if (dim < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(dim));
}

}  // namespace

std::string_view to_string(ConstantKind kind) noexcept {
    switch (kind) {
        case ConstantKind::semiclassical: return "semiclassical";
        case ConstantKind::lieb_thirring: return "lieb_thirring";
        case ConstantKind::sobolev: return "sobolev";
        case ConstantKind::counting_bound: return "counting_bound";
        case ConstantKind::product_counting_bound: return "product_counting_bound";
        case ConstantKind::ratio: return "ratio";
    }
    return "unknown";
}

double gamma_fn(double x) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw DomainError("gamma_fn requires a finite positive argument");
    }
    // Integers and half-integers up to 50 go through the exact recurrences.
    const double twice = 2.0 * x;
    if (x <= 50.0 && twice == std::floor(twice)) {
        double result;
        double k;
        if (x == std::floor(x)) {
            result = 1.0;
            k = 1.0;
        } else {
            result = std::sqrt(std::numbers::pi);
            k = 0.5;
        }
        for (; k < x; k += 1.0) result *= k;
        return result;
    }
    return lanczos(x);
}

void validate(const ConstantQuery& q) {
    if (!std::isfinite(q.gamma) || q.gamma < 0.0) throw DomainError("gamma must be finite and >= 0");
    if (q.dim < 1) throw DomainError("dimension must be >= 1");
}

ConstantValue lt_classical(const ConstantQuery& q) {
    validate(q);
    const double half_d = 0.5 * q.dim;
    const double value = gamma_fn(q.gamma + 1.0) /
                         (std::pow(4.0 * std::numbers::pi, half_d) * gamma_fn(q.gamma + half_d + 1.0));
    return {value, ConstantKind::semiclassical};
}

ConstantValue lt_theorem(const ConstantQuery& q, double r11) {
    validate(q);
    if (q.gamma < 0.5) throw DomainError("best-known constants need gamma >= 1/2");
    double factor = 1.0;
    if (q.gamma < 1.0) {
        factor = 2.0 * r11;
    } else if (q.gamma < 1.5) {
        factor = r11;
    }
    return {factor * lt_classical(q).value, ConstantKind::lieb_thirring};
}

ConstantValue k_one_d(int dim, double r11) {
    require_dim_at_least_two(dim);
    const double d = dim;
    const double l1 = lt_theorem({1.0, dim}, r11).value;
    const double value = (2.0 / d) * std::pow(1.0 + d / 2.0, 1.0 + 2.0 / d) * std::pow(l1, 2.0 / d);
    return {value, ConstantKind::sobolev};
}

ConstantValue polya_constant(int dim, double r11) {
    require_dim_at_least_two(dim);
    const double d = dim;
    const double l1 = lt_theorem({1.0, dim}, r11).value;
    return {std::pow(1.0 + 2.0 / d, d / 2.0) * (1.0 + d / 2.0) * l1, ConstantKind::counting_bound};
}

ConstantValue product_counting_constant(int dim) {
    require_dim_at_least_two(dim);
    const double d = dim;
    const double lhalf = lt_classical({0.5, dim}).value;
    const double value = std::pow((d + 1.0) / d, (d + 1.0) / 2.0) * std::sqrt(d) * 2.0 * lhalf;
    return {value, ConstantKind::product_counting_bound};
}

double constant_ratio(int dim, double r11) {
    return product_counting_constant(dim).value / polya_constant(dim, r11).value;
}

}  // namespace hyperlap::constants
