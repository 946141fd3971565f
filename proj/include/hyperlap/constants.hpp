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

#pragma once

// Semiclassical and best-known Lieb-Thirring constants on hyperbolic space,
// together with the coefficients of the eigenvalue counting bounds built
// from them.

#include <string_view>

namespace hyperlap::constants {

/// Best known excess factor over the semiclassical constant for the 1D,
/// gamma = 1 operator-valued Lieb-Thirring inequality (known only as <= 1.456...).
inline constexpr double kR11 = 1.456;

/// Riesz-mean order gamma and dimension d.
struct ConstantQuery {
    double gamma;
    int dim;
};

enum class ConstantKind {
    semiclassical,           // L^cl_{gamma,d}
    lieb_thirring,           // best-known L_{gamma,d}
    sobolev,                 // K_{1,d}
    counting_bound,          // general-domain Polya-type coefficient
    product_counting_bound,  // product-domain coefficient
    ratio,
};

std::string_view to_string(ConstantKind kind) noexcept;

struct ConstantValue {
    double value;
    ConstantKind kind;
};

/// Gamma function on x > 0 (relative error <= 1e-12 on (0, 50]).
double gamma_fn(double x);

/// Throws DomainError unless gamma is finite and >= 0 and dim >= 1.
void validate(const ConstantQuery& q);

/// Gamma(gamma+1) / ((4 pi)^{d/2} Gamma(gamma + d/2 + 1)).
ConstantValue lt_classical(const ConstantQuery& q);

/// Best-known constant for gamma >= 1/2: the classical value times
/// 1 (gamma >= 3/2), r11 (1 <= gamma < 3/2) or 2 r11 (1/2 <= gamma < 1).
ConstantValue lt_theorem(const ConstantQuery& q, double r11 = kR11);

/// K_{1,d} = (2/d) (1 + d/2)^{1+2/d} L_{1,d}^{2/d}, d >= 2.
ConstantValue k_one_d(int dim, double r11 = kR11);

/// Coefficient C(d) of N(Lambda) <= C(d) Lambda^{d/2} |Omega|_h for general
/// domains: (1 + 2/d)^{d/2} (1 + d/2) L_{1,d}.
ConstantValue polya_constant(int dim, double r11 = kR11);

/// Product-domain coefficient ((d+1)/d)^{(d+1)/2} sqrt(d) 2 L^cl_{1/2,d}.
ConstantValue product_counting_constant(int dim);

/// product_counting_constant(d) / polya_constant(d).
double constant_ratio(int dim, double r11 = kR11);

}  // namespace hyperlap::constants
