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

// Numerical checks of the hyperbolic Lieb-Thirring inequality and its dual
// Sobolev-type form on product domains (0, X) x (a, b) in the upper half-plane.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "hyperlap/constants.hpp"
#include "hyperlap/sl_family.hpp"

namespace hyperlap {

/// Omega = (0, x_length) x (a, b) in H^2.
struct ProductDomain {
    double x_length = 0.0;
    double a = 0.0;
    double b = 0.0;

    void validate() const;
    /// (ln a, ln b)
    Interval log_interval() const;
    /// Dirichlet modes of (0, X) are (ell pi / X)^2 = transverse_scale * ell^2.
    double transverse_scale() const;
};

/// X (1/a - 1/b)
double hyperbolic_volume(const ProductDomain& dom);

/// V = height on Omega with Dirichlet walls.
struct BoxPotential {
    ProductDomain domain;
    double height = 0.0;
};

/// height^{gamma + d/2} |Omega|_h
double potential_integral(const BoxPotential& pot, double gamma, int dim = 2);

struct LtReport {
    double gamma = 0.0;
    double lambda = 0.0;
    double lhs = 0.0;  // sum (Lambda - nu)_+^gamma
    double rhs = 0.0;  // best-known constant times the potential integral
    double ratio = 0.0;
    bool passed = false;
    /// For 1/2 <= gamma < 1: the sharper product-domain bound 2 L^cl_{gamma,2} ...
    std::optional<double> product_rhs;
    std::optional<double> product_ratio;
};

/// Sweeps the separated 1D problems up to the potential height and compares
/// the Riesz mean with the bound. Passing means ratio <= 1.
LtReport lt_check(const BoxPotential& pot, double gamma, const SweepOptions& options = {},
                  double r11 = constants::kR11);

/// Same, reusing a table swept on pot.domain with cutoff >= pot.height.
LtReport lt_check(const EigenTable& table, const BoxPotential& pot, double gamma, double r11 = constants::kR11);

/// {gamma, lambda, lhs, rhs, ratio, passed}
void write_json(const LtReport& report, std::ostream& out);

/// A smooth profile and its derivative. Leave `derivative` empty to have it
/// computed by Chebyshev spectral differentiation (see spectral_profile).
struct Profile {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
};

/// Profile whose derivative is the Chebyshev interpolant's derivative at degree n on [lo, hi].
Profile spectral_profile(std::function<double(double)> f, double lo, double hi, int n = 96);

/// u(x, y) = x_profile(x) * t_profile(ln y); t_profile lives on (ln a, ln b).
struct SobolevTrialFunction {
    Profile x_profile;
    Profile t_profile;
};

struct SobolevReport {
    double norm_sq = 0.0;   // ||u||^2
    double gradient = 0.0;  // int y^{2-d} |grad u|^2 dx dy
    double quartic = 0.0;   // int y^{2(1-d)/d} |u|^{2+4/d} dx dy / y^d
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    int nodes = 0;
    bool passed = false;
};

/// ||u||^{4/d} grad >= K quartic + (d-1)^2/4 ||u||^{2+4/d} for d = 2, with
/// every integral done by tensor Gauss-Legendre quadrature in (x, t = ln y).
/// Passing means margin >= -1e-9 * rhs.
SobolevReport sobolev_check(const SobolevTrialFunction& u, const ProductDomain& dom,
                            double k = constants::k_one_d(2).value, double rel_tol = 1e-10);

/// Named trial functions on dom: "sine-cos2", "sine2-sine", "poly",
/// "gauss-bump" (t-profile concentrated with the given width) and "skewed"
/// (derivatives left to spectral differentiation). Throws DomainError for
/// unknown names.
SobolevTrialFunction trial_function(std::string_view name, const ProductDomain& dom, double width = 0.05);

}  // namespace hyperlap
