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

// Eigenvalue counting function N(Lambda) = #{nu < Lambda}, Riesz means, and
// checks of Polya-type bounds N(Lambda) <= C Lambda^{d/2} |Omega|_h.

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <string_view>
#include <vector>

#include "hyperlap/constants.hpp"
#include "hyperlap/sl_family.hpp"

namespace hyperlap {

struct CountingFunction {
    std::vector<double> sorted_nus;
    double domain_volume = 0.0;  // |Omega|_h
    int dim = 2;
    /// Every eigenvalue below this value is present.
    double complete_up_to = std::numeric_limits<double>::infinity();

    static CountingFunction from_table(const EigenTable& table, double volume, int dim);
};

/// #{nu < lam}
std::size_t count(const CountingFunction& cf, double lam);
/// #{nu <= lam}, the value just to the right of a jump at lam.
std::size_t count_at_most(const CountingFunction& cf, double lam);

/// sum (lam - nu)_+^gamma; gamma = 0 is the strict count. Throws
/// IncompleteTableError past cf.complete_up_to.
double riesz_mean(const CountingFunction& cf, double lam, double gamma);

/// L^cl_{0,d} lam^{d/2} volume (the conjectured semiclassical bound).
double polya_rhs(double lam, int dim, double volume);
/// polya_constant(d) lam^{d/2} volume (bound valid on any finite-volume domain).
double counting_bound_rhs(double lam, int dim, double volume, double r11 = constants::kR11);
/// product_counting_constant(d) lam^{d/2} volume (product domains).
double product_bound_rhs(double lam, int dim, double volume);
/// 2 L^cl_{gamma,d} lam^{d/2 + gamma} volume, the Riesz-mean bound on product
/// domains for 1/2 <= gamma < 1.
double product_riesz_rhs(double lam, double gamma, int dim, double volume);

enum class BoundKind { polya, counting, product_counting, product_riesz };

std::string_view to_string(BoundKind kind) noexcept;
/// Inverse of to_string; throws DomainError for unknown names.
BoundKind parse_bound_kind(std::string_view name);

struct BoundSpec {
    BoundKind kind = BoundKind::polya;
    double gamma = 0.5;   // product_riesz only
    double scale = 1.0;   // multiplies the bound (synthetic tightening in tests)
    double r11 = constants::kR11;
};

double bound_value(const BoundSpec& bound, double lam, int dim, double volume);

struct BoundReport {
    BoundSpec bound;
    double lam_max = 0.0;
    std::vector<double> lambda_grid;
    std::vector<double> lhs_values;  // N(Lambda), or the Riesz mean for product_riesz
    std::vector<double> bound_values;
    double min_margin = 0.0;
    double argmin_lambda = 0.0;
    bool violated = false;
};

/// Evaluates lhs and bound on `grid` uniform points in (0, lam_max] and at
/// every jump in (0, lam_max] (using the right limit there, where a step
/// function comes closest to an increasing bound).
BoundReport verify_bound(const CountingFunction& cf, const BoundSpec& bound, double lam_max, int grid);

/// JSON object {bound_kind, lam_max, min_margin, violated, argmin_lambda}.
void write_json(const BoundReport& report, std::ostream& out);

struct Figure1Row {
    int dim;
    double ratio;
};
std::vector<Figure1Row> figure1_data(int d_min, int d_max, double r11 = constants::kR11);
void write_figure1_csv(const std::vector<Figure1Row>& rows, std::ostream& out);

struct Figure2Row {
    double lambda;
    std::size_t count;
    double bound;
};
/// (Lambda, N(Lambda), polya_rhs) from Lambda = 0 to lam_max on a uniform
/// grid, with both one-sided values at every jump.
std::vector<Figure2Row> figure2_data(const CountingFunction& cf, double lam_max, int grid = 10000);
void write_figure2_csv(const std::vector<Figure2Row>& rows, std::ostream& out);

}  // namespace hyperlap
