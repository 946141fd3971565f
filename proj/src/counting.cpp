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

#include "hyperlap/counting.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include <json.hpp>

#include "hyperlap/errors.hpp"
#include "hyperlap/io.hpp"

namespace hyperlap {
namespace {

void require_complete(const CountingFunction& cf, double lam) {
    if (lam > cf.complete_up_to) {
        throw IncompleteTableError("eigenvalue table is complete only up to " + format_real(cf.complete_up_to) +
                                   ", requested " + format_real(lam));
    }
}

double power_law(double lam, double exponent) { return lam <= 0.0 ? 0.0 : std::pow(lam, exponent); }

std::vector<double> jump_points(const CountingFunction& cf, double lam_max) {
    std::vector<double> jumps;
    for (double nu : cf.sorted_nus) {
        if (nu > lam_max) break;
        if (nu > 0.0 && (jumps.empty() || jumps.back() != nu)) jumps.push_back(nu);
    }
    return jumps;
}

}  // namespace

CountingFunction CountingFunction::from_table(const EigenTable& table, double volume, int dim) {
    if (!(volume > 0.0)) throw DomainError("domain volume must be positive");
    CountingFunction cf;
    cf.sorted_nus = table.sorted_values();
    cf.domain_volume = volume;
    cf.dim = dim;
    cf.complete_up_to = table.cutoff;
    return cf;
}

std::size_t count(const CountingFunction& cf, double lam) {
    return static_cast<std::size_t>(std::lower_bound(cf.sorted_nus.begin(), cf.sorted_nus.end(), lam) -
                                    cf.sorted_nus.begin());
}

std::size_t count_at_most(const CountingFunction& cf, double lam) {
    return static_cast<std::size_t>(std::upper_bound(cf.sorted_nus.begin(), cf.sorted_nus.end(), lam) -
                                    cf.sorted_nus.begin());
}

double riesz_mean(const CountingFunction& cf, double lam, double gamma) {
    if (!(gamma >= 0.0)) throw DomainError("Riesz mean order must be >= 0");
    require_complete(cf, lam);
    if (gamma == 0.0) return static_cast<double>(count(cf, lam));
    double sum = 0.0;
    for (double nu : cf.sorted_nus) {
        if (nu >= lam) break;
        sum += std::pow(lam - nu, gamma);
    }
    return sum;
}

double polya_rhs(double lam, int dim, double volume) {
    return constants::lt_classical({0.0, dim}).value * power_law(lam, 0.5 * dim) * volume;
}

double counting_bound_rhs(double lam, int dim, double volume, double r11) {
    return constants::polya_constant(dim, r11).value * power_law(lam, 0.5 * dim) * volume;
}

double product_bound_rhs(double lam, int dim, double volume) {
    return constants::product_counting_constant(dim).value * power_law(lam, 0.5 * dim) * volume;
}

double product_riesz_rhs(double lam, double gamma, int dim, double volume) {
    if (!(gamma >= 0.5 && gamma < 1.0)) throw DomainError("product Riesz bound holds for 1/2 <= gamma < 1");
    return 2.0 * constants::lt_classical({gamma, dim}).value * power_law(lam, 0.5 * dim + gamma) * volume;
}

std::string_view to_string(BoundKind kind) noexcept {
    switch (kind) {
        case BoundKind::polya: return "polya";
        case BoundKind::counting: return "counting";
        case BoundKind::product_counting: return "product_counting";
        case BoundKind::product_riesz: return "product_riesz";
    }
    return "unknown";
}

BoundKind parse_bound_kind(std::string_view name) {
    for (auto k : {BoundKind::polya, BoundKind::counting, BoundKind::product_counting, BoundKind::product_riesz}) {
        if (to_string(k) == name) return k;
    }
    throw DomainError("unknown bound kind '" + std::string(name) + "'");
}

double bound_value(const BoundSpec& bound, double lam, int dim, double volume) {
    double v = 0.0;
    switch (bound.kind) {
        case BoundKind::polya: v = polya_rhs(lam, dim, volume); break;
        case BoundKind::counting: v = counting_bound_rhs(lam, dim, volume, bound.r11); break;
        case BoundKind::product_counting: v = product_bound_rhs(lam, dim, volume); break;
        case BoundKind::product_riesz: v = product_riesz_rhs(lam, bound.gamma, dim, volume); break;
    }
    return bound.scale * v;
}

BoundReport verify_bound(const CountingFunction& cf, const BoundSpec& bound, double lam_max, int grid) {
    if (!(lam_max > 0.0)) throw DomainError("lam_max must be positive");
    if (grid < 1) throw DomainError("grid must have at least one point");
    require_complete(cf, lam_max);
    const bool riesz = bound.kind == BoundKind::product_riesz;

    struct Sample {
        double lam;
        double lhs;
    };
    std::vector<Sample> samples;
    samples.reserve(static_cast<std::size_t>(grid) + cf.sorted_nus.size());
    for (int i = 1; i <= grid; ++i) {
        const double lam = lam_max * i / grid;
        samples.push_back({lam, riesz ? riesz_mean(cf, lam, bound.gamma) : static_cast<double>(count(cf, lam))});
    }
    for (double nu : jump_points(cf, lam_max)) {
        samples.push_back({nu, riesz ? riesz_mean(cf, nu, bound.gamma) : static_cast<double>(count_at_most(cf, nu))});
    }
    std::stable_sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) { return a.lam < b.lam; });

    BoundReport report;
    report.bound = bound;
    report.lam_max = lam_max;
    report.min_margin = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
        const double b = bound_value(bound, s.lam, cf.dim, cf.domain_volume);
        report.lambda_grid.push_back(s.lam);
        report.lhs_values.push_back(s.lhs);
        report.bound_values.push_back(b);
        if (b - s.lhs < report.min_margin) {
            report.min_margin = b - s.lhs;
            report.argmin_lambda = s.lam;
        }
    }
    report.violated = report.min_margin < 0.0;
    return report;
}

void write_json(const BoundReport& report, std::ostream& out) {
    nlohmann::ordered_json j;
    j["bound_kind"] = to_string(report.bound.kind);
    if (report.bound.kind == BoundKind::product_riesz) j["gamma"] = report.bound.gamma;
    j["lam_max"] = report.lam_max;
    j["min_margin"] = report.min_margin;
    j["violated"] = report.violated;
    j["argmin_lambda"] = report.argmin_lambda;
    out << j.dump(2) << '\n';
}

std::vector<Figure1Row> figure1_data(int d_min, int d_max, double r11) {
    if (d_min < 2 || d_max < d_min) throw DomainError("figure 1 needs 2 <= d_min <= d_max");
    std::vector<Figure1Row> rows;
    for (int d = d_min; d <= d_max; ++d) rows.push_back({d, constants::constant_ratio(d, r11)});
    return rows;
}

void write_figure1_csv(const std::vector<Figure1Row>& rows, std::ostream& out) {
    out << "d,ratio\n";
    for (const auto& r : rows) out << r.dim << ',' << format_real(r.ratio) << '\n';
}

std::vector<Figure2Row> figure2_data(const CountingFunction& cf, double lam_max, int grid) {
    if (!(lam_max > 0.0)) throw DomainError("lam_max must be positive");
    if (grid < 1) throw DomainError("grid must have at least one point");
    require_complete(cf, lam_max);
    std::vector<Figure2Row> rows;
    rows.push_back({0.0, 0, 0.0});
    const auto jumps = jump_points(cf, lam_max);
    auto jump = jumps.begin();
    for (int i = 1; i <= grid; ++i) {
        const double lam = lam_max * i / grid;
        for (; jump != jumps.end() && *jump <= lam; ++jump) {
            const double b = polya_rhs(*jump, cf.dim, cf.domain_volume);
            rows.push_back({*jump, count(cf, *jump), b});
            rows.push_back({*jump, count_at_most(cf, *jump), b});
        }
        rows.push_back({lam, count(cf, lam), polya_rhs(lam, cf.dim, cf.domain_volume)});
    }
    return rows;
}

void write_figure2_csv(const std::vector<Figure2Row>& rows, std::ostream& out) {
    out << "lambda,count,bound\n";
    for (const auto& r : rows) out << format_real(r.lambda) << ',' << r.count << ',' << format_real(r.bound) << '\n';
}

}  // namespace hyperlap
