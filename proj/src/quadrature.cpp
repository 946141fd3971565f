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

#include "hyperlap/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "hyperlap/errors.hpp"

namespace hyperlap {
namespace {

GaussRule build_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        // recompute the derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw DomainError("Gauss-Legendre rule needs n >= 1");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussRule>(build_rule(n));
    return *slot;
}

double integrate_tensor(const std::function<double(double, double)>& f, const Box& box, int n) {
    const GaussRule& rule = gauss_legendre(n);
    const double hx = 0.5 * (box.x1 - box.x0);
    const double cx = 0.5 * (box.x1 + box.x0);
    const double ht = 0.5 * (box.t1 - box.t0);
    const double ct = 0.5 * (box.t1 + box.t0);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = cx + hx * rule.nodes[i];
        double inner = 0.0;
        for (int j = 0; j < n; ++j) inner += rule.weights[j] * f(x, ct + ht * rule.nodes[j]);
        sum += rule.weights[i] * inner;
    }
    return sum * hx * ht;
}

QuadratureResult integrate_tensor_adaptive(const std::function<double(double, double)>& f, const Box& box,
                                           double rel_tol, int n0, int n_max) {
    double previous = integrate_tensor(f, box, n0);
    for (int n = 2 * n0; n <= n_max; n *= 2) {
        const double current = integrate_tensor(f, box, n);
        if (std::fabs(current - previous) <= rel_tol * std::fabs(current)) return {current, n};
        if (current == 0.0 && previous == 0.0) return {0.0, n};
        previous = current;
    }
    throw AccuracyError("tensor Gauss-Legendre quadrature did not settle by n = " + std::to_string(n_max));
}

}  // namespace hyperlap
