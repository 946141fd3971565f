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

#include <functional>
#include <vector>

namespace hyperlap {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule, cached; exact for polynomials of degree 2n - 1.
const GaussRule& gauss_legendre(int n);

struct Box {
    double x0, x1;
    double t0, t1;
};

/// Tensor-product n x n Gauss-Legendre approximation of the integral of f(x, t) over box.
double integrate_tensor(const std::function<double(double, double)>& f, const Box& box, int n);

struct QuadratureResult {
    double value;
    int nodes;  // per direction, at acceptance
};

/// Doubles the node count from n0 until two successive values agree to rel_tol.
/// Throws AccuracyError once n_max is exceeded.
QuadratureResult integrate_tensor_adaptive(const std::function<double(double, double)>& f, const Box& box,
                                           double rel_tol = 1e-10, int n0 = 16, int n_max = 2048);

}  // namespace hyperlap
