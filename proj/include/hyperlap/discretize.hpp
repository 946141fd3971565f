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

// Discretizations of -d^2/dt^2 + q(t) on (alpha, beta) with Dirichlet ends:
// Chebyshev collocation (dense, spectrally accurate) and the 3-point finite
// difference stencil (tridiagonal, used as an independent check).

#include <functional>
#include <memory>
#include <vector>

#include "hyperlap/matrix.hpp"

namespace hyperlap {

/// Interval in the logarithmic variable t = ln y.
struct Interval {
    double alpha = -1.0;
    double beta = 1.0;

    double length() const noexcept { return beta - alpha; }
    /// Throws DomainError unless both ends are finite and alpha < beta.
    void validate() const;
};

/// q(t) = kappa * e^{2t} + extra(t) with kappa = transverse_scale * ell^2.
///
/// For the transverse box (0, X) the Dirichlet modes give
/// transverse_scale = (pi / X)^2; X = pi gives kappa = ell^2.
struct PotentialSpec {
    int ell = 0;
    double transverse_scale = 1.0;
    std::function<double(double)> extra;

    double kappa() const noexcept;
    double operator()(double t) const;
};

struct ChebOperator {
    int n = 0;              // polynomial degree; n + 1 collocation nodes
    Matrix matrix;          // order n - 1
    std::vector<double> nodes;  // interior nodes in t, descending
};

struct TridiagOperator {
    std::vector<double> diag;
    std::vector<double> offdiag;
    double h = 0.0;

    std::size_t size() const noexcept { return diag.size(); }
};

/// Chebyshev-Gauss-Lobatto points cos(j pi / n), j = 0..n, descending.
std::vector<double> cheb_nodes(int n);

/// First-derivative collocation matrix on cheb_nodes(n), order n + 1.
Matrix cheb_diff_matrix(int n);

/// Interior block of D * D (rows and columns 1..n-1), cached per n.
std::shared_ptr<const Matrix> cheb_second_derivative_interior(int n);

/// -(2/L)^2 (D^2)_interior + diag(q(nodes)), n >= 4.
ChebOperator assemble_cheb(const Interval& interval, const PotentialSpec& pot, int n);

/// 3-point stencil on m >= 3 uniform interior points, h = L / (m + 1).
TridiagOperator assemble_fd(const Interval& interval, const PotentialSpec& pot, int m);

Matrix to_dense(const TridiagOperator& op);

}  // namespace hyperlap
