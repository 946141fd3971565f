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

#include <cstddef>
#include <vector>

#include "hyperlap/discretize.hpp"
#include "hyperlap/matrix.hpp"

namespace hyperlap {

/// Real eigenvalues of a discretized operator, ascending.
struct Spectrum {
    std::vector<double> values;
    double max_imag = 0.0;  // largest imaginary part projected away
    long iterations = 0;    // QR sweeps, or bisection steps for the tridiagonal path
};

struct DenseEigenOptions {
    bool balance = true;
    /// Complex pairs with |Im| <= reality_tol * (1 + |Re|) are projected to Re.
    double reality_tol = 1e-8;
    /// Total QR sweep budget is sweeps_per_order * order.
    long sweeps_per_order = 30;
};

/// All eigenvalues of a real square matrix by balancing, Householder reduction
/// to Hessenberg form and Francis double-shift QR. No eigenvectors.
///
/// Throws ConvergenceError when the sweep budget runs out and RealityError
/// when an eigenvalue is genuinely complex.
Spectrum dense_eigenvalues(Matrix a, const DenseEigenOptions& options = {});

/// Number of eigenvalues of op strictly below lam (Sturm sign count).
std::size_t sturm_count(const TridiagOperator& op, double lam);

/// Eigenvalues of op in (lo, hi] by bisection, each to width
/// <= 1e-12 * max(1, |nu|). Infinite bounds are allowed.
Spectrum tridiag_eigenvalues(const TridiagOperator& op, double lo, double hi);

namespace detail {
/// Diagonal similarity scaling by powers of two (row/column norm balancing).
void balance(Matrix& a);
/// Orthogonal similarity reduction to upper Hessenberg form, in place.
void reduce_to_hessenberg(Matrix& a);
}  // namespace detail

}  // namespace hyperlap
