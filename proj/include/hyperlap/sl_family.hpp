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

// The Sturm-Liouville family
//   -psi'' + kappa_ell e^{2t} psi = nu psi,  psi(alpha) = psi(beta) = 0,
// solved per transverse mode and collected into a certified eigenvalue table.

#include <iosfwd>
#include <optional>
#include <vector>

#include "hyperlap/discretize.hpp"
#include "hyperlap/eigen.hpp"

namespace hyperlap {

struct SLProblem {
    Interval interval;
    PotentialSpec pot;
};

struct CertifyOptions {
    int n = 400;              // base Chebyshev degree; the check runs at n and 2n
    double tol = 1e-10;       // relative agreement required between n and 2n
    int fd_points = 4000;     // finite-difference grid for the count cross-check
};

struct SweepOptions {
    CertifyOptions certify;
    double margin = 0.05;                 // solve to cutoff * (1 + margin)
    std::optional<int> ell_max;           // first excluded mode; found adaptively when empty
    double transverse_scale = 1.0;        // kappa_ell = transverse_scale * ell^2
    unsigned threads = 0;                 // 0: HYPERLAP_THREADS, then hardware concurrency
};

struct EigenEntry {
    int ell;
    int k;  // 1-based
    double nu;

    bool operator==(const EigenEntry&) const = default;
};

struct EigenTable {
    std::vector<EigenEntry> entries;  // sorted by (ell, k)
    double cutoff = 0.0;              // the table holds every nu below cutoff
    double margin = 0.0;              // entries up to cutoff * (1 + margin) are retained
    int ell_max = 1;                  // modes 1 .. ell_max - 1 were solved
    int resolution = 0;
    double tolerance = 0.0;
    Interval interval;
    double transverse_scale = 1.0;

    /// All nu values, ascending.
    std::vector<double> sorted_values() const;
};

/// Eigenvalues <= cutoff of the collocation problem at degree n, ascending.
/// Throws CertificationError if the cutoff reaches into the under-resolved
/// upper half of the discrete spectrum.
Spectrum solve_problem(const SLProblem& p, int n, double cutoff);

/// solve_problem at n and 2n, accepting only if every eigenvalue up to (and
/// including) the first one above cutoff agrees to tol relatively, and the
/// count below cutoff is consistent with a finite-difference Sturm count.
Spectrum solve_certified(const SLProblem& p, double cutoff, const CertifyOptions& options = {});

/// Smallest ell >= 1 whose lowest eigenvalue exceeds cutoff, by doubling and
/// bisection on the (monotone) lowest eigenvalue at degree n.
int find_ell_max(const Interval& interval, double cutoff, int n, double transverse_scale = 1.0);

/// Certified table of all nu below cutoff over ell = 1 .. ell_max - 1.
EigenTable sweep(const Interval& interval, double cutoff, const SweepOptions& options = {});

/// Strict monotonicity in k for fixed ell and in ell for fixed k.
/// Throws CertificationError on violation.
void check_monotonicity(const EigenTable& table);

/// lambda = (d-1)^2/4 + nu
double to_lambda(double nu, int dim) noexcept;
double to_nu(double lambda, int dim) noexcept;

/// CSV with header `ell,k,nu`, rows in (ell, k) order, 17 significant digits.
void write_csv(const EigenTable& table, std::ostream& out);
std::vector<EigenEntry> read_csv(std::istream& in);

/// Worker count for parallel sweeps: explicit request, else HYPERLAP_THREADS
/// (0 = auto), else hardware concurrency.
unsigned resolve_threads(unsigned requested);

}  // namespace hyperlap
