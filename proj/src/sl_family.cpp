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

#include "hyperlap/sl_family.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "hyperlap/errors.hpp"
#include "hyperlap/io.hpp"

namespace hyperlap {
namespace {

bool agree(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max(1.0, std::fabs(a));
}

Spectrum full_spectrum(const SLProblem& p, int n) {
    return dense_eigenvalues(assemble_cheb(p.interval, p.pot, n).matrix);
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned spawn = std::min<unsigned>(threads, static_cast<unsigned>(count));
    if (spawn <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    }
    // lowest failing index wins so the reported error does not depend on scheduling
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

std::vector<double> EigenTable::sorted_values() const {
    std::vector<double> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(e.nu);
    std::sort(v.begin(), v.end());
    return v;
}

Spectrum solve_problem(const SLProblem& p, int n, double cutoff) {
    if (!(cutoff > 0.0)) throw DomainError("cutoff must be positive");
    Spectrum s = full_spectrum(p, n);
    const auto below = std::upper_bound(s.values.begin(), s.values.end(), cutoff);
    const auto kept = static_cast<std::size_t>(below - s.values.begin());
    // Only about the lower 2/pi of a collocation spectrum is resolved; stay in the lower half.
    if (kept >= s.values.size() / 2) {
        throw CertificationError("cutoff " + std::to_string(cutoff) + " reaches the unresolved part of the spectrum at n = " +
                                     std::to_string(n),
                                 kept);
    }
    s.values.erase(below, s.values.end());
    return s;
}

Spectrum solve_certified(const SLProblem& p, double cutoff, const CertifyOptions& options) {
    if (!(options.tol >= 1e-13)) throw DomainError("certification tolerance must be >= 1e-13");
    if (!(cutoff > 0.0)) throw DomainError("cutoff must be positive");
    Spectrum coarse = full_spectrum(p, options.n);
    const Spectrum fine = full_spectrum(p, 2 * options.n);

    const auto count_below = [cutoff](const std::vector<double>& v) {
        return static_cast<std::size_t>(std::upper_bound(v.begin(), v.end(), cutoff) - v.begin());
    };
    const std::size_t kept = count_below(coarse.values);
    if (kept >= coarse.values.size() / 2) {
        throw CertificationError("cutoff reaches the unresolved part of the spectrum", kept);
    }
    // Compare one index past the cutoff so the first discarded value is certified too.
    const std::size_t checked = std::max(kept, count_below(fine.values)) + 1;
    for (std::size_t i = 0; i < checked; ++i) {
        if (!agree(coarse.values[i], fine.values[i], options.tol)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "eigenvalue " << i + 1 << " not converged (ell = " << p.pot.ell << "): " << coarse.values[i]
                << " at n = " << options.n << " vs " << fine.values[i] << " at n = " << 2 * options.n;
            throw CertificationError(msg.str(), i);
        }
    }

    // The 3-point stencil is off by about nu^2 h^2 / 12; allow four times that.
    const TridiagOperator fd = assemble_fd(p.interval, p.pot, options.fd_points);
    const double band = 4.0 * cutoff * cutoff * fd.h * fd.h / 12.0 + 1e-9 * cutoff;
    const std::size_t fd_low = sturm_count(fd, cutoff - band);
    const std::size_t fd_high = sturm_count(fd, cutoff + band);
    if (kept < fd_low || kept > fd_high) {
        throw CertificationError("collocation count " + std::to_string(kept) + " below " + std::to_string(cutoff) +
                                     " disagrees with finite-difference count in [" + std::to_string(fd_low) + ", " +
                                     std::to_string(fd_high) + "] (ell = " + std::to_string(p.pot.ell) + ")",
                                 std::min(kept, fd_low));
    }

    coarse.values.resize(kept);
    return coarse;
}

int find_ell_max(const Interval& interval, double cutoff, int n, double transverse_scale) {
    interval.validate();
    if (!(cutoff > 0.0)) throw DomainError("cutoff must be positive");
    if (!(transverse_scale > 0.0)) throw DomainError("transverse scale must be positive");
    std::map<int, double> lowest;
    auto first_eigenvalue = [&](int ell) {
        if (auto it = lowest.find(ell); it != lowest.end()) return it->second;
        PotentialSpec pot;
        pot.ell = ell;
        pot.transverse_scale = transverse_scale;
        const double v = full_spectrum({interval, pot}, n).values.front();
        lowest.emplace(ell, v);
        return v;
    };
    if (first_eigenvalue(1) > cutoff) return 1;
    int lo = 1;
    int hi = 2;
    while (first_eigenvalue(hi) <= cutoff) {
        lo = hi;
        if (hi > (1 << 20)) throw DomainError("no transverse mode exceeds the cutoff");
        hi *= 2;
    }
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (first_eigenvalue(mid) <= cutoff) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

EigenTable sweep(const Interval& interval, double cutoff, const SweepOptions& options) {
    interval.validate();
    if (!(cutoff > 0.0)) throw DomainError("cutoff must be positive");
    if (!(options.margin >= 0.0)) throw DomainError("margin must be >= 0");
    const double solve_to = cutoff * (1.0 + options.margin);

    EigenTable table;
    table.cutoff = cutoff;
    table.margin = options.margin;
    table.resolution = options.certify.n;
    table.tolerance = options.certify.tol;
    table.interval = interval;
    table.transverse_scale = options.transverse_scale;

    if (options.ell_max) {
        table.ell_max = *options.ell_max;
        if (table.ell_max < 1) throw DomainError("ell_max must be >= 1");
        PotentialSpec pot;
        pot.ell = table.ell_max;
        pot.transverse_scale = options.transverse_scale;
        const double first = full_spectrum({interval, pot}, options.certify.n).values.front();
        if (first <= cutoff) {
            throw CertificationError("ell_max = " + std::to_string(table.ell_max) + " truncates the table: its lowest " +
                                         "eigenvalue " + std::to_string(first) + " is below the cutoff",
                                     0);
        }
    } else {
        table.ell_max = find_ell_max(interval, cutoff, options.certify.n, options.transverse_scale);
    }

    const auto families = static_cast<std::size_t>(table.ell_max - 1);
    std::vector<std::vector<double>> solved(families);
    parallel_for(families, resolve_threads(options.threads), [&](std::size_t i) {
        PotentialSpec pot;
        pot.ell = static_cast<int>(i) + 1;
        pot.transverse_scale = options.transverse_scale;
        solved[i] = solve_certified({interval, pot}, solve_to, options.certify).values;
    });

    for (std::size_t i = 0; i < families; ++i) {
        for (std::size_t k = 0; k < solved[i].size(); ++k) {
            table.entries.push_back({static_cast<int>(i) + 1, static_cast<int>(k) + 1, solved[i][k]});
        }
    }
    check_monotonicity(table);
    return table;
}

void check_monotonicity(const EigenTable& table) {
    std::map<int, double> previous_by_k;  // k -> nu at the previous ell
    int current_ell = -1;
    double previous_nu = -std::numeric_limits<double>::infinity();
    std::map<int, double> current_by_k;
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        const auto& e = table.entries[i];
        if (e.ell != current_ell) {
            previous_by_k = std::move(current_by_k);
            current_by_k.clear();
            current_ell = e.ell;
            previous_nu = -std::numeric_limits<double>::infinity();
        }
        if (!(e.nu > previous_nu)) {
            throw CertificationError("eigenvalues not strictly increasing in k at ell = " + std::to_string(e.ell), i);
        }
        if (auto it = previous_by_k.find(e.k); it != previous_by_k.end() && !(e.nu > it->second)) {
            throw CertificationError("eigenvalue k = " + std::to_string(e.k) + " not increasing in ell at ell = " +
                                         std::to_string(e.ell),
                                     i);
        }
        current_by_k[e.k] = e.nu;
        previous_nu = e.nu;
    }
}

double to_lambda(double nu, int dim) noexcept {
    const double d = dim - 1.0;
    return 0.25 * d * d + nu;
}

double to_nu(double lambda, int dim) noexcept {
    const double d = dim - 1.0;
    return lambda - 0.25 * d * d;
}

void write_csv(const EigenTable& table, std::ostream& out) {
    out << "ell,k,nu\n";
    for (const auto& e : table.entries) out << e.ell << ',' << e.k << ',' << format_real(e.nu) << '\n';
}

std::vector<EigenEntry> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "ell,k,nu") throw DomainError("eigen table CSV must start with 'ell,k,nu'");
    std::vector<EigenEntry> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        EigenEntry e{};
        char c1 = 0;
        char c2 = 0;
        if (!(ss >> e.ell >> c1 >> e.k >> c2 >> e.nu) || c1 != ',' || c2 != ',') {
            throw DomainError("malformed eigen table row: " + line);
        }
        rows.push_back(e);
    }
    return rows;
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYPERLAP_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace hyperlap
