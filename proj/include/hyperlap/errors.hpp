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

#include <stdexcept>
#include <string>

namespace hyperlap {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// QR iteration hit its sweep cap; carries the size of the block left unreduced.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::size_t unconverged_block)
        : std::runtime_error(what), unconverged_block_(unconverged_block) {}
    std::size_t unconverged_block() const noexcept { return unconverged_block_; }

private:
    std::size_t unconverged_block_;
};

/// An eigenvalue came back with an imaginary part above the reality tolerance.
class RealityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two resolutions (or the finite-difference oracle) disagree beyond tolerance.
class CertificationError : public std::runtime_error {
public:
    CertificationError(const std::string& what, std::size_t first_bad_index)
        : std::runtime_error(what), first_bad_index_(first_bad_index) {}
    std::size_t first_bad_index() const noexcept { return first_bad_index_; }

private:
    std::size_t first_bad_index_;
};

/// A query reaches past the range in which an eigenvalue table is complete.
class IncompleteTableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quadrature failed to settle under node doubling.
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hyperlap
