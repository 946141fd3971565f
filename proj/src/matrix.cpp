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

#include "hyperlap/matrix.hpp"

#include <stdexcept>

#include "hyperlap/simd/kernels.hpp"

namespace hyperlap {

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
    const auto& k = simd::active();
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* out = c.row(i).data();
        for (std::size_t p = 0; p < a.cols(); ++p) {
            const double s = a(i, p);
            if (s != 0.0) k.axpy(s, b.row(p).data(), out, b.cols());
        }
    }
    return c;
}

}  // namespace hyperlap
