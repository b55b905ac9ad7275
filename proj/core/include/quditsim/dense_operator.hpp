// Copyright 2026 The quditsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace quditsim {

using Complex = std::complex<double>;

/// Default tolerance for unitarity and other exact-algebra checks.
inline constexpr double kUnitaryTol = 1e-12;

/// Default tolerance for end-to-end state comparisons.
inline constexpr double kStateTol = 1e-10;

/// d'th primitive root of unity raised to `power`, i.e. exp(2*pi*i*power/d).
Complex root_of_unity(int d, long long power);

/// Dense operator on `arity` wires of dimension `d` each, stored row-major.
///
/// The first wire in any wire list corresponds to the most significant
/// base-d digit of the operator's own row/column index.
struct DenseOperator {
    int d = 2;
    int arity = 1;
    std::vector<Complex> entries;  // dim() x dim(), row-major

    DenseOperator() = default;
    DenseOperator(int d, int arity);

    std::size_t dim() const;

    Complex& at(std::size_t row, std::size_t col);
    const Complex& at(std::size_t row, std::size_t col) const;

    static DenseOperator identity(int d, int arity);

    DenseOperator dagger() const;

    /// Matrix power by repeated multiplication. Requires exponent >= 0.
    DenseOperator pow(int exponent) const;

    /// Kronecker product; `*this` supplies the most significant digits.
    DenseOperator kron(const DenseOperator& rhs) const;

    /// max_ij |A_ij - B_ij|
    double max_abs_diff(const DenseOperator& rhs) const;

    /// max-entry norm of (U U^dag - I).
    double unitarity_error() const;

    bool is_unitary(double tol = kUnitaryTol) const;
};

DenseOperator operator*(const DenseOperator& lhs, const DenseOperator& rhs);

}  // namespace quditsim
