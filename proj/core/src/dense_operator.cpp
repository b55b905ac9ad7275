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

#include "quditsim/dense_operator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quditsim {

Complex root_of_unity(int d, long long power) {
    if (d < 2) {
        throw std::invalid_argument("root_of_unity: d must be >= 2");
    }
    long long r = power % d;
    if (r < 0) {
        r += d;
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
    return Complex{std::cos(angle), std::sin(angle)};
}

static std::size_t pow_dim(int d, int arity) {
    std::size_t result = 1;
    for (int i = 0; i < arity; ++i) {
        result *= static_cast<std::size_t>(d);
    }
    return result;
}

DenseOperator::DenseOperator(int d_, int arity_) : d(d_), arity(arity_) {
    if (d < 2) {
        throw std::invalid_argument("DenseOperator: d must be >= 2");
    }
    if (arity < 1) {
        throw std::invalid_argument("DenseOperator: arity must be >= 1");
    }
    std::size_t n = pow_dim(d, arity);
    entries.assign(n * n, Complex{0.0, 0.0});
}

std::size_t DenseOperator::dim() const {
    return pow_dim(d, arity);
}

Complex& DenseOperator::at(std::size_t row, std::size_t col) {
    return entries[row * dim() + col];
}

const Complex& DenseOperator::at(std::size_t row, std::size_t col) const {
    return entries[row * dim() + col];
}

DenseOperator DenseOperator::identity(int d, int arity) {
    DenseOperator op(d, arity);
    std::size_t n = op.dim();
    for (size_t i = 0; i < n; ++i) {
        op.entries[i * n + i] = Complex{1.0, 0.0};
    }
    return op;
}

DenseOperator DenseOperator::dagger() const {
    DenseOperator out(d, arity);
    std::size_t n = dim();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out.entries[c * n + r] = std::conj(entries[r * n + c]);
        }
    }
    return out;
}

DenseOperator DenseOperator::pow(int exponent) const {
    if (exponent < 0) {
        throw std::invalid_argument("DenseOperator::pow: exponent must be >= 0");
    }
    DenseOperator result = identity(d, arity);
    for (int i = 0; i < exponent; ++i) {
        result = result * *this;
    }
    return result;
}

DenseOperator DenseOperator::kron(const DenseOperator& rhs) const {
    if (rhs.d != d) {
        throw std::invalid_argument("DenseOperator::kron: mismatched wire dimension");
    }
    DenseOperator out(d, arity + rhs.arity);
    std::size_t nl = dim();
    std::size_t nr = rhs.dim();
    for (std::size_t rl = 0; rl < nl; ++rl) {
        for (std::size_t cl = 0; cl < nl; ++cl) {
            Complex a = entries[rl * nl + cl];
            if (a == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t rr = 0; rr < nr; ++rr) {
                for (std::size_t cr = 0; cr < nr; ++cr) {
                    out.at(rl * nr + rr, cl * nr + cr) = a * rhs.entries[rr * nr + cr];
                }
            }
        }
    }
    return out;
}

double DenseOperator::max_abs_diff(const DenseOperator& rhs) const {
    if (rhs.d != d || rhs.arity != arity) {
        throw std::invalid_argument("DenseOperator::max_abs_diff: shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        worst = std::max(worst, std::abs(entries[i] - rhs.entries[i]));
    }
    return worst;
}

double DenseOperator::unitarity_error() const {
    DenseOperator product = *this * dagger();
    return product.max_abs_diff(identity(d, arity));
}

bool DenseOperator::is_unitary(double tol) const {
    return unitarity_error() <= tol;
}

DenseOperator operator*(const DenseOperator& lhs, const DenseOperator& rhs) {
    if (lhs.d != rhs.d || lhs.arity != rhs.arity) {
        throw std::invalid_argument("DenseOperator::operator*: shape mismatch");
    }
    std::size_t n = lhs.dim();
    DenseOperator out(lhs.d, lhs.arity);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            Complex a = lhs.entries[r * n + k];
            if (a == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out.entries[r * n + c] += a * rhs.entries[k * n + c];
            }
        }
    }
    return out;
}

}  // namespace quditsim
