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

#include "quditsim/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace quditsim {

double RandomSource::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int RandomSource::uniform_int(int lo, int hi) {
    if (lo > hi) {
        throw std::invalid_argument("uniform_int: empty range");
    }
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    // Rejection sampling keeps the draw exactly uniform.
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t word;
    do {
        word = engine_();
    } while (word >= limit);
    return lo + static_cast<int>(word % span);
}

double RandomSource::normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 == 0.0) {
        u1 = uniform();
    }
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex RandomSource::complex_normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 == 0.0) {
        u1 = uniform();
    }
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    return Complex{radius * std::cos(angle), radius * std::sin(angle)};
}

RandomSource RandomSource::fork(std::uint64_t salt) {
    std::uint64_t seed = engine_() ^ (salt * 0x9e3779b97f4a7c15ULL);
    return RandomSource(seed);
}

StateVector random_state(int d, int n_wires, RandomSource& rng) {
    StateVector state = StateVector::zero_state(d, n_wires);
    double total = 0.0;
    for (Complex& amp : state.amps) {
        amp = rng.complex_normal();
        total += std::norm(amp);
    }
    double scale = 1.0 / std::sqrt(total);
    for (Complex& amp : state.amps) {
        amp *= scale;
    }
    return state;
}

DenseOperator random_unitary(int d, int arity, RandomSource& rng) {
    DenseOperator out(d, arity);
    std::size_t n = out.dim();
    // Columns: Gaussian vectors orthonormalized left to right (two passes of
    // projection for numerical stability).
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Complex> column(n);
        for (std::size_t r = 0; r < n; ++r) {
            column[r] = rng.complex_normal();
        }
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t prev = 0; prev < c; ++prev) {
                Complex overlap{0.0, 0.0};
                for (std::size_t r = 0; r < n; ++r) {
                    overlap += std::conj(out.entries[r * n + prev]) * column[r];
                }
                for (std::size_t r = 0; r < n; ++r) {
                    column[r] -= overlap * out.entries[r * n + prev];
                }
            }
        }
        double norm = 0.0;
        for (const Complex& v : column) {
            norm += std::norm(v);
        }
        double scale = 1.0 / std::sqrt(norm);
        for (std::size_t r = 0; r < n; ++r) {
            out.entries[r * n + c] = column[r] * scale;
        }
    }
    return out;
}

DiagonalUnitarySpec random_diagonal_spec(int d, RandomSource& rng) {
    DenseOperator eigenbasis = random_unitary(d, 1, rng);
    std::vector<int> phases(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
        phases[static_cast<std::size_t>(c)] = rng.uniform_int(0, d - 1);
    }
    return DiagonalUnitarySpec::create(d, std::move(eigenbasis), std::move(phases));
}

}  // namespace quditsim
