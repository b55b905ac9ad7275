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

#include "quditsim/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quditsim::reference {

namespace {

// Permutation matrix sending digit position src to digit position dst for
// every basis state: row index has digits rearranged by `new_of_old`.
DenseOperator wire_permutation(const std::vector<int>& new_of_old, int d) {
    int n = static_cast<int>(new_of_old.size());
    DenseOperator out(d, n);
    std::size_t dim = out.dim();
    for (std::size_t col = 0; col < dim; ++col) {
        // digits of col, old order
        std::vector<int> digits(static_cast<std::size_t>(n));
        std::size_t rem = col;
        for (int w = n - 1; w >= 0; --w) {
            digits[static_cast<std::size_t>(w)] = static_cast<int>(rem % static_cast<std::size_t>(d));
            rem /= static_cast<std::size_t>(d);
        }
        std::size_t row = 0;
        std::vector<int> moved(static_cast<std::size_t>(n));
        for (int w = 0; w < n; ++w) {
            moved[static_cast<std::size_t>(new_of_old[static_cast<std::size_t>(w)])] =
                digits[static_cast<std::size_t>(w)];
        }
        for (int w = 0; w < n; ++w) {
            row = row * static_cast<std::size_t>(d) +
                  static_cast<std::size_t>(moved[static_cast<std::size_t>(w)]);
        }
        out.at(row, col) = Complex{1.0, 0.0};
    }
    return out;
}

}  // namespace

DenseOperator embed_via_kron(const DenseOperator& op, const std::vector<int>& wires, int n_wires) {
    if (static_cast<int>(wires.size()) != op.arity) {
        throw std::invalid_argument("embed_via_kron: wire count must equal arity");
    }
    // new_of_old: target wires move to the front in their given order, the
    // rest keep their relative order behind them.
    std::vector<int> new_of_old(static_cast<std::size_t>(n_wires), -1);
    for (std::size_t t = 0; t < wires.size(); ++t) {
        new_of_old[static_cast<std::size_t>(wires[t])] = static_cast<int>(t);
    }
    int next = static_cast<int>(wires.size());
    for (int w = 0; w < n_wires; ++w) {
        if (new_of_old[static_cast<std::size_t>(w)] == -1) {
            new_of_old[static_cast<std::size_t>(w)] = next++;
        }
    }
    DenseOperator permute = wire_permutation(new_of_old, op.d);
    DenseOperator padded = op;
    if (n_wires > op.arity) {
        padded = op.kron(DenseOperator::identity(op.d, n_wires - op.arity));
    }
    return permute.dagger() * padded * permute;
}

StateVector apply_dense(const DenseOperator& full, const StateVector& state) {
    if (full.dim() != state.amps.size()) {
        throw std::invalid_argument("apply_dense: dimension mismatch");
    }
    StateVector out = state;
    std::size_t n = full.dim();
    for (std::size_t r = 0; r < n; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < n; ++c) {
            acc += full.entries[r * n + c] * state.amps[c];
        }
        out.amps[r] = acc;
    }
    return out;
}

std::vector<MeasurementOutcome> projector_measure(const DiagonalUnitarySpec& u,
                                                  const StateVector& state) {
    if (u.eigenbasis.dim() != state.amps.size()) {
        throw std::invalid_argument("projector_measure: dimension mismatch");
    }
    std::vector<MeasurementOutcome> outcomes(static_cast<std::size_t>(u.d_outcomes));
    for (int j = 0; j < u.d_outcomes; ++j) {
        MeasurementOutcome& entry = outcomes[static_cast<std::size_t>(j)];
        entry.outcome = j;
        StateVector projected = apply_dense(u.class_projector(j), state);
        double weight = 0.0;
        for (const Complex& amp : projected.amps) {
            weight += std::norm(amp);
        }
        entry.probability = weight;
        entry.post_state = projected;
        if (weight > 0.0) {
            double scale = 1.0 / std::sqrt(weight);
            for (Complex& amp : entry.post_state.amps) {
                amp *= scale;
            }
        }
    }
    return outcomes;
}

std::optional<int> eigenphase_of(const DenseOperator& u, const StateVector& state, int modulus,
                                 double tol) {
    StateVector mapped = apply_dense(u, state);
    Complex overlap = inner_product(state, mapped);
    if (std::abs(std::abs(overlap) - 1.0) > tol) {
        return std::nullopt;
    }
    double angle = std::arg(overlap);
    double turns = angle / (2.0 * std::numbers::pi) * static_cast<double>(modulus);
    long long nearest = std::llround(turns);
    if (std::abs(turns - static_cast<double>(nearest)) > tol * modulus) {
        return std::nullopt;
    }
    return static_cast<int>(((nearest % modulus) + modulus) % modulus);
}

double total_variation_distance(const std::vector<MeasurementOutcome>& a,
                                const std::vector<MeasurementOutcome>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("total_variation_distance: size mismatch");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += std::abs(a[i].probability - b[i].probability);
    }
    return 0.5 * total;
}

}  // namespace quditsim::reference
