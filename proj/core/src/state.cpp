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

#include "quditsim/state.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

namespace quditsim {

namespace {

std::atomic<std::size_t> g_max_amplitudes{std::size_t{1} << 26};

// d^count, throwing when the result would exceed the configured cap.
std::size_t checked_dim(int d, int count) {
    std::size_t cap = g_max_amplitudes.load();
    std::size_t result = 1;
    for (int i = 0; i < count; ++i) {
        if (result > cap / static_cast<std::size_t>(d)) {
            throw std::length_error(
                "state dimension d^n_wires exceeds the configured amplitude cap");
        }
        result *= static_cast<std::size_t>(d);
    }
    if (result > cap) {
        throw std::length_error(
            "state dimension d^n_wires exceeds the configured amplitude cap");
    }
    return result;
}

void check_wire(const StateVector& state, int wire, const char* who) {
    if (wire < 0 || wire >= state.n_wires) {
        throw std::invalid_argument(std::string(who) + ": wire index out of range");
    }
}

}  // namespace

std::size_t max_amplitudes() {
    return g_max_amplitudes.load();
}

void set_max_amplitudes(std::size_t cap) {
    if (cap < 2) {
        throw std::invalid_argument("set_max_amplitudes: cap must be >= 2");
    }
    g_max_amplitudes.store(cap);
}

StateVector StateVector::basis_state(int d, int n_wires, const std::vector<int>& digits) {
    if (d < 2) {
        throw std::invalid_argument("basis_state: d must be >= 2");
    }
    if (n_wires < 1) {
        throw std::invalid_argument("basis_state: n_wires must be >= 1");
    }
    if (static_cast<int>(digits.size()) != n_wires) {
        throw std::invalid_argument("basis_state: digit count must equal n_wires");
    }
    StateVector state;
    state.d = d;
    state.n_wires = n_wires;
    state.amps.assign(checked_dim(d, n_wires), Complex{0.0, 0.0});
    state.amps[state.index_of(digits)] = Complex{1.0, 0.0};
    return state;
}

StateVector StateVector::zero_state(int d, int n_wires) {
    return basis_state(d, n_wires, std::vector<int>(static_cast<std::size_t>(n_wires), 0));
}

double StateVector::norm() const {
    double total = 0.0;
    for (const Complex& a : amps) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

std::size_t StateVector::index_of(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != n_wires) {
        throw std::invalid_argument("index_of: digit count must equal n_wires");
    }
    std::size_t index = 0;
    for (int w = 0; w < n_wires; ++w) {
        if (digits[w] < 0 || digits[w] >= d) {
            throw std::invalid_argument("index_of: digit out of range");
        }
        index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(digits[w]);
    }
    return index;
}

std::vector<int> StateVector::digits_of(std::size_t index) const {
    std::vector<int> digits(static_cast<std::size_t>(n_wires), 0);
    for (int w = n_wires - 1; w >= 0; --w) {
        digits[w] = static_cast<int>(index % static_cast<std::size_t>(d));
        index /= static_cast<std::size_t>(d);
    }
    return digits;
}

StateVector apply_embedded(const StateVector& state, const DenseOperator& op,
                           const std::vector<int>& wires) {
    if (op.d != state.d) {
        throw std::invalid_argument("apply_embedded: operator and state dimension differ");
    }
    if (static_cast<int>(wires.size()) != op.arity) {
        throw std::invalid_argument("apply_embedded: wire count must equal operator arity");
    }
    std::vector<bool> seen(static_cast<std::size_t>(state.n_wires), false);
    for (int w : wires) {
        check_wire(state, w, "apply_embedded");
        if (seen[static_cast<std::size_t>(w)]) {
            throw std::invalid_argument("apply_embedded: duplicate wire");
        }
        seen[static_cast<std::size_t>(w)] = true;
    }

    const std::size_t d = static_cast<std::size_t>(state.d);
    const int k = op.arity;
    const std::size_t dk = op.dim();

    // Stride of wire w in the flat index (wire 0 is most significant).
    std::vector<std::size_t> wire_stride(static_cast<std::size_t>(state.n_wires), 1);
    for (int w = state.n_wires - 2; w >= 0; --w) {
        wire_stride[static_cast<std::size_t>(w)] = wire_stride[static_cast<std::size_t>(w) + 1] * d;
    }

    // Offsets of the d^k local basis states relative to a base index whose
    // target digits are all zero. Local digit t (MSD first) lives on wires[t].
    std::vector<std::size_t> offset(dk, 0);
    for (std::size_t l = 0; l < dk; ++l) {
        std::size_t rem = l;
        for (int t = k - 1; t >= 0; --t) {
            offset[l] += (rem % d) * wire_stride[static_cast<std::size_t>(wires[static_cast<std::size_t>(t)])];
            rem /= d;
        }
    }

    // Strides of the untouched wires, used to expand a group counter into a
    // base index with zeros at all target positions.
    std::vector<std::size_t> rest_strides;
    rest_strides.reserve(static_cast<std::size_t>(state.n_wires - k));
    for (int w = 0; w < state.n_wires; ++w) {
        if (!seen[static_cast<std::size_t>(w)]) {
            rest_strides.push_back(wire_stride[static_cast<std::size_t>(w)]);
        }
    }

    std::size_t groups = 1;
    for (std::size_t i = 0; i < rest_strides.size(); ++i) {
        groups *= d;
    }

    StateVector out = state;
    std::vector<Complex> local(dk);
    for (std::size_t g = 0; g < groups; ++g) {
        std::size_t base = 0;
        std::size_t rem = g;
        for (auto it = rest_strides.rbegin(); it != rest_strides.rend(); ++it) {
            base += (rem % d) * *it;
            rem /= d;
        }
        for (std::size_t l = 0; l < dk; ++l) {
            local[l] = state.amps[base + offset[l]];
        }
        for (std::size_t r = 0; r < dk; ++r) {
            Complex acc{0.0, 0.0};
            const Complex* row = &op.entries[r * dk];
            for (std::size_t c = 0; c < dk; ++c) {
                acc += row[c] * local[c];
            }
            out.amps[base + offset[r]] = acc;
        }
    }
    return out;
}

std::vector<MeasurementOutcome> measure_wire(const StateVector& state, int wire) {
    check_wire(state, wire, "measure_wire");
    if (state.n_wires < 2) {
        throw std::invalid_argument("measure_wire: cannot remove the last wire");
    }

    const std::size_t d = static_cast<std::size_t>(state.d);
    std::size_t stride = 1;
    for (int w = state.n_wires - 1; w > wire; --w) {
        stride *= d;
    }

    std::vector<MeasurementOutcome> outcomes(d);
    const std::size_t reduced_size = state.amps.size() / d;
    for (std::size_t o = 0; o < d; ++o) {
        outcomes[o].outcome = static_cast<int>(o);
        outcomes[o].post_state.d = state.d;
        outcomes[o].post_state.n_wires = state.n_wires - 1;
        outcomes[o].post_state.amps.assign(reduced_size, Complex{0.0, 0.0});
    }

    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        std::size_t o = (i / stride) % d;
        std::size_t reduced = (i / (stride * d)) * stride + i % stride;
        outcomes[o].post_state.amps[reduced] = state.amps[i];
        outcomes[o].probability += std::norm(state.amps[i]);
    }

    for (std::size_t o = 0; o < d; ++o) {
        if (outcomes[o].probability > 0.0) {
            double scale = 1.0 / std::sqrt(outcomes[o].probability);
            for (Complex& a : outcomes[o].post_state.amps) {
                a *= scale;
            }
        }
    }
    return outcomes;
}

StateVector attach_zero_wire(const StateVector& state) {
    std::size_t cap = max_amplitudes();
    std::size_t d = static_cast<std::size_t>(state.d);
    if (state.amps.size() > cap / d) {
        throw std::length_error(
            "attach_zero_wire: state dimension would exceed the configured amplitude cap");
    }
    StateVector out;
    out.d = state.d;
    out.n_wires = state.n_wires + 1;
    out.amps.assign(state.amps.size() * d, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        out.amps[i * d] = state.amps[i];
    }
    return out;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.d != b.d || a.n_wires != b.n_wires) {
        throw std::invalid_argument("inner_product: shape mismatch");
    }
    Complex total{0.0, 0.0};
    for (std::size_t i = 0; i < a.amps.size(); ++i) {
        total += std::conj(a.amps[i]) * b.amps[i];
    }
    return total;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
    if (a.d != b.d || a.n_wires != b.n_wires) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) {
        worst = std::max(worst, std::abs(a.amps[i] - b.amps[i]));
    }
    return worst;
}

PhaseComparison equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                                         double tol) {
    Complex overlap = inner_product(a, b);
    double magnitude = std::abs(overlap);
    PhaseComparison result;
    result.match = magnitude >= 1.0 - tol;
    if (result.match) {
        result.phase = overlap / magnitude;
    }
    return result;
}

std::optional<std::vector<int>> as_product_digits(const StateVector& state, double tol) {
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        if (std::norm(state.amps[i]) >= 1.0 - tol) {
            return state.digits_of(i);
        }
    }
    return std::nullopt;
}

}  // namespace quditsim
