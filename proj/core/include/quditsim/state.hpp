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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quditsim/dense_operator.hpp"

namespace quditsim {

/// Upper bound on the number of amplitudes a state may hold. Constructors
/// that would exceed the cap throw std::length_error. The default is 2^26.
std::size_t max_amplitudes();
void set_max_amplitudes(std::size_t cap);

/// Pure state of `n_wires` qudits, each of dimension `d`.
///
/// Amplitudes are indexed by the base-d expansion of the flat index with
/// wire 0 as the most significant digit: index(x_0,...,x_{m-1}) =
/// sum_w x_w * d^(m-1-w). Example: d=3, digits (1,2) -> index 5.
struct StateVector {
    int d = 2;
    int n_wires = 0;
    std::vector<Complex> amps;

    /// |digits[0], digits[1], ..., digits[n_wires-1]>
    static StateVector basis_state(int d, int n_wires, const std::vector<int>& digits);

    /// All-zero basis state |0...0>.
    static StateVector zero_state(int d, int n_wires);

    std::size_t size() const { return amps.size(); }
    double norm() const;

    /// Flat index of a digit string (wire 0 most significant).
    std::size_t index_of(const std::vector<int>& digits) const;

    /// Digit string of a flat index.
    std::vector<int> digits_of(std::size_t index) const;
};

/// Result of measuring one wire in the computational basis: one entry per
/// outcome with its Born probability and the renormalized post-state on the
/// remaining wires. Post-states of zero-probability outcomes are all-zero.
struct MeasurementOutcome {
    int outcome = 0;
    double probability = 0.0;
    StateVector post_state;
};

/// Applies `op` to the named wires, embedded in identity on the rest.
///
/// `wires[0]` corresponds to the most significant base-d digit of the
/// operator's own index space. Runs in O(d^n_wires * d^k) for a k-wire
/// operator via a stride gather/scatter kernel; the full d^n x d^n matrix is
/// never materialized. Deterministic: identical inputs give bit-identical
/// amplitudes.
StateVector apply_embedded(const StateVector& state, const DenseOperator& op,
                           const std::vector<int>& wires);

/// Full Born distribution for measuring `wire`, outcomes sorted ascending.
/// Probabilities sum to 1 (within fp error) for a normalized input. Each
/// post-state has the measured wire removed.
std::vector<MeasurementOutcome> measure_wire(const StateVector& state, int wire);

/// Appends a fresh |0> wire after the existing wires.
StateVector attach_zero_wire(const StateVector& state);

/// <a|b>
Complex inner_product(const StateVector& a, const StateVector& b);

/// max_i |a_i - b_i|
double max_abs_diff(const StateVector& a, const StateVector& b);

struct PhaseComparison {
    bool match = false;
    /// The c with |c| = 1 such that b ~= c * a; absent when match is false.
    std::optional<Complex> phase;
};

/// Whether two normalized states are equal up to a global phase.
PhaseComparison equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                                         double tol = kStateTol);

/// Digits of the single occupied basis index if `state` is a computational
/// basis state up to global phase (|amp|^2 >= 1 - tol on one index).
std::optional<std::vector<int>> as_product_digits(const StateVector& state,
                                                  double tol = kStateTol);

}  // namespace quditsim
