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

#include <vector>

#include "quditsim/bell.hpp"
#include "quditsim/circuit.hpp"
#include "quditsim/state.hpp"

namespace quditsim {

/// A unitary described by its eigenstructure: column c of `eigenbasis` is an
/// eigenvector with eigenvalue exp(2*pi*i*phase_index[c]/d_outcomes). Classes
/// may be degenerate (several columns sharing a phase index) and some classes
/// may be empty. Measuring such a unitary non-destructively yields the phase
/// index of the eigenspace the state collapses into.
struct DiagonalUnitarySpec {
    int d_outcomes = 2;            // phase modulus = ancilla dimension
    DenseOperator eigenbasis;      // unitary, one eigenvector per column
    std::vector<int> phase_index;  // per column, in [0, d_outcomes)

    /// Validates and constructs; throws std::invalid_argument otherwise.
    static DiagonalUnitarySpec create(int d_outcomes, DenseOperator eigenbasis,
                                      std::vector<int> phase_index);

    /// sum_c w^(phase_index[c]) |v_c><v_c|; unitary by construction.
    DenseOperator to_matrix() const;

    /// Projector onto eigenphase class j (zero matrix for empty classes).
    DenseOperator class_projector(int j) const;
};

/// Outcome relabeling f applied on top of a measured phase class, e.g. to
/// report physical eigenvalues instead of raw indices. Identity by default.
struct ObservableSpec {
    DiagonalUnitarySpec base;
    std::vector<double> relabel;  // one value per phase class; empty = identity

    double value(int phase_class) const;
};

/// Non-destructive measurement by outsourcing to one ancilla: attach |0>,
/// H on the ancilla, controlled-U from the ancilla, H^dag on the ancilla,
/// measure it. Outcome j carries the total weight of eigenphase class j and
/// its post-state is the normalized projection onto that eigenspace. The
/// spec must act on all of the state's wires and have d_outcomes == state.d.
std::vector<MeasurementOutcome> outsource_measure(const DiagonalUnitarySpec& u,
                                                  const StateVector& state);

/// Same measurement with U = u_parts[0] (x) u_parts[1] (x) ..., applied as
/// one controlled-u_m per wire from the shared ancilla (the controlled gates
/// commute, so any order gives the same result).
std::vector<MeasurementOutcome> outsource_measure_separable(
    const std::vector<DenseOperator>& u_parts, const StateVector& state);

/// Circuit form of the pairwise decomposition: one ControlledU(u_parts[m])
/// step on wires (ancilla, m). All parts must be single-wire unitaries of
/// the same dimension.
Circuit decompose_controlled_u(const std::vector<DenseOperator>& u_parts);

/// Two equivalent relative-parity circuits on wires (a=0, b=1, ancilla=2).
/// Both map sum_jk alpha_jk |j>|k>|0> to sum_jk alpha_jk |j>|k>|k-j mod d>.
///
/// The Hadamard form conjugates ancilla-controlled shifts with Fourier
/// gates (6 single-qudit gates + 2 csums); the reversed-control form drops
/// all Hadamards by letting the system wires control the ancilla (2 csums).
Circuit parity_circuit_hadamard_form(int d);
Circuit parity_circuit_reversed_form(int d);

struct ConjugationCheck {
    bool ok = false;
    double max_deviation = 0.0;
};

/// Verifies (Zdag (x) Z)^j == (H (x) H) (X (x) Xdag)^j (Hdag (x) Hdag),
/// the conjugation that turns the controlled-phase pair of the parity
/// observable into csum gates. Follows from X = H Z Hdag, which forces
/// H X Hdag = Zdag and H Xdag Hdag = Z.
ConjugationCheck zz_conjugation_identity_check(int d, int j);

enum class HadamardVariant {
    HTensorHDag,  // H on wire 0, H^dag on wire 1
    HDagTensorH,  // H^dag on wire 0, H on wire 1
};

struct ClosureEntry {
    BellIndex from;
    BellIndex to;
    Complex phase;  // bell(to) * phase == variant applied to bell(from)
};

/// How a Fourier pair permutes the d=2-wire Bell basis (up to global phase):
/// H (x) Hdag maps (p, q) to ((d-q) mod d, p); Hdag (x) H maps (p, q) to
/// (q, (d-p) mod d). Entries are found numerically by matching against every
/// label, in enumerate_bell_basis order, and always form a bijection.
std::vector<ClosureEntry> closure_map(int d, HadamardVariant variant);

}  // namespace quditsim
