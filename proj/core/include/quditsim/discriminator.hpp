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

#include <utility>
#include <vector>

#include "quditsim/bell.hpp"
#include "quditsim/circuit.hpp"

namespace quditsim {

/// Wire pairs whose relative parities are measured. Together with the phase
/// outcome they identify a Bell label iff the pair graph spans all wires.
struct ParityPairSet {
    std::vector<std::pair<int, int>> pairs;

    static ParityPairSet consecutive(int n);        // (0,1), (1,2), ..., (n-2,n-1)
    static ParityPairSet star(int hub, int n);      // (hub, j) for j != hub

    bool spans(int n) const;
};

/// Which Fourier gate prepares the phase-circuit ancilla. The default
/// (prepare with H, decode with H^dag) reads out p directly; the swapped
/// order reads out (d - p) mod d instead. Kept selectable for comparison.
enum class PhaseConvention {
    PrepareHDecodeHDag,
    PrepareHDagDecodeH,
};

struct DiscriminateOptions {
    PhaseConvention phase_convention = PhaseConvention::PrepareHDecodeHDag;
    /// Run the parity circuits before the phase circuit. Outcomes and the
    /// post-state are unchanged; the flag exists to let tests demonstrate it.
    bool parity_before_phase = false;
};

struct DiscriminationResult {
    int p = 0;
    std::vector<int> q;
    /// Raw ancilla readouts, phase first, then one per parity pair.
    std::vector<int> ancilla_outcomes;
    StateVector post_state;
    /// True when every ancilla measurement was a point mass (prob >= 1-1e-10).
    bool deterministic = false;
};

/// Phase circuit on n system wires plus one ancilla: prepare the ancilla
/// with H (ancilla wire n), one csum from the ancilla onto each system wire,
/// decode with H^dag. On |Psi_{p,q}> the ancilla reads p and the state is
/// untouched. Exactly n two-qudit gates.
Circuit build_phase_circuit(int d, int n,
                            PhaseConvention convention = PhaseConvention::PrepareHDecodeHDag);

/// Parity circuit for wire pair (a, b) on n system wires plus one ancilla:
/// csum-dagger from b onto the ancilla, csum from a onto the ancilla. A
/// fresh |0> ancilla ends in |v_b - v_a mod d>. Exactly 2 two-qudit gates.
Circuit build_parity_circuit(int d, int n, std::pair<int, int> pair);

/// Solves v_b - v_a = outcome (mod d) over the pair graph with v_0 = 0 and
/// returns q = (v_1, ..., v_{n-1}). Throws std::invalid_argument when the
/// pairs do not span all wires, and std::domain_error when a cycle is
/// inconsistent (which signals a non-Bell input).
std::vector<int> reconstruct_q(const std::vector<int>& outcomes, const ParityPairSet& pairs,
                               int d, int n);

/// Non-destructive Bell discrimination: runs the phase circuit, then one
/// parity circuit per pair, each on a fresh ancilla that is measured and
/// removed. On a Bell basis state every readout is deterministic, (p, q) is
/// recovered exactly and the post-state equals the input. On a superposition
/// the most probable branch is followed (ties toward the smaller outcome)
/// and the post-state is the projection onto the identified sector.
///
/// Default pairs: ParityPairSet::consecutive(n), using 3n-2 two-qudit gates.
DiscriminationResult discriminate(const StateVector& state, const ParityPairSet& pairs,
                                  const DiscriminateOptions& options = {});
DiscriminationResult discriminate(const StateVector& state);

/// Appends a |0> ancilla, runs `circuit`, measures the ancilla and keeps the
/// most probable branch. Returns the chosen outcome, its probability and the
/// post-state with the ancilla removed.
struct AncillaReadout {
    int outcome = 0;
    double probability = 0.0;
    StateVector post_state;
};
AncillaReadout run_ancilla_circuit(const StateVector& state, const Circuit& circuit);

}  // namespace quditsim
