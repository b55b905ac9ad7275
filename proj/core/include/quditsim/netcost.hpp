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

#include "quditsim/state.hpp"

namespace quditsim {

enum class TopologyKind { Star, Linear };

/// A network of n players, one qudit each. Star: player 1 is the hub and
/// every other player sits on its own edge to the hub (edge j connects the
/// hub to leaf j+1). Linear: players 1..n on a chain (edge j connects
/// players j and j+1). Player positions are 1-based.
struct Topology {
    TopologyKind kind = TopologyKind::Linear;
    int n = 2;
    int alice = 1;
};

enum class ProtocolKind { NonDestructive, Baseline };

/// Cost of running one protocol on a topology. The unit of communication is
/// one qudit crossing one edge; qudits_moved always equals the sum of
/// per_edge_traversals (n-1 edges, indexed as in Topology).
struct CostReport {
    ProtocolKind protocol = ProtocolKind::NonDestructive;
    int qudits_moved = 0;
    int two_qudit_gates = 0;
    std::vector<int> per_player_gate_counts;  // n entries, player order
    std::vector<int> per_edge_traversals;     // n-1 entries, edge order
};

/// Ancilla-based non-destructive discrimination.
///
/// Gates: n csums for the phase circuit plus 2 per parity pair = 3n-2.
///
/// Star (pairs (hub, leaf_j), phase ancilla hub-anchored): the phase ancilla
/// makes a hub->leaf->hub round trip per leaf (2(n-1) crossings, measured at
/// the hub); the first parity ancilla is provisioned by the hub (out and
/// back, 2 crossings); each remaining leaf prepares its own parity ancilla
/// and forwards it one way to the hub (1 crossing each). Total 3n-2.
///
/// Linear (consecutive pairs): the phase ancilla walks the chain end to end
/// (n-1 crossings); each parity ancilla crosses its own edge once (n-1).
/// Total 2(n-1).
CostReport protocol_cost(const Topology& topology);

/// Destructive measure-and-recreate baseline: every player ships its qudit
/// to Alice and receives a replacement, and Alice applies all 2(n-1) gates
/// (n-1 disentangling csums, then n-1 to re-entangle).
///
/// Star: Alice must be the hub (rejected otherwise); 2(n-1) crossings.
/// Linear: player j's round trip costs 2|j - alice| crossings, totalling
/// alice(alice-1) + (n-alice)(n-alice+1); n(n-1) for an end position. For
/// odd n the central position gives (n^2-1)/2; for even n both central
/// positions give n^2/2.
CostReport baseline_cost(const Topology& topology);

/// The disentangling sequence Alice applies in the baseline: csum(k-1 -> k)
/// for k = n-1 down to 1, then H^dag on wire 0. Maps |Psi_{p,q}> to the
/// computational product state |p>|v_1-v_0>|v_2-v_1>...|v_{n-1}-v_{n-2}>.
/// Inputs outside the Bell basis simply yield a non-product output.
StateVector baseline_transform(const StateVector& state);

/// Exact inverse of baseline_transform (re-entangling sequence).
StateVector baseline_transform_inverse(const StateVector& state);

}  // namespace quditsim
