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

#include <string>
#include <vector>

#include "quditsim/gates.hpp"
#include "quditsim/state.hpp"

namespace quditsim {

struct CircuitStep {
    GateSpec gate;
    std::vector<int> wires;

    bool operator==(const CircuitStep& other) const = default;
};

/// An ordered gate list over `system_wires` qudits plus `ancilla_count`
/// ancillas appended after them (ancilla i is wire system_wires + i).
struct Circuit {
    int d = 2;
    int system_wires = 0;
    int ancilla_count = 0;
    std::vector<CircuitStep> steps;
    int two_qudit_gate_count = 0;

    int total_wires() const { return system_wires + ancilla_count; }

    void add(GateSpec gate, std::vector<int> wires);

    bool operator==(const Circuit& other) const = default;
};

/// Applies every step in order. The state must already carry the circuit's
/// ancillas (state.n_wires == circuit.total_wires()).
StateVector run_circuit(const StateVector& state, const Circuit& circuit);

/// Line-oriented text form:
///
///   CIRCUIT <d> <system_wires> <ancilla_count>
///   <GATE> <d> <wires...>            one step per line
///
/// ZD/XD lines carry the power between d and the wire: `ZD <d> <power> <w>`.
/// ControlledU steps have no text form and cause serialization to throw.
std::string circuit_to_text(const Circuit& circuit);
Circuit circuit_from_text(const std::string& text);

}  // namespace quditsim
