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

#include "quditsim/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace quditsim {

void Circuit::add(GateSpec gate, std::vector<int> wires) {
    if (gate.d != d) {
        throw std::invalid_argument("Circuit::add: gate dimension must match the circuit");
    }
    if (static_cast<int>(wires.size()) != gate.arity()) {
        throw std::invalid_argument("Circuit::add: wire count must equal gate arity");
    }
    for (std::size_t i = 0; i < wires.size(); ++i) {
        if (wires[i] < 0 || wires[i] >= total_wires()) {
            throw std::invalid_argument("Circuit::add: wire out of range");
        }
        for (std::size_t j = i + 1; j < wires.size(); ++j) {
            if (wires[i] == wires[j]) {
                throw std::invalid_argument("Circuit::add: repeated wire");
            }
        }
    }
    if (gate.arity() == 2) {
        ++two_qudit_gate_count;
    }
    steps.push_back(CircuitStep{std::move(gate), std::move(wires)});
}

StateVector run_circuit(const StateVector& state, const Circuit& circuit) {
    if (state.d != circuit.d) {
        throw std::invalid_argument("run_circuit: state and circuit dimension differ");
    }
    if (state.n_wires != circuit.total_wires()) {
        throw std::invalid_argument("run_circuit: state must carry the circuit's ancillas");
    }
    StateVector current = state;
    for (const CircuitStep& step : circuit.steps) {
        current = apply_embedded(current, step.gate.realize(), step.wires);
    }
    return current;
}

std::string circuit_to_text(const Circuit& circuit) {
    std::ostringstream out;
    out << "CIRCUIT " << circuit.d << ' ' << circuit.system_wires << ' '
        << circuit.ancilla_count << '\n';
    for (const CircuitStep& step : circuit.steps) {
        if (step.gate.kind == GateKind::ControlledU) {
            throw std::invalid_argument("circuit_to_text: ControlledU has no text form");
        }
        out << gate_kind_name(step.gate.kind) << ' ' << step.gate.d;
        if (step.gate.kind == GateKind::Zd || step.gate.kind == GateKind::Xd) {
            out << ' ' << step.gate.power;
        }
        for (int w : step.wires) {
            out << ' ' << w;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

GateKind parse_kind(const std::string& token) {
    if (token == "ZD") return GateKind::Zd;
    if (token == "XD") return GateKind::Xd;
    if (token == "HD") return GateKind::Hd;
    if (token == "HDDAG") return GateKind::HdDag;
    if (token == "CSUM") return GateKind::CSum;
    if (token == "CSUMDAG") return GateKind::CSumDag;
    throw std::invalid_argument("circuit_from_text: unknown gate '" + token + "'");
}

}  // namespace

Circuit circuit_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Circuit circuit;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string head;
        fields >> head;
        if (!have_header) {
            if (head != "CIRCUIT") {
                throw std::invalid_argument("circuit_from_text: missing CIRCUIT header");
            }
            if (!(fields >> circuit.d >> circuit.system_wires >> circuit.ancilla_count)) {
                throw std::invalid_argument("circuit_from_text: malformed CIRCUIT header");
            }
            have_header = true;
            continue;
        }
        GateSpec gate;
        gate.kind = parse_kind(head);
        if (!(fields >> gate.d)) {
            throw std::invalid_argument("circuit_from_text: missing gate dimension");
        }
        if (gate.kind == GateKind::Zd || gate.kind == GateKind::Xd) {
            if (!(fields >> gate.power)) {
                throw std::invalid_argument("circuit_from_text: missing gate power");
            }
        }
        std::vector<int> wires;
        int w;
        while (fields >> w) {
            wires.push_back(w);
        }
        circuit.add(std::move(gate), std::move(wires));
    }
    if (!have_header) {
        throw std::invalid_argument("circuit_from_text: empty input");
    }
    return circuit;
}

}  // namespace quditsim
