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

#include "quditsim/outsourcing.hpp"

#include <stdexcept>
#include <utility>

namespace quditsim {

DiagonalUnitarySpec DiagonalUnitarySpec::create(int d_outcomes, DenseOperator eigenbasis,
                                                std::vector<int> phase_index) {
    if (d_outcomes < 2) {
        throw std::invalid_argument("DiagonalUnitarySpec: d_outcomes must be >= 2");
    }
    if (!eigenbasis.is_unitary()) {
        throw std::invalid_argument("DiagonalUnitarySpec: eigenbasis must be unitary");
    }
    if (phase_index.size() != eigenbasis.dim()) {
        throw std::invalid_argument("DiagonalUnitarySpec: one phase index per column required");
    }
    for (int j : phase_index) {
        if (j < 0 || j >= d_outcomes) {
            throw std::invalid_argument("DiagonalUnitarySpec: phase index out of range");
        }
    }
    DiagonalUnitarySpec spec;
    spec.d_outcomes = d_outcomes;
    spec.eigenbasis = std::move(eigenbasis);
    spec.phase_index = std::move(phase_index);
    return spec;
}

DenseOperator DiagonalUnitarySpec::to_matrix() const {
    std::size_t n = eigenbasis.dim();
    DenseOperator out(eigenbasis.d, eigenbasis.arity);
    for (std::size_t c = 0; c < n; ++c) {
        Complex eigenvalue = root_of_unity(d_outcomes, phase_index[c]);
        for (std::size_t r1 = 0; r1 < n; ++r1) {
            Complex left = eigenbasis.entries[r1 * n + c];
            if (left == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t r2 = 0; r2 < n; ++r2) {
                out.entries[r1 * n + r2] +=
                    eigenvalue * left * std::conj(eigenbasis.entries[r2 * n + c]);
            }
        }
    }
    return out;
}

DenseOperator DiagonalUnitarySpec::class_projector(int j) const {
    if (j < 0 || j >= d_outcomes) {
        throw std::invalid_argument("class_projector: phase class out of range");
    }
    std::size_t n = eigenbasis.dim();
    DenseOperator out(eigenbasis.d, eigenbasis.arity);
    for (std::size_t c = 0; c < n; ++c) {
        if (phase_index[c] != j) {
            continue;
        }
        for (std::size_t r1 = 0; r1 < n; ++r1) {
            Complex left = eigenbasis.entries[r1 * n + c];
            if (left == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t r2 = 0; r2 < n; ++r2) {
                out.entries[r1 * n + r2] += left * std::conj(eigenbasis.entries[r2 * n + c]);
            }
        }
    }
    return out;
}

double ObservableSpec::value(int phase_class) const {
    if (phase_class < 0 || phase_class >= base.d_outcomes) {
        throw std::invalid_argument("ObservableSpec::value: phase class out of range");
    }
    if (relabel.empty()) {
        return static_cast<double>(phase_class);
    }
    if (relabel.size() != static_cast<std::size_t>(base.d_outcomes)) {
        throw std::invalid_argument("ObservableSpec::value: relabel size mismatch");
    }
    return relabel[static_cast<std::size_t>(phase_class)];
}

namespace {

// Shared tail of the outsourced measurement: the caller has already applied
// the controlled-U stage to `working` (state + ancilla, Hadamard applied).
std::vector<MeasurementOutcome> decode_and_measure(StateVector working, int ancilla_wire) {
    working = apply_embedded(working, hd_matrix(working.d).dagger(), {ancilla_wire});
    return measure_wire(working, ancilla_wire);
}

}  // namespace

std::vector<MeasurementOutcome> outsource_measure(const DiagonalUnitarySpec& u,
                                                  const StateVector& state) {
    if (u.d_outcomes != state.d) {
        throw std::invalid_argument(
            "outsource_measure: ancilla dimension (d_outcomes) must equal the wire dimension");
    }
    if (u.eigenbasis.d != state.d || u.eigenbasis.arity != state.n_wires) {
        throw std::invalid_argument("outsource_measure: spec must act on all system wires");
    }
    StateVector working = attach_zero_wire(state);
    const int ancilla = state.n_wires;
    working = apply_embedded(working, hd_matrix(state.d), {ancilla});

    std::vector<int> wires(static_cast<std::size_t>(state.n_wires) + 1);
    wires[0] = ancilla;
    for (int w = 0; w < state.n_wires; ++w) {
        wires[static_cast<std::size_t>(w) + 1] = w;
    }
    working = apply_embedded(working, controlled_u(u.to_matrix(), state.d), wires);
    return decode_and_measure(std::move(working), ancilla);
}

std::vector<MeasurementOutcome> outsource_measure_separable(
    const std::vector<DenseOperator>& u_parts, const StateVector& state) {
    if (static_cast<int>(u_parts.size()) != state.n_wires) {
        throw std::invalid_argument("outsource_measure_separable: one part per wire required");
    }
    Circuit circuit = decompose_controlled_u(u_parts);
    if (circuit.d != state.d) {
        throw std::invalid_argument("outsource_measure_separable: dimension mismatch");
    }
    StateVector working = attach_zero_wire(state);
    const int ancilla = state.n_wires;
    working = apply_embedded(working, hd_matrix(state.d), {ancilla});
    working = run_circuit(working, circuit);
    return decode_and_measure(std::move(working), ancilla);
}

Circuit decompose_controlled_u(const std::vector<DenseOperator>& u_parts) {
    if (u_parts.empty()) {
        throw std::invalid_argument("decompose_controlled_u: at least one part required");
    }
    const int d = u_parts[0].d;
    Circuit circuit;
    circuit.d = d;
    circuit.system_wires = static_cast<int>(u_parts.size());
    circuit.ancilla_count = 1;
    const int ancilla = circuit.system_wires;
    for (std::size_t m = 0; m < u_parts.size(); ++m) {
        if (u_parts[m].d != d || u_parts[m].arity != 1) {
            throw std::invalid_argument(
                "decompose_controlled_u: parts must be single-wire unitaries of equal dimension");
        }
        GateSpec gate{GateKind::ControlledU, d};
        gate.control_role = ControlRole::AncillaControlsSystem;
        gate.payload = u_parts[m];
        circuit.add(std::move(gate), {ancilla, static_cast<int>(m)});
    }
    return circuit;
}

Circuit parity_circuit_hadamard_form(int d) {
    if (d < 2) {
        throw std::invalid_argument("parity_circuit_hadamard_form: d must be >= 2");
    }
    Circuit circuit;
    circuit.d = d;
    circuit.system_wires = 2;
    circuit.ancilla_count = 1;
    const int a = 0, b = 1, ancilla = 2;

    circuit.add(GateSpec{GateKind::Hd, d}, {ancilla});
    circuit.add(GateSpec{GateKind::HdDag, d}, {a});
    circuit.add(GateSpec{GateKind::HdDag, d}, {b});
    GateSpec sub{GateKind::CSum, d};
    sub.control_role = ControlRole::AncillaControlsSystem;
    circuit.add(sub, {ancilla, a});
    GateSpec add{GateKind::CSumDag, d};
    add.control_role = ControlRole::AncillaControlsSystem;
    circuit.add(add, {ancilla, b});
    circuit.add(GateSpec{GateKind::Hd, d}, {a});
    circuit.add(GateSpec{GateKind::Hd, d}, {b});
    circuit.add(GateSpec{GateKind::HdDag, d}, {ancilla});
    return circuit;
}

Circuit parity_circuit_reversed_form(int d) {
    if (d < 2) {
        throw std::invalid_argument("parity_circuit_reversed_form: d must be >= 2");
    }
    Circuit circuit;
    circuit.d = d;
    circuit.system_wires = 2;
    circuit.ancilla_count = 1;
    const int a = 0, b = 1, ancilla = 2;

    GateSpec add_b{GateKind::CSumDag, d};
    add_b.control_role = ControlRole::SystemControlsAncilla;
    circuit.add(add_b, {b, ancilla});
    GateSpec sub_a{GateKind::CSum, d};
    sub_a.control_role = ControlRole::SystemControlsAncilla;
    circuit.add(sub_a, {a, ancilla});
    return circuit;
}

ConjugationCheck zz_conjugation_identity_check(int d, int j) {
    if (d < 2 || j < 0 || j >= d) {
        throw std::invalid_argument("zz_conjugation_identity_check: require d >= 2, 0 <= j < d");
    }
    DenseOperator z = zd_matrix(d);
    DenseOperator x = xd_matrix(d);
    DenseOperator h = hd_matrix(d);
    DenseOperator lhs = z.dagger().kron(z).pow(j);
    DenseOperator middle = x.kron(x.dagger()).pow(j);
    DenseOperator rhs = h.kron(h) * middle * h.dagger().kron(h.dagger());
    ConjugationCheck check;
    check.max_deviation = lhs.max_abs_diff(rhs);
    check.ok = check.max_deviation <= kUnitaryTol;
    return check;
}

std::vector<ClosureEntry> closure_map(int d, HadamardVariant variant) {
    DenseOperator h = hd_matrix(d);
    DenseOperator first = variant == HadamardVariant::HTensorHDag ? h : h.dagger();
    DenseOperator second = variant == HadamardVariant::HTensorHDag ? h.dagger() : h;

    std::vector<BellIndex> labels = enumerate_bell_basis(d, 2);
    std::vector<StateVector> basis;
    basis.reserve(labels.size());
    for (const BellIndex& label : labels) {
        basis.push_back(bell_qudit(label));
    }

    std::vector<ClosureEntry> entries;
    entries.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        StateVector mapped = apply_embedded(basis[i], first, {0});
        mapped = apply_embedded(mapped, second, {1});
        bool found = false;
        for (std::size_t t = 0; t < labels.size(); ++t) {
            PhaseComparison comparison = equal_up_to_global_phase(basis[t], mapped);
            if (comparison.match) {
                entries.push_back(ClosureEntry{labels[i], labels[t], *comparison.phase});
                found = true;
                break;
            }
        }
        if (!found) {
            throw std::domain_error("closure_map: image is not a Bell basis state");
        }
    }
    return entries;
}

}  // namespace quditsim
