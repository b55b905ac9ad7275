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

#include "quditsim/discriminator.hpp"

#include <queue>
#include <stdexcept>

namespace quditsim {

namespace {

constexpr double kPointMassTol = 1e-10;

}  // namespace

ParityPairSet ParityPairSet::consecutive(int n) {
    ParityPairSet set;
    for (int i = 0; i + 1 < n; ++i) {
        set.pairs.emplace_back(i, i + 1);
    }
    return set;
}

ParityPairSet ParityPairSet::star(int hub, int n) {
    ParityPairSet set;
    for (int j = 0; j < n; ++j) {
        if (j != hub) {
            set.pairs.emplace_back(hub, j);
        }
    }
    return set;
}

bool ParityPairSet::spans(int n) const {
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
            return false;
        }
        adjacency[static_cast<std::size_t>(a)].push_back(b);
        adjacency[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    std::queue<int> frontier;
    frontier.push(0);
    reached[0] = true;
    int count = 1;
    while (!frontier.empty()) {
        int w = frontier.front();
        frontier.pop();
        for (int next : adjacency[static_cast<std::size_t>(w)]) {
            if (!reached[static_cast<std::size_t>(next)]) {
                reached[static_cast<std::size_t>(next)] = true;
                ++count;
                frontier.push(next);
            }
        }
    }
    return count == n;
}

Circuit build_phase_circuit(int d, int n, PhaseConvention convention) {
    if (d < 2 || n < 1) {
        throw std::invalid_argument("build_phase_circuit: require d >= 2, n >= 1");
    }
    Circuit circuit;
    circuit.d = d;
    circuit.system_wires = n;
    circuit.ancilla_count = 1;
    const int ancilla = n;
    bool swapped = convention == PhaseConvention::PrepareHDagDecodeH;

    GateSpec prepare{swapped ? GateKind::HdDag : GateKind::Hd, d};
    circuit.add(prepare, {ancilla});
    for (int w = 0; w < n; ++w) {
        GateSpec sum{GateKind::CSum, d};
        sum.control_role = ControlRole::AncillaControlsSystem;
        circuit.add(sum, {ancilla, w});
    }
    GateSpec decode{swapped ? GateKind::Hd : GateKind::HdDag, d};
    circuit.add(decode, {ancilla});
    return circuit;
}

Circuit build_parity_circuit(int d, int n, std::pair<int, int> pair) {
    if (d < 2 || n < 2) {
        throw std::invalid_argument("build_parity_circuit: require d >= 2, n >= 2");
    }
    auto [a, b] = pair;
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
        throw std::invalid_argument("build_parity_circuit: invalid wire pair");
    }
    Circuit circuit;
    circuit.d = d;
    circuit.system_wires = n;
    circuit.ancilla_count = 1;
    const int ancilla = n;

    GateSpec add_b{GateKind::CSumDag, d};
    add_b.control_role = ControlRole::SystemControlsAncilla;
    circuit.add(add_b, {b, ancilla});
    GateSpec sub_a{GateKind::CSum, d};
    sub_a.control_role = ControlRole::SystemControlsAncilla;
    circuit.add(sub_a, {a, ancilla});
    return circuit;
}

std::vector<int> reconstruct_q(const std::vector<int>& outcomes, const ParityPairSet& pairs,
                               int d, int n) {
    if (outcomes.size() != pairs.pairs.size()) {
        throw std::invalid_argument("reconstruct_q: one outcome per pair required");
    }
    if (!pairs.spans(n)) {
        throw std::invalid_argument("reconstruct_q: parity pairs must span all wires");
    }
    // Edges (a, b, delta) with v_b - v_a = delta (mod d); BFS from wire 0.
    struct Edge {
        int to;
        int delta;
    };
    std::vector<std::vector<Edge>> adjacency(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < pairs.pairs.size(); ++i) {
        auto [a, b] = pairs.pairs[i];
        int delta = ((outcomes[i] % d) + d) % d;
        adjacency[static_cast<std::size_t>(a)].push_back(Edge{b, delta});
        adjacency[static_cast<std::size_t>(b)].push_back(Edge{a, (d - delta) % d});
    }
    std::vector<int> v(static_cast<std::size_t>(n), -1);
    v[0] = 0;
    std::queue<int> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        int w = frontier.front();
        frontier.pop();
        for (const Edge& edge : adjacency[static_cast<std::size_t>(w)]) {
            int value = (v[static_cast<std::size_t>(w)] + edge.delta) % d;
            if (v[static_cast<std::size_t>(edge.to)] == -1) {
                v[static_cast<std::size_t>(edge.to)] = value;
                frontier.push(edge.to);
            } else if (v[static_cast<std::size_t>(edge.to)] != value) {
                throw std::domain_error(
                    "reconstruct_q: inconsistent parity outcomes (input is not a Bell "
                    "basis state)");
            }
        }
    }
    return {v.begin() + 1, v.end()};
}

AncillaReadout run_ancilla_circuit(const StateVector& state, const Circuit& circuit) {
    if (circuit.ancilla_count != 1) {
        throw std::invalid_argument("run_ancilla_circuit: circuit must have one ancilla");
    }
    if (state.n_wires != circuit.system_wires) {
        throw std::invalid_argument("run_ancilla_circuit: state width mismatch");
    }
    StateVector working = attach_zero_wire(state);
    working = run_circuit(working, circuit);
    std::vector<MeasurementOutcome> outcomes = measure_wire(working, state.n_wires);

    AncillaReadout readout;
    readout.probability = -1.0;
    for (const MeasurementOutcome& candidate : outcomes) {
        if (candidate.probability > readout.probability + kPointMassTol) {
            readout.outcome = candidate.outcome;
            readout.probability = candidate.probability;
        }
    }
    readout.post_state = std::move(outcomes[static_cast<std::size_t>(readout.outcome)].post_state);
    return readout;
}

DiscriminationResult discriminate(const StateVector& state) {
    return discriminate(state, ParityPairSet::consecutive(state.n_wires));
}

DiscriminationResult discriminate(const StateVector& state, const ParityPairSet& pairs,
                                  const DiscriminateOptions& options) {
    const int d = state.d;
    const int n = state.n_wires;
    if (n < 2) {
        throw std::invalid_argument("discriminate: require at least two wires");
    }
    if (!pairs.spans(n)) {
        throw std::invalid_argument("discriminate: parity pairs must span all wires");
    }

    DiscriminationResult result;
    result.deterministic = true;
    StateVector current = state;

    int phase_outcome = 0;
    std::vector<int> parity_outcomes;
    parity_outcomes.reserve(pairs.pairs.size());

    auto run_phase = [&]() {
        Circuit circuit = build_phase_circuit(d, n, options.phase_convention);
        AncillaReadout readout = run_ancilla_circuit(current, circuit);
        phase_outcome = readout.outcome;
        result.deterministic = result.deterministic && readout.probability >= 1.0 - kPointMassTol;
        current = std::move(readout.post_state);
    };
    auto run_parities = [&]() {
        for (const auto& pair : pairs.pairs) {
            Circuit circuit = build_parity_circuit(d, n, pair);
            AncillaReadout readout = run_ancilla_circuit(current, circuit);
            parity_outcomes.push_back(readout.outcome);
            result.deterministic =
                result.deterministic && readout.probability >= 1.0 - kPointMassTol;
            current = std::move(readout.post_state);
        }
    };

    if (options.parity_before_phase) {
        run_parities();
        run_phase();
    } else {
        run_phase();
        run_parities();
    }

    result.p = options.phase_convention == PhaseConvention::PrepareHDecodeHDag
                   ? phase_outcome
                   : (d - phase_outcome) % d;
    result.q = reconstruct_q(parity_outcomes, pairs, d, n);
    result.ancilla_outcomes.push_back(phase_outcome);
    result.ancilla_outcomes.insert(result.ancilla_outcomes.end(), parity_outcomes.begin(),
                                   parity_outcomes.end());
    result.post_state = std::move(current);
    return result;
}

}  // namespace quditsim
