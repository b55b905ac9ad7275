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

#include "quditsim/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "quditsim/bell.hpp"
#include "quditsim/circuit.hpp"
#include "quditsim/discriminator.hpp"
#include "quditsim/gates.hpp"
#include "quditsim/netcost.hpp"
#include "quditsim/outsourcing.hpp"
#include "quditsim/random.hpp"
#include "quditsim/reference.hpp"
#include "quditsim/state.hpp"

namespace quditsim {

namespace {

using CheckFn = std::function<CheckResult(RandomSource)>;

std::string fmt_dev(double deviation) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << "max deviation " << deviation;
    return out.str();
}

CheckResult pass_with(std::string id, double deviation) {
    return CheckResult{std::move(id), true, fmt_dev(deviation)};
}

CheckResult fail_with(std::string id, std::string detail) {
    return CheckResult{std::move(id), false, std::move(detail)};
}

// Tracks the largest deviation seen; `ok` latches false on any breach.
struct Worst {
    double value = 0.0;
    bool ok = true;
    std::string note;

    void feed(double deviation, double bound, const std::string& where) {
        value = std::max(value, deviation);
        if (deviation > bound && ok) {
            ok = false;
            std::ostringstream out;
            out.precision(3);
            out << std::scientific << where << ": deviation " << deviation << " > " << bound;
            note = out.str();
        }
    }
    void expect(bool condition, const std::string& where) {
        if (!condition && ok) {
            ok = false;
            note = where;
        }
    }
    CheckResult result(const std::string& id) const {
        return ok ? pass_with(id, value) : CheckResult{id, false, note};
    }
};

// ---------------------------------------------------------------- tensor --

CheckResult check_basis_indexing(RandomSource) {
    const std::string id = "tensor/basis_indexing";
    Worst w;
    StateVector s = StateVector::basis_state(3, 2, {1, 2});
    w.expect(s.amps[5] == Complex{1.0, 0.0}, "digits (1,2) at d=3 must map to flat index 5");
    w.expect(s.index_of({1, 2}) == 5, "index_of((1,2)) != 5");
    w.expect(s.digits_of(5) == std::vector<int>{1, 2}, "digits_of(5) != (1,2)");
    StateVector t = StateVector::basis_state(2, 3, {1, 0, 1});
    w.expect(t.index_of({1, 0, 1}) == 5, "index_of((1,0,1)) != 5 at d=2");
    return w.result(id);
}

CheckResult check_norm_preservation(RandomSource rng) {
    const std::string id = "tensor/norm_preservation";
    Worst w;
    for (int d = 2; d <= 4; ++d) {
        for (int n = 1; n <= 4; ++n) {
            StateVector state = random_state(d, n, rng);
            for (int trial = 0; trial < 4; ++trial) {
                int arity = 1 + rng.uniform_int(0, std::min(1, n - 1));
                std::vector<int> wires;
                while (static_cast<int>(wires.size()) < arity) {
                    int wire = rng.uniform_int(0, n - 1);
                    if (std::find(wires.begin(), wires.end(), wire) == wires.end()) {
                        wires.push_back(wire);
                    }
                }
                state = apply_embedded(state, random_unitary(d, arity, rng), wires);
                w.feed(std::abs(state.norm() - 1.0), 1e-12, "norm after apply_embedded");
            }
        }
    }
    return w.result(id);
}

CheckResult check_kron_oracle(RandomSource rng) {
    const std::string id = "tensor/kron_oracle";
    Worst w;
    for (int d = 2; d <= 3; ++d) {
        for (int n = 1; n <= 3; ++n) {
            for (int arity = 1; arity <= std::min(2, n); ++arity) {
                for (int trial = 0; trial < 6; ++trial) {
                    std::vector<int> wires;
                    while (static_cast<int>(wires.size()) < arity) {
                        int wire = rng.uniform_int(0, n - 1);
                        if (std::find(wires.begin(), wires.end(), wire) == wires.end()) {
                            wires.push_back(wire);
                        }
                    }
                    DenseOperator op = random_unitary(d, arity, rng);
                    StateVector state = random_state(d, n, rng);
                    StateVector fast = apply_embedded(state, op, wires);
                    StateVector slow = reference::apply_dense(
                        reference::embed_via_kron(op, wires, n), state);
                    w.feed(max_abs_diff(fast, slow), 1e-12, "stride kernel vs kron oracle");
                }
            }
        }
    }
    return w.result(id);
}

CheckResult check_measure_distribution(RandomSource rng) {
    const std::string id = "tensor/measure_distribution";
    Worst w;
    for (int d = 2; d <= 5; ++d) {
        for (int n = 2; n <= 4; ++n) {
            StateVector state = random_state(d, n, rng);
            for (int wire = 0; wire < n; ++wire) {
                auto outcomes = measure_wire(state, wire);
                double total = 0.0;
                for (const auto& entry : outcomes) {
                    total += entry.probability;
                    if (entry.probability > 0.0) {
                        w.feed(std::abs(entry.post_state.norm() - 1.0), 1e-12,
                               "post-state norm");
                    }
                }
                w.feed(std::abs(total - 1.0), 1e-10, "probability sum");
            }
        }
    }
    return w.result(id);
}

CheckResult check_global_phase(RandomSource rng) {
    const std::string id = "tensor/global_phase";
    Worst w;
    StateVector plus = bell_qudit(BellIndex{2, 2, 0, {0}});
    StateVector rotated = plus;
    Complex phase = root_of_unity(8, 1);  // exp(i*pi/4)
    for (Complex& amp : rotated.amps) {
        amp *= phase;
    }
    PhaseComparison same = equal_up_to_global_phase(plus, rotated);
    w.expect(same.match, "state vs phased copy must match");
    if (same.phase.has_value()) {
        w.feed(std::abs(*same.phase - phase), 1e-12, "recovered phase");
    }
    PhaseComparison different =
        equal_up_to_global_phase(plus, bell_qudit(BellIndex{2, 2, 1, {0}}));
    w.expect(!different.match, "orthogonal states must not match");
    w.expect(!different.phase.has_value(), "no phase for non-matching states");
    StateVector hay = random_state(3, 2, rng);
    PhaseComparison self = equal_up_to_global_phase(hay, hay);
    w.expect(self.match, "state must match itself");
    return w.result(id);
}

CheckResult check_clock_on_wire(RandomSource) {
    const std::string id = "tensor/clock_on_wire";
    // Z_3 on the second wire of (|01> + |12>)/sqrt2 phases the branches by
    // w and w^2 respectively.
    Worst w;
    StateVector state = StateVector::zero_state(3, 2);
    state.amps.assign(9, Complex{0.0, 0.0});
    double amp = 1.0 / std::sqrt(2.0);
    state.amps[state.index_of({0, 1})] = amp;
    state.amps[state.index_of({1, 2})] = amp;
    StateVector phased = apply_embedded(state, zd_matrix(3), {1});
    StateVector expected = state;
    expected.amps[expected.index_of({0, 1})] *= root_of_unity(3, 1);
    expected.amps[expected.index_of({1, 2})] *= root_of_unity(3, 2);
    w.feed(max_abs_diff(phased, expected), 1e-12, "clock gate on wire 1");
    return w.result(id);
}

CheckResult check_memory_cap(RandomSource) {
    const std::string id = "tensor/memory_cap";
    Worst w;
    bool threw = false;
    try {
        StateVector::zero_state(2, 70);
    } catch (const std::length_error&) {
        threw = true;
    }
    w.expect(threw, "constructing 2^70 amplitudes must throw length_error");
    return w.result(id);
}

// ----------------------------------------------------------------- gates --

CheckResult check_unitarity(RandomSource rng) {
    const std::string id = "gates/unitarity";
    Worst w;
    for (int d = 2; d <= 7; ++d) {
        w.feed(zd_matrix(d).unitarity_error(), 1e-12, "zd");
        w.feed(xd_matrix(d).unitarity_error(), 1e-12, "xd");
        w.feed(hd_matrix(d).unitarity_error(), 1e-12, "hd");
        w.feed(csum(d, false).unitarity_error(), 1e-12, "csum");
        w.feed(csum(d, true).unitarity_error(), 1e-12, "csum dagger");
        w.feed(controlled_u(random_unitary(d, 1, rng), d).unitarity_error(), 1e-12,
               "controlled_u");
    }
    return w.result(id);
}

CheckResult check_fourier_relation(RandomSource) {
    const std::string id = "gates/fourier_relation";
    Worst w;
    for (int d = 2; d <= 7; ++d) {
        DenseOperator h = hd_matrix(d);
        DenseOperator conjugated = h * zd_matrix(d) * h.dagger();
        w.feed(conjugated.max_abs_diff(xd_matrix(d)), 1e-12, "X = H Z Hdag");
    }
    return w.result(id);
}

CheckResult check_csum_algebra(RandomSource) {
    const std::string id = "gates/csum_algebra";
    Worst w;
    for (int d = 2; d <= 7; ++d) {
        DenseOperator forward = csum(d, false);
        DenseOperator backward = csum(d, true);
        w.feed((forward * backward).max_abs_diff(DenseOperator::identity(d, 2)), 1e-12,
               "csum inverse pair");
        w.feed(forward.max_abs_diff(controlled_u(xd_matrix(d), d)), 1e-12,
               "csum == controlled shift");
    }
    // Pinned d=3 actions: |1,0> -> |1,2> and (dagger) |1,0> -> |1,1>.
    StateVector in = StateVector::basis_state(3, 2, {1, 0});
    StateVector sub = apply_embedded(in, csum(3, false), {0, 1});
    StateVector add = apply_embedded(in, csum(3, true), {0, 1});
    w.feed(max_abs_diff(sub, StateVector::basis_state(3, 2, {1, 2})), 1e-15, "|1,0> -> |1,2>");
    w.feed(max_abs_diff(add, StateVector::basis_state(3, 2, {1, 1})), 1e-15, "|1,0> -> |1,1>");
    return w.result(id);
}

CheckResult check_commutation_backbone(RandomSource) {
    const std::string id = "gates/commutation_backbone";
    Worst w;
    for (int d = 2; d <= 5; ++d) {
        DenseOperator z = zd_matrix(d);
        DenseOperator pair_op = z.dagger().kron(z);
        for (int n = 2; n <= 4; ++n) {
            DenseOperator shift_all = xd_matrix(d);
            for (int i = 1; i < n; ++i) {
                shift_all = shift_all.kron(xd_matrix(d));
            }
            for (int j = 0; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    DenseOperator parity = reference::embed_via_kron(pair_op, {j, k}, n);
                    DenseOperator commutator_gap = shift_all * parity;
                    w.feed(commutator_gap.max_abs_diff(parity * shift_all), 1e-12,
                           "[X^n, Zdag(j) Z(k)]");
                }
            }
            // Any two parity observables are diagonal, hence commute.
            DenseOperator first = reference::embed_via_kron(pair_op, {0, 1}, n);
            DenseOperator second = reference::embed_via_kron(pair_op, {0, n - 1}, n);
            w.feed((first * second).max_abs_diff(second * first), 1e-12,
                   "[parity, parity]");
        }
    }
    return w.result(id);
}

// ------------------------------------------------------------------ bell --

CheckResult check_orthonormality(RandomSource) {
    const std::string id = "bell/orthonormality";
    Worst w;
    const std::vector<std::pair<int, int>> grid = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
    for (const auto& [d, n] : grid) {
        std::vector<StateVector> basis;
        for (const BellIndex& label : enumerate_bell_basis(d, n)) {
            basis.push_back(bell_qudit(label));
        }
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                Complex overlap = inner_product(basis[i], basis[j]);
                Complex expected = i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                w.feed(std::abs(overlap - expected), 1e-12, "Gram matrix");
            }
        }
    }
    return w.result(id);
}

CheckResult check_eigenstate_labels(RandomSource) {
    const std::string id = "bell/eigenstate_labels";
    Worst w;
    const std::vector<std::pair<int, int>> grid = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}};
    for (const auto& [d, n] : grid) {
        DenseOperator shift_all = xd_matrix(d);
        for (int i = 1; i < n; ++i) {
            shift_all = shift_all.kron(xd_matrix(d));
        }
        DenseOperator z = zd_matrix(d);
        DenseOperator pair_op = z.dagger().kron(z);
        for (const BellIndex& label : enumerate_bell_basis(d, n)) {
            StateVector state = bell_qudit(label);
            auto phase = reference::eigenphase_of(shift_all, state, d);
            w.expect(phase.has_value(), "Bell state must be an X^n eigenstate");
            w.expect(!phase.has_value() || *phase == label.p, "X^n eigenphase must equal p");
            for (int b = 1; b < n; ++b) {
                int a = b - 1;
                DenseOperator parity = reference::embed_via_kron(pair_op, {a, b}, n);
                auto rel = reference::eigenphase_of(parity, state, d);
                w.expect(rel.has_value(), "Bell state must be a parity eigenstate");
                w.expect(!rel.has_value() || *rel == relative_parity(label, a, b),
                         "parity eigenphase must equal v_b - v_a");
            }
        }
    }
    // Pinned case: d=3, n=3, p=1, q=(0,2) has X^3 eigenvalue w and
    // Zdag(0) Z(1) eigenvalue w^0 = 1.
    BellIndex pinned{3, 3, 1, {0, 2}};
    StateVector state = bell_qudit(pinned);
    DenseOperator shift3 = xd_matrix(3).kron(xd_matrix(3)).kron(xd_matrix(3));
    auto phase = reference::eigenphase_of(shift3, state, 3);
    w.expect(phase.has_value() && *phase == 1, "pinned eigenphase p=1");
    w.expect(relative_parity(pinned, 0, 1) == 0, "pinned parity (0,1) = 0");
    return w.result(id);
}

CheckResult check_qubit_reduction(RandomSource) {
    const std::string id = "bell/qubit_reduction";
    Worst w;
    for (int n = 2; n <= 4; ++n) {
        for (int x = 0; x < (1 << (n - 1)); ++x) {
            for (BellSign sign : {BellSign::Plus, BellSign::Minus}) {
                QubitBellIndex qubit{n, x, sign};
                StateVector via_qubit = bell_qubit(qubit);
                StateVector via_qudit = bell_qudit(qubit_index_to_bell(qubit));
                w.feed(max_abs_diff(via_qubit, via_qudit), 1e-15,
                       "qubit family vs d=2 qudit family");
            }
        }
    }
    // The four canonical two-qubit states in (p, q) labels.
    auto expect_two_qubit = [&](int p, int q, double a00, double a01, double a10, double a11) {
        StateVector state = bell_qudit(BellIndex{2, 2, p, {q}});
        double inv = 1.0 / std::sqrt(2.0);
        StateVector expected = StateVector::zero_state(2, 2);
        expected.amps = {Complex{a00 * inv, 0}, Complex{a01 * inv, 0}, Complex{a10 * inv, 0},
                         Complex{a11 * inv, 0}};
        w.feed(max_abs_diff(state, expected), 1e-15, "two-qubit label");
    };
    expect_two_qubit(0, 0, 1, 0, 0, 1);   // (|00> + |11>)/sqrt2
    expect_two_qubit(1, 0, 1, 0, 0, -1);  // (|00> - |11>)/sqrt2
    expect_two_qubit(0, 1, 0, 1, 1, 0);   // (|01> + |10>)/sqrt2
    expect_two_qubit(1, 1, 0, 1, -1, 0);  // (|01> - |10>)/sqrt2
    return w.result(id);
}

// --------------------------------------------------------- discriminator --

CheckResult check_phase_readout(RandomSource) {
    const std::string id = "discriminator/phase_readout";
    Worst w;
    {
        StateVector state = bell_qudit(BellIndex{3, 2, 2, {1}});
        AncillaReadout readout = run_ancilla_circuit(state, build_phase_circuit(3, 2));
        w.expect(readout.outcome == 2, "d=3 (p=2,q=1) phase readout must be 2");
        w.feed(std::abs(readout.probability - 1.0), 1e-10, "phase readout point mass");
        w.expect(equal_up_to_global_phase(state, readout.post_state).match,
                 "phase circuit must not disturb a Bell state");
    }
    {
        // (|00> - |11>)/sqrt2 reads 1.
        StateVector state = bell_qudit(BellIndex{2, 2, 1, {0}});
        AncillaReadout readout = run_ancilla_circuit(state, build_phase_circuit(2, 2));
        w.expect(readout.outcome == 1, "psi-minus phase readout must be 1");
        w.feed(std::abs(readout.probability - 1.0), 1e-10, "point mass");
    }
    {
        // Swapped convention reads (d - p) mod d.
        StateVector state = bell_qudit(BellIndex{3, 2, 2, {1}});
        AncillaReadout readout = run_ancilla_circuit(
            state, build_phase_circuit(3, 2, PhaseConvention::PrepareHDagDecodeH));
        w.expect(readout.outcome == 1, "swapped convention must read (3-2)=1");
    }
    return w.result(id);
}

CheckResult check_parity_readout(RandomSource) {
    const std::string id = "discriminator/parity_readout";
    Worst w;
    {
        // (|01> + |10>)/sqrt2 has relative parity 1.
        StateVector state = bell_qudit(BellIndex{2, 2, 0, {1}});
        AncillaReadout readout = run_ancilla_circuit(state, build_parity_circuit(2, 2, {0, 1}));
        w.expect(readout.outcome == 1, "phi-plus parity readout must be 1");
        w.feed(std::abs(readout.probability - 1.0), 1e-10, "point mass");
        w.expect(equal_up_to_global_phase(state, readout.post_state).match,
                 "parity circuit must not disturb a Bell state");
    }
    {
        // d=3, n=3, p=2, q=(1,0): full outcome sequence (2, 1, 2).
        StateVector state = bell_qudit(BellIndex{3, 3, 2, {1, 0}});
        DiscriminationResult result = discriminate(state);
        w.expect(result.ancilla_outcomes == std::vector<int>{2, 1, 2},
                 "pinned outcome sequence (2,1,2)");
        w.expect(result.p == 2 && result.q == std::vector<int>{1, 0}, "pinned labels");
    }
    return w.result(id);
}

CheckResult check_round_trip(RandomSource) {
    const std::string id = "discriminator/round_trip";
    Worst w;
    const std::vector<std::pair<int, int>> grid = {{2, 2}, {2, 3}, {2, 4},
                                                   {3, 2}, {3, 3}, {5, 2}};
    for (const auto& [d, n] : grid) {
        for (const BellIndex& label : enumerate_bell_basis(d, n)) {
            StateVector state = bell_qudit(label);
            DiscriminationResult result = discriminate(state);
            w.expect(result.p == label.p && result.q == label.q, "label recovery");
            w.expect(result.deterministic, "all readouts must be point masses");
            PhaseComparison round = equal_up_to_global_phase(state, result.post_state);
            w.expect(round.match, "post-state fidelity");
            w.feed(1.0 - std::abs(inner_product(state, result.post_state)), 1e-10,
                   "fidelity defect");
        }
    }
    return w.result(id);
}

CheckResult check_order_independence(RandomSource) {
    const std::string id = "discriminator/order_independence";
    Worst w;
    const std::vector<std::pair<int, int>> grid = {{2, 3}, {3, 2}, {3, 3}, {5, 2}};
    DiscriminateOptions swapped;
    swapped.parity_before_phase = true;
    for (const auto& [d, n] : grid) {
        for (const BellIndex& label : enumerate_bell_basis(d, n)) {
            StateVector state = bell_qudit(label);
            DiscriminationResult forward = discriminate(state);
            DiscriminationResult reversed =
                discriminate(state, ParityPairSet::consecutive(n), swapped);
            w.expect(forward.ancilla_outcomes == reversed.ancilla_outcomes,
                     "outcomes independent of circuit order");
            w.feed(max_abs_diff(forward.post_state, reversed.post_state), 1e-10,
                   "post-state independent of circuit order");
        }
    }
    return w.result(id);
}

CheckResult check_gate_budget_and_text(RandomSource) {
    const std::string id = "discriminator/gate_budget_and_text";
    Worst w;
    for (int d : {2, 3, 5}) {
        for (int n = 2; n <= 6; ++n) {
            Circuit phase = build_phase_circuit(d, n);
            w.expect(phase.two_qudit_gate_count == n, "phase circuit: n two-qudit gates");
            int total = phase.two_qudit_gate_count;
            ParityPairSet pairs = ParityPairSet::consecutive(n);
            for (const auto& pair : pairs.pairs) {
                Circuit parity = build_parity_circuit(d, n, pair);
                w.expect(parity.two_qudit_gate_count == 2, "parity circuit: 2 two-qudit gates");
                total += parity.two_qudit_gate_count;
                Circuit reparsed = circuit_from_text(circuit_to_text(parity));
                w.expect(reparsed == parity, "parity circuit text round trip");
            }
            w.expect(total == 3 * n - 2, "3n-2 two-qudit gates in total");
            Circuit reparsed = circuit_from_text(circuit_to_text(phase));
            w.expect(reparsed == phase, "phase circuit text round trip");
        }
    }
    return w.result(id);
}

CheckResult check_sector_projection(RandomSource rng) {
    const std::string id = "discriminator/sector_projection";
    Worst w;
    const int d = 2, n = 2;
    std::vector<BellIndex> labels = enumerate_bell_basis(d, n);
    std::vector<StateVector> basis;
    for (const BellIndex& label : labels) {
        basis.push_back(bell_qudit(label));
    }
    for (int trial = 0; trial < 8; ++trial) {
        StateVector input = random_state(d, n, rng);
        // Sector weights from overlaps with the Bell basis.
        std::vector<double> phase_weight(static_cast<std::size_t>(d), 0.0);
        std::vector<double> overlap_sq(labels.size(), 0.0);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            overlap_sq[i] = std::norm(inner_product(basis[i], input));
            phase_weight[static_cast<std::size_t>(labels[i].p)] += overlap_sq[i];
        }
        // The phase-circuit ancilla distribution must equal the sector weights.
        StateVector working = attach_zero_wire(input);
        working = run_circuit(working, build_phase_circuit(d, n));
        auto outcomes = measure_wire(working, n);
        for (int o = 0; o < d; ++o) {
            w.feed(std::abs(outcomes[static_cast<std::size_t>(o)].probability -
                            phase_weight[static_cast<std::size_t>(o)]),
                   1e-10, "phase outcome distribution vs sector weights");
        }
        // Discrimination collapses onto the Bell state it reports.
        DiscriminationResult result = discriminate(input);
        w.expect(!result.deterministic, "generic superposition is not deterministic");
        std::size_t which = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i].p == result.p && labels[i].q == result.q) {
                which = i;
            }
        }
        PhaseComparison collapse = equal_up_to_global_phase(basis[which], result.post_state);
        w.expect(collapse.match, "post-state must collapse onto the reported sector");
        w.expect(overlap_sq[which] > 0.0, "reported sector must have nonzero weight");
    }
    return w.result(id);
}

CheckResult check_reconstruction(RandomSource) {
    const std::string id = "discriminator/reconstruction";
    Worst w;
    {
        ParityPairSet pairs;
        pairs.pairs = {{0, 1}, {1, 2}};
        std::vector<int> q = reconstruct_q({2, 2}, pairs, 3, 3);
        w.expect(q == std::vector<int>{2, 1}, "telescoped outcomes (2,2) -> q=(2,1)");
    }
    {
        // A star pair set reconstructs the same labels as a chain.
        BellIndex label{3, 3, 1, {2, 1}};
        StateVector state = bell_qudit(label);
        ParityPairSet star = ParityPairSet::star(0, 3);
        DiscriminationResult result = discriminate(state, star);
        w.expect(result.p == label.p && result.q == label.q, "star pair set recovery");
    }
    {
        bool threw = false;
        try {
            ParityPairSet gap;
            gap.pairs = {{0, 1}};
            reconstruct_q({0}, gap, 2, 3);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        w.expect(threw, "non-spanning pairs must be rejected");
    }
    {
        bool threw = false;
        try {
            ParityPairSet cycle;
            cycle.pairs = {{0, 1}, {1, 2}, {0, 2}};
            reconstruct_q({1, 1, 0}, cycle, 3, 3);  // 1 + 1 != 0 (mod 3)
        } catch (const std::domain_error&) {
            threw = true;
        }
        w.expect(threw, "inconsistent cycle must signal a non-Bell input");
        ParityPairSet cycle;
        cycle.pairs = {{0, 1}, {1, 2}, {0, 2}};
        std::vector<int> q = reconstruct_q({1, 1, 2}, cycle, 3, 3);
        w.expect(q == std::vector<int>{1, 2}, "consistent cycle reconstructs");
    }
    return w.result(id);
}

// ------------------------------------------------------------ outsourcing --

CheckResult check_theorem1_random(RandomSource rng) {
    const std::string id = "outsourcing/theorem1_random";
    Worst w;
    for (int d = 2; d <= 5; ++d) {
        for (int trial = 0; trial < 25; ++trial) {
            DiagonalUnitarySpec spec = random_diagonal_spec(d, rng);
            StateVector state = random_state(d, 1, rng);
            auto circuit_outcomes = outsource_measure(spec, state);
            auto oracle_outcomes = reference::projector_measure(spec, state);
            w.feed(reference::total_variation_distance(circuit_outcomes, oracle_outcomes),
                   1e-10, "outcome distribution vs projector oracle");
            for (int j = 0; j < d; ++j) {
                if (oracle_outcomes[static_cast<std::size_t>(j)].probability > 1e-12) {
                    w.feed(max_abs_diff(circuit_outcomes[static_cast<std::size_t>(j)].post_state,
                                        oracle_outcomes[static_cast<std::size_t>(j)].post_state),
                           1e-10, "post-state vs normalized projection");
                }
            }
        }
    }
    return w.result(id);
}

CheckResult check_theorem1_eigenstates(RandomSource rng) {
    const std::string id = "outsourcing/theorem1_eigenstates";
    Worst w;
    // Clock-operator spec: computational eigenbasis, phase index = digit.
    for (int d = 2; d <= 5; ++d) {
        std::vector<int> phases(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
            phases[static_cast<std::size_t>(j)] = j;
        }
        DiagonalUnitarySpec clock =
            DiagonalUnitarySpec::create(d, DenseOperator::identity(d, 1), phases);
        for (int k = 0; k < d; ++k) {
            StateVector state = StateVector::basis_state(d, 1, {k});
            auto outcomes = outsource_measure(clock, state);
            w.feed(std::abs(outcomes[static_cast<std::size_t>(k)].probability - 1.0), 1e-10,
                   "clock eigenstate reads its digit");
        }
        // Random spec, random eigenstate within a class.
        DiagonalUnitarySpec spec = random_diagonal_spec(d, rng);
        int column = rng.uniform_int(0, d - 1);
        int j = spec.phase_index[static_cast<std::size_t>(column)];
        StateVector state = StateVector::zero_state(d, 1);
        for (int r = 0; r < d; ++r) {
            state.amps[static_cast<std::size_t>(r)] =
                spec.eigenbasis.at(static_cast<std::size_t>(r), static_cast<std::size_t>(column));
        }
        auto outcomes = outsource_measure(spec, state);
        w.feed(std::abs(outcomes[static_cast<std::size_t>(j)].probability - 1.0), 1e-10,
               "eigenstate outcome is deterministic");
        w.expect(equal_up_to_global_phase(
                     state, outcomes[static_cast<std::size_t>(j)].post_state)
                     .match,
                 "eigenstate is preserved");
        w.feed(1.0 - std::abs(inner_product(
                   state, outcomes[static_cast<std::size_t>(j)].post_state)),
               1e-10, "eigenstate fidelity defect");
    }
    return w.result(id);
}

CheckResult check_theorem1_bell(RandomSource) {
    const std::string id = "outsourcing/theorem1_bell";
    Worst w;
    const std::vector<std::pair<int, int>> grid = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}};
    for (const auto& [d, n] : grid) {
        std::vector<DenseOperator> parts(static_cast<std::size_t>(n), xd_matrix(d));
        for (const BellIndex& label : enumerate_bell_basis(d, n)) {
            StateVector state = bell_qudit(label);
            auto outcomes = outsource_measure_separable(parts, state);
            w.feed(std::abs(outcomes[static_cast<std::size_t>(label.p)].probability - 1.0),
                   1e-10, "X^n readout is p");
            w.feed(1.0 - std::abs(inner_product(
                       state, outcomes[static_cast<std::size_t>(label.p)].post_state)),
                   1e-10, "Bell state preserved");
        }
    }
    return w.result(id);
}

CheckResult check_theorem2_decomposition(RandomSource rng) {
    const std::string id = "outsourcing/theorem2_decomposition";
    Worst w;
    for (int d = 2; d <= 4; ++d) {
        for (int n_parts : {2, 3}) {
            std::vector<DenseOperator> parts;
            DenseOperator joint = DenseOperator::identity(d, 1);
            for (int m = 0; m < n_parts; ++m) {
                parts.push_back(random_unitary(d, 1, rng));
                joint = m == 0 ? parts.back() : joint.kron(parts.back());
            }
            const int total_wires = n_parts + 1;
            std::vector<int> monolithic_wires;
            monolithic_wires.push_back(n_parts);  // ancilla first
            for (int m = 0; m < n_parts; ++m) {
                monolithic_wires.push_back(m);
            }
            DenseOperator monolithic = reference::embed_via_kron(
                controlled_u(joint, d), monolithic_wires, total_wires);

            std::vector<int> order(static_cast<std::size_t>(n_parts));
            for (int m = 0; m < n_parts; ++m) {
                order[static_cast<std::size_t>(m)] = m;
            }
            for (int shuffle = 0; shuffle < 5; ++shuffle) {
                for (int i = n_parts - 1; i > 0; --i) {
                    std::swap(order[static_cast<std::size_t>(i)],
                              order[static_cast<std::size_t>(rng.uniform_int(0, i))]);
                }
                DenseOperator product = DenseOperator::identity(d, total_wires);
                for (int m : order) {
                    DenseOperator step = reference::embed_via_kron(
                        controlled_u(parts[static_cast<std::size_t>(m)], d),
                        {n_parts, m}, total_wires);
                    product = step * product;
                }
                w.feed(product.max_abs_diff(monolithic), 1e-12,
                       "pairwise controls vs monolithic controlled-u");
            }
        }
    }
    return w.result(id);
}

CheckResult check_theorem3_forms(RandomSource rng) {
    const std::string id = "outsourcing/theorem3_forms";
    Worst w;
    for (int d : {2, 3, 5}) {
        Circuit hadamard = parity_circuit_hadamard_form(d);
        Circuit reversed = parity_circuit_reversed_form(d);
        w.expect(reversed.two_qudit_gate_count == 2 && reversed.steps.size() == 2,
                 "reversed form must drop all six Hadamards");
        w.expect(hadamard.steps.size() == 8, "Hadamard form: 6 Fourier gates + 2 csums");
        for (int trial = 0; trial < 12; ++trial) {
            StateVector input = random_state(d, 2, rng);
            StateVector via_hadamard = run_circuit(attach_zero_wire(input), hadamard);
            StateVector via_reversed = run_circuit(attach_zero_wire(input), reversed);
            // Closed form: sum_jk alpha_jk |j>|k>|k-j mod d>.
            StateVector expected = StateVector::zero_state(d, 3);
            expected.amps.assign(via_hadamard.amps.size(), Complex{0.0, 0.0});
            for (int j = 0; j < d; ++j) {
                for (int k = 0; k < d; ++k) {
                    expected.amps[expected.index_of({j, k, (k - j + d) % d})] =
                        input.amps[input.index_of({j, k})];
                }
            }
            w.feed(max_abs_diff(via_hadamard, expected), 1e-10, "Hadamard form vs closed form");
            w.feed(max_abs_diff(via_reversed, expected), 1e-10, "reversed form vs closed form");
            w.feed(max_abs_diff(via_hadamard, via_reversed), 1e-10, "forms agree");
        }
        // Agreement on every member of an ensemble extends the identity to
        // any mixture of them.
        for (int member = 0; member < 10; ++member) {
            StateVector input = random_state(d, 2, rng);
            StateVector via_hadamard = run_circuit(attach_zero_wire(input), hadamard);
            StateVector via_reversed = run_circuit(attach_zero_wire(input), reversed);
            w.feed(max_abs_diff(via_hadamard, via_reversed), 1e-10, "ensemble member");
        }
    }
    return w.result(id);
}

CheckResult check_conjugation_identity(RandomSource) {
    const std::string id = "outsourcing/conjugation_identity";
    Worst w;
    for (int d = 2; d <= 7; ++d) {
        for (int j = 0; j < d; ++j) {
            ConjugationCheck check = zz_conjugation_identity_check(d, j);
            w.feed(check.max_deviation, 1e-12, "conjugation identity");
            w.expect(check.ok, "zz_conjugation_identity_check must report ok");
        }
    }
    return w.result(id);
}

CheckResult check_closure_maps(RandomSource) {
    const std::string id = "outsourcing/closure_maps";
    Worst w;
    for (int d = 2; d <= 7; ++d) {
        for (HadamardVariant variant :
             {HadamardVariant::HTensorHDag, HadamardVariant::HDagTensorH}) {
            std::vector<ClosureEntry> entries = closure_map(d, variant);
            std::vector<bool> hit(entries.size(), false);
            for (const ClosureEntry& entry : entries) {
                int expected_p = variant == HadamardVariant::HTensorHDag
                                     ? (d - entry.from.q[0]) % d
                                     : entry.from.q[0];
                int expected_q = variant == HadamardVariant::HTensorHDag
                                     ? entry.from.p
                                     : (d - entry.from.p) % d;
                w.expect(entry.to.p == expected_p && entry.to.q[0] == expected_q,
                         "closure label map");
                w.feed(std::abs(std::abs(entry.phase) - 1.0), 1e-12, "closure phase modulus");
                std::size_t target = static_cast<std::size_t>(entry.to.p) *
                                         static_cast<std::size_t>(d) +
                                     static_cast<std::size_t>(entry.to.q[0]);
                w.expect(!hit[target], "closure map must be a bijection");
                hit[target] = true;
            }
        }
    }
    // Pinned case: H (x) Hdag sends (p,q) = (1,2) at d=3 to (1,1).
    std::vector<ClosureEntry> entries = closure_map(3, HadamardVariant::HTensorHDag);
    for (const ClosureEntry& entry : entries) {
        if (entry.from.p == 1 && entry.from.q[0] == 2) {
            w.expect(entry.to.p == 1 && entry.to.q[0] == 1, "(1,2) must map to (1,1) at d=3");
        }
    }
    return w.result(id);
}

CheckResult check_compatible_pairs(RandomSource rng) {
    const std::string id = "outsourcing/compatible_pairs";
    Worst w;
    for (int d : {2, 3, 5}) {
        // Two diagonal unitaries sharing an eigenbasis commute; measuring
        // them in either order gives the same joint distribution and states.
        DenseOperator basis = random_unitary(d, 1, rng);
        std::vector<int> phases_a(static_cast<std::size_t>(d));
        std::vector<int> phases_b(static_cast<std::size_t>(d));
        for (int c = 0; c < d; ++c) {
            phases_a[static_cast<std::size_t>(c)] = rng.uniform_int(0, d - 1);
            phases_b[static_cast<std::size_t>(c)] = rng.uniform_int(0, d - 1);
        }
        DiagonalUnitarySpec spec_a = DiagonalUnitarySpec::create(d, basis, phases_a);
        DiagonalUnitarySpec spec_b = DiagonalUnitarySpec::create(d, basis, phases_b);
        DenseOperator mat_a = spec_a.to_matrix();
        DenseOperator mat_b = spec_b.to_matrix();
        w.feed((mat_a * mat_b).max_abs_diff(mat_b * mat_a), 1e-12, "specs commute");

        StateVector state = random_state(d, 1, rng);
        auto joint = [&](const DiagonalUnitarySpec& first, const DiagonalUnitarySpec& second) {
            std::map<std::pair<int, int>, std::pair<double, StateVector>> table;
            for (const MeasurementOutcome& one : outsource_measure(first, state)) {
                if (one.probability < 1e-14) {
                    continue;
                }
                for (const MeasurementOutcome& two : outsource_measure(second, one.post_state)) {
                    if (one.probability * two.probability < 1e-14) {
                        continue;
                    }
                    table[{one.outcome, two.outcome}] = {one.probability * two.probability,
                                                         two.post_state};
                }
            }
            return table;
        };
        auto ab = joint(spec_a, spec_b);
        auto ba = joint(spec_b, spec_a);
        w.expect(ab.size() == ba.size(), "same support either order");
        for (const auto& [key, value] : ab) {
            auto flipped = ba.find({key.second, key.first});
            w.expect(flipped != ba.end(), "joint outcome present in both orders");
            if (flipped != ba.end()) {
                w.feed(std::abs(value.first - flipped->second.first), 1e-10,
                       "joint probability order-independent");
                w.expect(
                    equal_up_to_global_phase(value.second, flipped->second.second).match,
                    "final state order-independent");
            }
        }
    }
    return w.result(id);
}

// ---------------------------------------------------------------- netcost --

CheckResult check_printed_formulas(RandomSource) {
    const std::string id = "netcost/printed_formulas";
    Worst w;
    for (int n = 2; n <= 50; ++n) {
        Topology star{TopologyKind::Star, n, 1};
        Topology linear_end{TopologyKind::Linear, n, 1};

        CostReport star_protocol = protocol_cost(star);
        w.expect(star_protocol.qudits_moved == 3 * n - 2, "star protocol moves 3n-2");
        w.expect(star_protocol.two_qudit_gates == 3 * n - 2, "protocol uses 3n-2 gates");

        CostReport star_baseline = baseline_cost(star);
        w.expect(star_baseline.qudits_moved == 2 * (n - 1), "star baseline moves 2(n-1)");
        w.expect(star_baseline.two_qudit_gates == 2 * (n - 1), "baseline uses 2(n-1) gates");

        CostReport linear_protocol = protocol_cost(linear_end);
        w.expect(linear_protocol.qudits_moved == 2 * (n - 1), "linear protocol moves 2(n-1)");
        w.expect(linear_protocol.two_qudit_gates == 3 * n - 2, "protocol uses 3n-2 gates");

        CostReport linear_baseline = baseline_cost(linear_end);
        w.expect(linear_baseline.qudits_moved == n * (n - 1),
                 "linear baseline from an end moves n(n-1)");

        if (n % 2 == 1) {
            Topology middle{TopologyKind::Linear, n, (n + 1) / 2};
            w.expect(baseline_cost(middle).qudits_moved == (n * n - 1) / 2,
                     "odd-n central baseline moves (n^2-1)/2");
        } else {
            Topology middle{TopologyKind::Linear, n, n / 2};
            Topology middle2{TopologyKind::Linear, n, n / 2 + 1};
            w.expect(baseline_cost(middle).qudits_moved == n * n / 2 &&
                         baseline_cost(middle2).qudits_moved == n * n / 2,
                     "even-n central baseline moves n^2/2");
        }

        // Structural invariants of every report.
        for (const CostReport& report :
             {star_protocol, star_baseline, linear_protocol, linear_baseline}) {
            int edge_sum = 0;
            for (int t : report.per_edge_traversals) {
                edge_sum += t;
            }
            w.expect(edge_sum == report.qudits_moved, "edge tallies sum to qudits_moved");
            int gate_sum = 0;
            for (int g : report.per_player_gate_counts) {
                gate_sum += g;
            }
            w.expect(gate_sum == report.two_qudit_gates, "player tallies sum to gate count");
        }
    }
    {
        bool threw = false;
        try {
            baseline_cost(Topology{TopologyKind::Star, 4, 2});
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        w.expect(threw, "star baseline with Alice off the hub must be rejected");
    }
    return w.result(id);
}

CheckResult check_gate_crosscheck(RandomSource) {
    const std::string id = "netcost/gate_crosscheck";
    Worst w;
    for (int n = 2; n <= 8; ++n) {
        auto emitted = [&](const ParityPairSet& pairs) {
            int total = build_phase_circuit(2, n).two_qudit_gate_count;
            for (const auto& pair : pairs.pairs) {
                total += build_parity_circuit(2, n, pair).two_qudit_gate_count;
            }
            return total;
        };
        w.expect(protocol_cost(Topology{TopologyKind::Linear, n, 1}).two_qudit_gates ==
                     emitted(ParityPairSet::consecutive(n)),
                 "linear report matches emitted circuits");
        w.expect(protocol_cost(Topology{TopologyKind::Star, n, 1}).two_qudit_gates ==
                     emitted(ParityPairSet::star(0, n)),
                 "star report matches emitted circuits");
    }
    return w.result(id);
}

CheckResult check_baseline_transform(RandomSource) {
    const std::string id = "netcost/baseline_transform";
    Worst w;
    const std::vector<std::pair<int, int>> grid = {{2, 2}, {2, 3}, {2, 4},
                                                   {3, 2}, {3, 3}, {5, 2}};
    for (const auto& [d, n] : grid) {
        for (const BellIndex& label : enumerate_bell_basis(d, n)) {
            StateVector state = bell_qudit(label);
            StateVector flat = baseline_transform(state);
            auto digits = as_product_digits(flat, 1e-12);
            w.expect(digits.has_value(), "transform must yield a product state");
            if (digits.has_value()) {
                std::vector<int> expected;
                expected.push_back(label.p);
                std::vector<int> v = digit_offsets(label);
                for (int k = 1; k < n; ++k) {
                    expected.push_back(((v[static_cast<std::size_t>(k)] -
                                         v[static_cast<std::size_t>(k - 1)]) %
                                            d +
                                        d) %
                                       d);
                }
                w.expect(*digits == expected, "product digits are (p, parity differences)");
            }
            w.feed(max_abs_diff(baseline_transform_inverse(flat), state), 1e-12,
                   "inverse restores the input exactly");
        }
    }
    // Pinned cases.
    StateVector pinned = baseline_transform(bell_qudit(BellIndex{3, 3, 2, {1, 0}}));
    auto digits = as_product_digits(pinned, 1e-12);
    w.expect(digits.has_value() && *digits == std::vector<int>{2, 1, 2},
             "d=3 (p=2, q=(1,0)) flattens to |2>|1>|2>");
    auto plus = as_product_digits(baseline_transform(bell_qudit(BellIndex{2, 2, 0, {0}})), 1e-12);
    w.expect(plus.has_value() && *plus == std::vector<int>{0, 0}, "psi-plus flattens to |00>");
    auto minus = as_product_digits(baseline_transform(bell_qudit(BellIndex{2, 2, 1, {1}})), 1e-12);
    w.expect(minus.has_value() && *minus == std::vector<int>{1, 1}, "phi-minus flattens to |11>");
    // A non-Bell input stays entangled but is not rejected.
    StateVector skew = StateVector::zero_state(2, 2);
    skew.amps = {Complex{std::sqrt(0.5), 0}, Complex{std::sqrt(0.5), 0}, Complex{0, 0},
                 Complex{0, 0}};
    StateVector mapped = baseline_transform(skew);
    w.expect(!as_product_digits(mapped, 1e-12).has_value(),
             "non-Bell input yields a non-product output");
    return w.result(id);
}

CheckResult check_scaling(RandomSource) {
    const std::string id = "netcost/scaling";
    Worst w;
    // Second differences: exactly 0 for the protocol (linear in n), exactly
    // 2 for the destructive baseline (quadratic in n).
    for (int n = 2; n <= 48; ++n) {
        int p0 = protocol_cost(Topology{TopologyKind::Linear, n, 1}).qudits_moved;
        int p1 = protocol_cost(Topology{TopologyKind::Linear, n + 1, 1}).qudits_moved;
        int p2 = protocol_cost(Topology{TopologyKind::Linear, n + 2, 1}).qudits_moved;
        w.expect(p2 - 2 * p1 + p0 == 0, "protocol cost is linear");
        int b0 = baseline_cost(Topology{TopologyKind::Linear, n, 1}).qudits_moved;
        int b1 = baseline_cost(Topology{TopologyKind::Linear, n + 1, 1}).qudits_moved;
        int b2 = baseline_cost(Topology{TopologyKind::Linear, n + 2, 1}).qudits_moved;
        w.expect(b2 - 2 * b1 + b0 == 2, "baseline cost is quadratic");
    }
    return w.result(id);
}

// ---------------------------------------------------------------- registry --

struct Registered {
    std::string suite;
    std::string id;
    CheckFn fn;
};

const std::vector<Registered>& registry() {
    static const std::vector<Registered> checks = {
        {"tensor", "tensor/basis_indexing", check_basis_indexing},
        {"tensor", "tensor/norm_preservation", check_norm_preservation},
        {"tensor", "tensor/kron_oracle", check_kron_oracle},
        {"tensor", "tensor/measure_distribution", check_measure_distribution},
        {"tensor", "tensor/global_phase", check_global_phase},
        {"tensor", "tensor/clock_on_wire", check_clock_on_wire},
        {"tensor", "tensor/memory_cap", check_memory_cap},
        {"gates", "gates/unitarity", check_unitarity},
        {"gates", "gates/fourier_relation", check_fourier_relation},
        {"gates", "gates/csum_algebra", check_csum_algebra},
        {"gates", "gates/commutation_backbone", check_commutation_backbone},
        {"bell", "bell/orthonormality", check_orthonormality},
        {"bell", "bell/eigenstate_labels", check_eigenstate_labels},
        {"bell", "bell/qubit_reduction", check_qubit_reduction},
        {"discriminator", "discriminator/phase_readout", check_phase_readout},
        {"discriminator", "discriminator/parity_readout", check_parity_readout},
        {"discriminator", "discriminator/round_trip", check_round_trip},
        {"discriminator", "discriminator/order_independence", check_order_independence},
        {"discriminator", "discriminator/gate_budget_and_text", check_gate_budget_and_text},
        {"discriminator", "discriminator/sector_projection", check_sector_projection},
        {"discriminator", "discriminator/reconstruction", check_reconstruction},
        {"outsourcing", "outsourcing/theorem1_random", check_theorem1_random},
        {"outsourcing", "outsourcing/theorem1_eigenstates", check_theorem1_eigenstates},
        {"outsourcing", "outsourcing/theorem1_bell", check_theorem1_bell},
        {"outsourcing", "outsourcing/theorem2_decomposition", check_theorem2_decomposition},
        {"outsourcing", "outsourcing/theorem3_forms", check_theorem3_forms},
        {"outsourcing", "outsourcing/conjugation_identity", check_conjugation_identity},
        {"outsourcing", "outsourcing/closure_maps", check_closure_maps},
        {"outsourcing", "outsourcing/compatible_pairs", check_compatible_pairs},
        {"netcost", "netcost/printed_formulas", check_printed_formulas},
        {"netcost", "netcost/gate_crosscheck", check_gate_crosscheck},
        {"netcost", "netcost/baseline_transform", check_baseline_transform},
        {"netcost", "netcost/scaling", check_scaling},
    };
    return checks;
}

std::uint64_t case_seed(std::uint64_t base, const std::string& id) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (char c : id) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ULL;
    }
    return hash ^ base;
}

CheckResult run_one(const Registered& check, std::uint64_t seed) {
    try {
        return check.fn(RandomSource(case_seed(seed, check.id)));
    } catch (const std::exception& e) {
        return fail_with(check.id, std::string("unexpected exception: ") + e.what());
    }
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"tensor",        "gates",      "bell",
                                                   "discriminator", "outsourcing", "netcost"};
    return names;
}

std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options) {
    const auto& names = verify_suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        throw std::invalid_argument("run_verify: unknown suite '" + suite + "'");
    }
    std::vector<const Registered*> selected;
    for (const Registered& check : registry()) {
        if (suite == "all" || check.suite == suite) {
            selected.push_back(&check);
        }
    }

    int workers = options.workers;
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
    }
    workers = std::clamp(workers, 1, 8);

    std::vector<CheckResult> results(selected.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < selected.size(); ++i) {
            results[i] = run_one(*selected[i], options.seed);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto drain = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= selected.size()) {
                    return;
                }
                results[i] = run_one(*selected[i], options.seed);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back(drain);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return results;
}

}  // namespace quditsim
