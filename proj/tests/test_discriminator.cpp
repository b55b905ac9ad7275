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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "quditsim/bell.hpp"
#include "quditsim/discriminator.hpp"
#include "quditsim/state.hpp"

namespace quditsim {
namespace {

TEST_CASE("every basis label is recovered without disturbance", "[discriminator]") {
    for (auto [d, n] : {std::pair{3, 3}, std::pair{5, 2}}) {
        for (const BellIndex& label : enumerate_bell_basis(d, n)) {
            StateVector state = bell_qudit(label);
            DiscriminationResult result = discriminate(state);
            CHECK(result.p == label.p);
            CHECK(result.q == label.q);
            CHECK(result.deterministic);
            CHECK(std::abs(inner_product(state, result.post_state)) > 1.0 - 1e-10);
        }
    }
}

TEST_CASE("readout conventions", "[discriminator]") {
    StateVector state = bell_qudit(BellIndex{5, 2, 3, {2}});

    DiscriminationResult standard = discriminate(state);
    CHECK(standard.ancilla_outcomes == std::vector<int>{3, 2});

    // The swapped preparation reads the complement but decodes the same label.
    DiscriminateOptions options;
    options.phase_convention = PhaseConvention::PrepareHDagDecodeH;
    DiscriminationResult swapped = discriminate(state, ParityPairSet::consecutive(2), options);
    CHECK(swapped.ancilla_outcomes == std::vector<int>{2, 2});
    CHECK(swapped.p == 3);
    CHECK(swapped.q == std::vector<int>{2});

    // Circuit order has no effect on a Bell input.
    options = DiscriminateOptions{};
    options.parity_before_phase = true;
    DiscriminationResult reordered = discriminate(state, ParityPairSet::consecutive(2), options);
    CHECK(reordered.ancilla_outcomes == standard.ancilla_outcomes);
    CHECK(max_abs_diff(reordered.post_state, standard.post_state) < 1e-10);
}

TEST_CASE("alternative parity pair sets", "[discriminator]") {
    BellIndex label{3, 4, 2, {1, 0, 2}};
    StateVector state = bell_qudit(label);

    DiscriminationResult star = discriminate(state, ParityPairSet::star(0, 4));
    CHECK(star.p == label.p);
    CHECK(star.q == label.q);

    ParityPairSet custom;
    custom.pairs = {{2, 3}, {0, 2}, {0, 1}};
    DiscriminationResult shuffled = discriminate(state, custom);
    CHECK(shuffled.p == label.p);
    CHECK(shuffled.q == label.q);

    ParityPairSet incomplete;
    incomplete.pairs = {{0, 1}, {2, 3}};
    CHECK_THROWS_AS(discriminate(state, incomplete), std::invalid_argument);
}

TEST_CASE("superpositions collapse onto the reported sector", "[discriminator]") {
    // 0.6 |psi+> + 0.8i |phi->: weights 0.36 and 0.64.
    StateVector psi_plus = bell_qudit(BellIndex{2, 2, 0, {0}});
    StateVector phi_minus = bell_qudit(BellIndex{2, 2, 1, {1}});
    StateVector mixed = psi_plus;
    for (std::size_t i = 0; i < mixed.amps.size(); ++i) {
        mixed.amps[i] = 0.6 * psi_plus.amps[i] + Complex{0.0, 0.8} * phi_minus.amps[i];
    }
    REQUIRE(std::abs(mixed.norm() - 1.0) < 1e-12);

    DiscriminationResult result = discriminate(mixed);
    CHECK(result.p == 1);
    CHECK(result.q == std::vector<int>{1});
    CHECK_FALSE(result.deterministic);
    PhaseComparison collapsed = equal_up_to_global_phase(phi_minus, result.post_state);
    CHECK(collapsed.match);
}

TEST_CASE("ancilla readout exposes outcome probabilities", "[discriminator]") {
    StateVector psi_plus = bell_qudit(BellIndex{2, 2, 0, {0}});
    StateVector psi_minus = bell_qudit(BellIndex{2, 2, 1, {0}});
    StateVector mixed = psi_plus;
    double w = std::sqrt(0.75);
    for (std::size_t i = 0; i < mixed.amps.size(); ++i) {
        mixed.amps[i] = w * psi_plus.amps[i] + 0.5 * psi_minus.amps[i];
    }
    AncillaReadout readout = run_ancilla_circuit(mixed, build_phase_circuit(2, 2));
    CHECK(readout.outcome == 0);
    CHECK_THAT(readout.probability, Catch::Matchers::WithinAbs(0.75, 1e-12));
    CHECK(readout.post_state.n_wires == 2);

    AncillaReadout pure = run_ancilla_circuit(psi_minus, build_phase_circuit(2, 2));
    CHECK(pure.outcome == 1);
    CHECK_THAT(pure.probability, Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("label reconstruction from parity outcomes", "[discriminator]") {
    ParityPairSet chain;
    chain.pairs = {{0, 1}, {1, 2}};
    CHECK(reconstruct_q({2, 2}, chain, 3, 3) == std::vector<int>{2, 1});

    ParityPairSet reversed;
    reversed.pairs = {{1, 0}, {2, 1}};
    CHECK(reconstruct_q({1, 1}, reversed, 3, 3) == std::vector<int>{2, 1});

    CHECK_THROWS_AS(reconstruct_q({0, 0, 0}, chain, 3, 3), std::invalid_argument);

    ParityPairSet cyclic;
    cyclic.pairs = {{0, 1}, {1, 2}, {0, 2}};
    CHECK(reconstruct_q({1, 1, 2}, cyclic, 3, 3) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(reconstruct_q({1, 1, 0}, cyclic, 3, 3), std::domain_error);
}

TEST_CASE("circuit budgets", "[discriminator]") {
    for (int d : {2, 3}) {
        for (int n = 2; n <= 6; ++n) {
            int total = build_phase_circuit(d, n).two_qudit_gate_count;
            for (int k = 1; k < n; ++k) {
                total += build_parity_circuit(d, n, {k - 1, k}).two_qudit_gate_count;
            }
            CHECK(total == 3 * n - 2);
        }
    }
    CHECK_THROWS_AS(build_parity_circuit(3, 3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_parity_circuit(3, 3, {0, 3}), std::invalid_argument);
}

}  // namespace
}  // namespace quditsim
