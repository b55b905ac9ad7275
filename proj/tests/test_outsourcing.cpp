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
#include <stdexcept>

#include "quditsim/bell.hpp"
#include "quditsim/gates.hpp"
#include "quditsim/outsourcing.hpp"
#include "quditsim/random.hpp"
#include "quditsim/reference.hpp"
#include "quditsim/state.hpp"

namespace quditsim {
namespace {

DiagonalUnitarySpec clock_spec(int d) {
    std::vector<int> phases(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        phases[static_cast<std::size_t>(j)] = j;
    }
    return DiagonalUnitarySpec::create(d, DenseOperator::identity(d, 1), phases);
}

TEST_CASE("diagonal specs validate and rebuild their matrix", "[outsourcing]") {
    CHECK(clock_spec(3).to_matrix().max_abs_diff(zd_matrix(3)) < 1e-15);

    RandomSource rng(23);
    DiagonalUnitarySpec spec = random_diagonal_spec(4, rng);
    DenseOperator u = spec.to_matrix();
    CHECK(u.unitarity_error() < 1e-12);
    // Projectors resolve the identity and are idempotent.
    DenseOperator sum = spec.class_projector(0);
    for (int j = 1; j < 4; ++j) {
        DenseOperator proj = spec.class_projector(j);
        CHECK((proj * proj).max_abs_diff(proj) < 1e-12);
        for (std::size_t i = 0; i < sum.entries.size(); ++i) {
            sum.entries[i] += proj.entries[i];
        }
    }
    CHECK(sum.max_abs_diff(DenseOperator::identity(4, 1)) < 1e-12);

    DenseOperator skewed = DenseOperator::identity(2, 1);
    skewed.entries[1] = Complex{0.7, 0.0};
    CHECK_THROWS_AS(DiagonalUnitarySpec::create(2, skewed, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(DiagonalUnitarySpec::create(2, DenseOperator::identity(2, 1), {0, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DiagonalUnitarySpec::create(2, DenseOperator::identity(2, 1), {0}),
                    std::invalid_argument);
}

TEST_CASE("outsourced readout matches the projector oracle", "[outsourcing]") {
    RandomSource rng(29);
    for (int d : {2, 3, 5}) {
        for (int trial = 0; trial < 10; ++trial) {
            DiagonalUnitarySpec spec = random_diagonal_spec(d, rng);
            StateVector state = random_state(d, 1, rng);
            auto circuit_outcomes = outsource_measure(spec, state);
            auto oracle_outcomes = reference::projector_measure(spec, state);
            REQUIRE(circuit_outcomes.size() == static_cast<std::size_t>(d));
            CHECK(reference::total_variation_distance(circuit_outcomes, oracle_outcomes) <
                  1e-10);
            for (int j = 0; j < d; ++j) {
                if (oracle_outcomes[static_cast<std::size_t>(j)].probability > 1e-12) {
                    CHECK(max_abs_diff(
                              circuit_outcomes[static_cast<std::size_t>(j)].post_state,
                              oracle_outcomes[static_cast<std::size_t>(j)].post_state) < 1e-10);
                }
            }
        }
    }
    // Degenerate spec: all classes equal leaves any state untouched.
    DiagonalUnitarySpec flat =
        DiagonalUnitarySpec::create(3, DenseOperator::identity(3, 1), {1, 1, 1});
    StateVector state = random_state(3, 1, rng);
    auto outcomes = outsource_measure(flat, state);
    CHECK_THAT(outcomes[1].probability, Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK(outcomes[0].probability < 1e-12);
    CHECK(max_abs_diff(outcomes[1].post_state, state) < 1e-10);
}

TEST_CASE("outsourced readout rejects mismatched shapes", "[outsourcing]") {
    StateVector state = StateVector::zero_state(3, 1);
    CHECK_THROWS_AS(outsource_measure(clock_spec(2), state), std::invalid_argument);
    StateVector wide = StateVector::zero_state(3, 2);
    CHECK_THROWS_AS(outsource_measure(clock_spec(3), wide), std::invalid_argument);
}

TEST_CASE("separable parts control digit sums", "[outsourcing]") {
    // Z (x) Z on |j,k> reads (j + k) mod d deterministically.
    const int d = 3;
    std::vector<DenseOperator> parts = {zd_matrix(d), zd_matrix(d)};
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            StateVector state = StateVector::basis_state(d, 2, {j, k});
            auto outcomes = outsource_measure_separable(parts, state);
            CHECK_THAT(outcomes[static_cast<std::size_t>((j + k) % d)].probability,
                       Catch::Matchers::WithinAbs(1.0, 1e-12));
        }
    }
    // X (x) X on a two-party entangled pair reads its phase label.
    for (const BellIndex& label : enumerate_bell_basis(d, 2)) {
        StateVector state = bell_qudit(label);
        auto outcomes =
            outsource_measure_separable({xd_matrix(d), xd_matrix(d)}, state);
        CHECK_THAT(outcomes[static_cast<std::size_t>(label.p)].probability,
                   Catch::Matchers::WithinAbs(1.0, 1e-12));
        CHECK(std::abs(inner_product(
                  state, outcomes[static_cast<std::size_t>(label.p)].post_state)) >
              1.0 - 1e-10);
    }
}

TEST_CASE("pairwise controlled decomposition is exact", "[outsourcing]") {
    RandomSource rng(31);
    const int d = 3;
    std::vector<DenseOperator> parts = {random_unitary(d, 1, rng), random_unitary(d, 1, rng)};
    Circuit circuit = decompose_controlled_u(parts);
    CHECK(circuit.two_qudit_gate_count == 2);

    StateVector state = random_state(d, 2, rng);
    StateVector via_steps = run_circuit(attach_zero_wire(state), circuit);

    DenseOperator joint = controlled_u(parts[0].kron(parts[1]), d);
    StateVector via_joint = reference::apply_dense(
        reference::embed_via_kron(joint, {2, 0, 1}, 3), attach_zero_wire(state));
    CHECK(max_abs_diff(via_steps, via_joint) < 1e-12);
}

TEST_CASE("relative-parity circuit forms agree", "[outsourcing]") {
    RandomSource rng(37);
    for (int d : {2, 3}) {
        Circuit hadamard = parity_circuit_hadamard_form(d);
        Circuit reversed = parity_circuit_reversed_form(d);
        StateVector input = random_state(d, 2, rng);
        StateVector a = run_circuit(attach_zero_wire(input), hadamard);
        StateVector b = run_circuit(attach_zero_wire(input), reversed);
        CHECK(max_abs_diff(a, b) < 1e-10);
        // The ancilla records k - j for basis input |j,k>.
        StateVector basis = StateVector::basis_state(d, 2, {1, 0});
        StateVector mapped = run_circuit(attach_zero_wire(basis), reversed);
        CHECK(max_abs_diff(mapped, StateVector::basis_state(d, 3, {1, 0, (0 - 1 + d) % d})) <
              1e-12);
    }
}

TEST_CASE("conjugation identity between shift and clock pairs", "[outsourcing]") {
    for (int d = 2; d <= 7; ++d) {
        for (int j = 0; j < d; ++j) {
            ConjugationCheck check = zz_conjugation_identity_check(d, j);
            CHECK(check.ok);
            CHECK(check.max_deviation < 1e-12);
        }
    }
}

TEST_CASE("two-sided Fourier layers permute the basis labels", "[outsourcing]") {
    for (int d : {2, 3, 5}) {
        for (HadamardVariant variant :
             {HadamardVariant::HTensorHDag, HadamardVariant::HDagTensorH}) {
            std::vector<ClosureEntry> entries = closure_map(d, variant);
            REQUIRE(entries.size() == static_cast<std::size_t>(d * d));
            for (const ClosureEntry& entry : entries) {
                int p = entry.from.p;
                int q = entry.from.q[0];
                if (variant == HadamardVariant::HTensorHDag) {
                    CHECK(entry.to.p == (d - q) % d);
                    CHECK(entry.to.q[0] == p);
                } else {
                    CHECK(entry.to.p == q);
                    CHECK(entry.to.q[0] == (d - p) % d);
                }
                CHECK(std::abs(entry.phase - root_of_unity(d, -static_cast<long long>(p) * q)) <
                      1e-10);
            }
        }
    }
}

}  // namespace
}  // namespace quditsim
