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
#include "quditsim/state.hpp"

namespace quditsim {
namespace {

TEST_CASE("maximally entangled states by explicit construction", "[bell]") {
    // d=3, n=2, p=1, q=(2): (1/sqrt3) sum_j w^j |j, 2+j>.
    StateVector state = bell_qudit(BellIndex{3, 2, 1, {2}});
    double inv = 1.0 / std::sqrt(3.0);
    for (int j = 0; j < 3; ++j) {
        Complex expected = root_of_unity(3, j) * inv;
        CHECK(std::abs(state.amps[static_cast<std::size_t>(state.index_of({j, (2 + j) % 3}))] -
                       expected) < 1e-15);
    }
    CHECK(std::abs(state.norm() - 1.0) < 1e-15);

    // n=3: the shared shift runs down all wires.
    StateVector three = bell_qudit(BellIndex{2, 3, 1, {0, 1}});
    double half = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(three.amps[static_cast<std::size_t>(three.index_of({0, 0, 1}))] - half) <
          1e-15);
    CHECK(std::abs(three.amps[static_cast<std::size_t>(three.index_of({1, 1, 0}))] + half) <
          1e-15);
}

TEST_CASE("bell basis is orthonormal and completely enumerated", "[bell]") {
    for (auto [d, n] : {std::pair{2, 3}, std::pair{3, 2}}) {
        std::vector<BellIndex> labels = enumerate_bell_basis(d, n);
        std::size_t dim = 1;
        for (int i = 0; i < n; ++i) {
            dim *= static_cast<std::size_t>(d);
        }
        REQUIRE(labels.size() == dim);
        CHECK(labels.front().p == 0);
        std::vector<StateVector> states;
        for (const BellIndex& label : labels) {
            states.push_back(bell_qudit(label));
        }
        for (std::size_t i = 0; i < states.size(); ++i) {
            for (std::size_t j = i; j < states.size(); ++j) {
                Complex overlap = inner_product(states[i], states[j]);
                if (i == j) {
                    CHECK(std::abs(overlap - Complex{1.0, 0.0}) < 1e-12);
                } else {
                    CHECK(std::abs(overlap) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("digit offsets and relative parities", "[bell]") {
    BellIndex label{3, 3, 2, {1, 0}};
    std::vector<int> v = digit_offsets(label);
    CHECK(v == std::vector<int>{0, 1, 0});
    CHECK(relative_parity(label, 0, 1) == 1);
    CHECK(relative_parity(label, 1, 2) == 2);  // (0 - 1) mod 3
    CHECK(relative_parity(label, 0, 2) == 0);
    CHECK(relative_parity(label, 2, 0) == 0);
}

TEST_CASE("two-level family matches the d=2 qudit family", "[bell]") {
    for (int n = 2; n <= 4; ++n) {
        for (int x = 0; x < (1 << (n - 1)); ++x) {
            for (BellSign sign : {BellSign::Plus, BellSign::Minus}) {
                QubitBellIndex qubit{n, x, sign};
                BellIndex mapped = qubit_index_to_bell(qubit);
                CHECK(mapped.p == (sign == BellSign::Minus ? 1 : 0));
                CHECK(max_abs_diff(bell_qubit(qubit), bell_qudit(mapped)) < 1e-15);
            }
        }
    }
    // x's bits populate the offsets most-significant first.
    BellIndex mapped = qubit_index_to_bell(QubitBellIndex{4, 0b011, BellSign::Plus});
    CHECK(mapped.q == std::vector<int>{0, 1, 1});
}

TEST_CASE("label validation", "[bell]") {
    CHECK_THROWS_AS(bell_qudit(BellIndex{3, 2, 3, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(bell_qudit(BellIndex{3, 2, -1, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(bell_qudit(BellIndex{3, 2, 0, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(bell_qudit(BellIndex{3, 2, 0, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(bell_qudit(BellIndex{1, 2, 0, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(bell_qudit(BellIndex{2, 1, 0, {}}), std::invalid_argument);
}

}  // namespace
}  // namespace quditsim
