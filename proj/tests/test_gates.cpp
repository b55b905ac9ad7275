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

#include "quditsim/gates.hpp"
#include "quditsim/random.hpp"
#include "quditsim/state.hpp"

namespace quditsim {
namespace {

TEST_CASE("roots of unity", "[gates]") {
    CHECK(std::abs(root_of_unity(4, 1) - Complex{0.0, 1.0}) < 1e-15);
    CHECK(std::abs(root_of_unity(2, 1) - Complex{-1.0, 0.0}) < 1e-15);
    CHECK(std::abs(root_of_unity(3, 3) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(root_of_unity(3, -1) - root_of_unity(3, 2)) < 1e-15);
}

TEST_CASE("clock, shift, and Fourier matrices", "[gates]") {
    const int d = 3;
    DenseOperator z = zd_matrix(d);
    DenseOperator x = xd_matrix(d);
    DenseOperator h = hd_matrix(d);

    // Clock: diagonal powers of the primitive root.
    for (int j = 0; j < d; ++j) {
        CHECK(std::abs(z.at(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) -
                       root_of_unity(d, j)) < 1e-15);
    }
    // Shift: |j> -> |j-1 mod d>.
    StateVector zero = StateVector::basis_state(d, 1, {0});
    CHECK(max_abs_diff(apply_embedded(zero, x, {0}), StateVector::basis_state(d, 1, {2})) <
          1e-15);
    StateVector two = StateVector::basis_state(d, 1, {2});
    CHECK(max_abs_diff(apply_embedded(two, x, {0}), StateVector::basis_state(d, 1, {1})) <
          1e-15);
    // Fourier: symmetric with entries w^{jk}/sqrt(d); not Hermitian for d>2.
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            CHECK(std::abs(h.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) -
                           root_of_unity(d, static_cast<long long>(j) * k) / std::sqrt(3.0)) <
                  1e-15);
        }
    }
    CHECK(h.max_abs_diff(h.dagger()) > 0.1);
    CHECK(hd_matrix(2).max_abs_diff(hd_matrix(2).dagger()) < 1e-15);

    for (int dim = 2; dim <= 7; ++dim) {
        CHECK(zd_matrix(dim).unitarity_error() < 1e-12);
        CHECK(xd_matrix(dim).unitarity_error() < 1e-12);
        CHECK(hd_matrix(dim).unitarity_error() < 1e-12);
        // The shift is the Fourier conjugate of the clock.
        DenseOperator hh = hd_matrix(dim);
        CHECK((hh * zd_matrix(dim) * hh.dagger()).max_abs_diff(xd_matrix(dim)) < 1e-12);
    }
}

TEST_CASE("csum subtracts or adds the control", "[gates]") {
    const int d = 3;
    DenseOperator sub = csum(d, false);
    DenseOperator add = csum(d, true);
    for (int c = 0; c < d; ++c) {
        for (int t = 0; t < d; ++t) {
            StateVector in = StateVector::basis_state(d, 2, {c, t});
            StateVector out_sub = apply_embedded(in, sub, {0, 1});
            StateVector out_add = apply_embedded(in, add, {0, 1});
            CHECK(max_abs_diff(out_sub,
                               StateVector::basis_state(d, 2, {c, ((t - c) % d + d) % d})) <
                  1e-15);
            CHECK(max_abs_diff(out_add, StateVector::basis_state(d, 2, {c, (t + c) % d})) <
                  1e-15);
        }
    }
    CHECK((sub * add).max_abs_diff(DenseOperator::identity(d, 2)) < 1e-15);
    // The subtracting form is exactly the controlled shift.
    CHECK(sub.max_abs_diff(controlled_u(xd_matrix(d), d)) < 1e-15);
}

TEST_CASE("controlled_u applies cumulative powers", "[gates]") {
    RandomSource rng(17);
    const int d = 4;
    DenseOperator u = random_unitary(d, 1, rng);
    DenseOperator cu = controlled_u(u, d);
    CHECK(cu.unitarity_error() < 1e-12);
    for (int c = 0; c < d; ++c) {
        DenseOperator expected = u.pow(c);
        for (int r = 0; r < d; ++r) {
            for (int col = 0; col < d; ++col) {
                CHECK(std::abs(cu.at(static_cast<std::size_t>(c * d + r),
                                     static_cast<std::size_t>(c * d + col)) -
                               expected.at(static_cast<std::size_t>(r),
                                           static_cast<std::size_t>(col))) < 1e-12);
            }
        }
    }
    DenseOperator skewed = DenseOperator::identity(2, 1);
    skewed.entries[1] = Complex{0.5, 0.0};  // not unitary
    CHECK_THROWS_AS(controlled_u(skewed, 2), std::invalid_argument);
    CHECK_THROWS_AS(controlled_u(xd_matrix(2), 3), std::invalid_argument);
}

TEST_CASE("gate specs realize their matrices", "[gates]") {
    CHECK(GateSpec{GateKind::Zd, 3}.realize().max_abs_diff(zd_matrix(3)) < 1e-15);
    CHECK(GateSpec{GateKind::Xd, 5}.realize().max_abs_diff(xd_matrix(5)) < 1e-15);
    CHECK(GateSpec{GateKind::Hd, 4}.realize().max_abs_diff(hd_matrix(4)) < 1e-15);
    CHECK(GateSpec{GateKind::HdDag, 4}.realize().max_abs_diff(hd_matrix(4).dagger()) < 1e-15);
    CHECK(GateSpec{GateKind::CSum, 3}.realize().max_abs_diff(csum(3, false)) < 1e-15);
    CHECK(GateSpec{GateKind::CSumDag, 3}.realize().max_abs_diff(csum(3, true)) < 1e-15);
    GateSpec powered{GateKind::Zd, 3, 2};
    CHECK(powered.realize().max_abs_diff(zd_matrix(3).pow(2)) < 1e-15);
    CHECK(GateSpec{GateKind::Zd, 3}.arity() == 1);
    CHECK(GateSpec{GateKind::CSum, 3}.arity() == 2);
}

TEST_CASE("operator algebra helpers", "[gates]") {
    DenseOperator z = zd_matrix(3);
    CHECK(z.pow(0).max_abs_diff(DenseOperator::identity(3, 1)) < 1e-15);
    CHECK(z.pow(3).max_abs_diff(DenseOperator::identity(3, 1)) < 1e-12);
    CHECK_THROWS_AS(z.pow(-1), std::invalid_argument);
    DenseOperator kron = z.kron(xd_matrix(3));
    CHECK(kron.arity == 2);
    CHECK(kron.unitarity_error() < 1e-12);
    // Left factor is the most significant wire.
    StateVector in = StateVector::basis_state(3, 2, {1, 0});
    StateVector out = apply_embedded(in, kron, {0, 1});
    StateVector expected = StateVector::basis_state(3, 2, {1, 2});
    for (Complex& amp : expected.amps) {
        amp *= root_of_unity(3, 1);
    }
    CHECK(max_abs_diff(out, expected) < 1e-15);
}

}  // namespace
}  // namespace quditsim
