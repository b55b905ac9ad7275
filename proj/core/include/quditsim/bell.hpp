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

/// Label of a generalized n-qudit Bell state:
///
///   |Psi_{p,q}> = (1/sqrt d) sum_j w^(jp) |j, q_1+j, ..., q_{n-1}+j>  (mod d)
///
/// with p in [0,d) and q = (q_1, ..., q_{n-1}), each q_i in [0,d). These d^n
/// states form an orthonormal basis of the "aligned" sector; each is an
/// eigenstate of X^(x)n with eigenvalue w^p and of Zdag(a) (x) Z(b) with
/// eigenvalue w^(v_b - v_a), where v_0 = 0 and v_k = q_k for k >= 1.
struct BellIndex {
    int d = 2;
    int n = 2;
    int p = 0;
    std::vector<int> q;  // n-1 entries

    bool operator==(const BellIndex& other) const = default;
};

enum class BellSign { Plus, Minus };

/// Qubit Bell-family label: (|x> +/- |x_bar>)/sqrt 2 over n qubits, with
/// 0 <= x < 2^(n-1) (leading bit of x is 0) and x_bar the bitwise complement.
struct QubitBellIndex {
    int n = 2;
    int x = 0;
    BellSign sign = BellSign::Plus;
};

StateVector bell_qubit(const QubitBellIndex& idx);
StateVector bell_qudit(const BellIndex& idx);

/// All d^n labels in lexicographic (p, q) order.
std::vector<BellIndex> enumerate_bell_basis(int d, int n);

/// The digit-offset vector v: v_0 = 0, v_k = q_{k-1} for k in [1, n).
std::vector<int> digit_offsets(const BellIndex& idx);

/// (v_b - v_a) mod d for wires a, b.
int relative_parity(const BellIndex& idx, int a, int b);

/// The BellIndex whose d=2 state equals bell_qubit(idx) exactly:
/// p = sign bit, q_i = bit i of x (after the leading zero bit).
BellIndex qubit_index_to_bell(const QubitBellIndex& idx);

void validate_bell_index(const BellIndex& idx);

}  // namespace quditsim
