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

#include <optional>

#include "quditsim/dense_operator.hpp"

namespace quditsim {

// Generalized single-qudit gates on dimension d.
//
//   clock:   Z|j> = w^j |j>          with w = exp(2*pi*i/d)
//   shift:   X|j> = |j-1 mod d>
//   fourier: H_jk = w^(jk)/sqrt(d)   (symmetric; unitary; H != H^dag for d>2)
//
// These satisfy X = H Z H^dag.

DenseOperator zd_matrix(int d);
DenseOperator xd_matrix(int d);
DenseOperator hd_matrix(int d);

/// Two-qudit conditional-sum gate, control wire first:
///   csum(d, false): |c>|t> -> |c>|t - c mod d>
///   csum(d, true):  |c>|t> -> |c>|t + c mod d>   (the inverse)
///
/// The subtracting form is the controlled shift sum_j |j><j| (x) X^j, so it
/// composes consistently with controlled_u(xd_matrix(d), d).
DenseOperator csum(int d, bool dagger);

/// Controlled-U with a d_ancilla-dimensional control: sum_j |j><j| (x) U^j.
/// The control (ancilla) wire is the FIRST wire of the returned operator,
/// which has arity u.arity + 1. Requires u unitary and u.d == d_ancilla.
DenseOperator controlled_u(const DenseOperator& u, int d_ancilla);

enum class GateKind {
    Zd,
    Xd,
    Hd,
    HdDag,
    CSum,
    CSumDag,
    ControlledU,
};

enum class ControlRole {
    AncillaControlsSystem,
    SystemControlsAncilla,
};

/// One gate in a circuit. `power` applies to Zd/Xd; `payload` is the base
/// unitary of a ControlledU step. `control_role` annotates which register
/// drives a CSum-family step; the wire list alone fixes the semantics, so
/// the role does not participate in equality.
struct GateSpec {
    GateKind kind = GateKind::Hd;
    int d = 2;
    int power = 1;
    ControlRole control_role = ControlRole::SystemControlsAncilla;
    std::optional<DenseOperator> payload;

    int arity() const;

    /// The concrete matrix for this gate.
    DenseOperator realize() const;

    bool operator==(const GateSpec& other) const;
};

const char* gate_kind_name(GateKind kind);

}  // namespace quditsim
