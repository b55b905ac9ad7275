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
#include <vector>

#include "quditsim/outsourcing.hpp"
#include "quditsim/state.hpp"

namespace quditsim::reference {

// Slow, structurally independent re-implementations used as oracles by the
// verification suites. They build full matrices out of Kronecker products
// and permutations instead of using the stride kernel, so agreement with the
// fast paths is meaningful.

/// Full d^n x d^n matrix applying `op` to `wires` (wires[0] = most
/// significant operator digit), built as P^dag (op (x) I) P where P is the
/// wire-permutation matrix moving `wires` to the front.
DenseOperator embed_via_kron(const DenseOperator& op, const std::vector<int>& wires, int n_wires);

/// Dense matrix-vector product.
StateVector apply_dense(const DenseOperator& full, const StateVector& state);

/// Eigenspace-projector measurement: probability <s|P_j|s> per phase class,
/// post-state P_j|s> renormalized.
std::vector<MeasurementOutcome> projector_measure(const DiagonalUnitarySpec& u,
                                                  const StateVector& state);

/// If `state` is an eigenvector of `u` with eigenvalue exp(2*pi*i*j/modulus)
/// for integer j (within tol), returns j.
std::optional<int> eigenphase_of(const DenseOperator& u, const StateVector& state, int modulus,
                                 double tol = 1e-9);

/// Total variation distance between two outcome distributions.
double total_variation_distance(const std::vector<MeasurementOutcome>& a,
                                const std::vector<MeasurementOutcome>& b);

}  // namespace quditsim::reference
