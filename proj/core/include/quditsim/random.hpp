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

#include <cstdint>
#include <random>

#include "quditsim/outsourcing.hpp"
#include "quditsim/state.hpp"

namespace quditsim {

/// Deterministic random source. Draws are derived from raw mt19937_64 words
/// only (no distribution objects), so a seed reproduces the same sequence on
/// every platform.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 bits.
    double uniform();

    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);

    /// Standard normal via Box-Muller.
    double normal();

    Complex complex_normal();

    /// Child source with an independent stream; stable under reordering of
    /// sibling draws.
    RandomSource fork(std::uint64_t salt);

  private:
    std::mt19937_64 engine_;
};

/// Haar-ish random normalized state (normalized complex Gaussian vector).
StateVector random_state(int d, int n_wires, RandomSource& rng);

/// Random unitary via Gram-Schmidt on a complex Gaussian matrix.
DenseOperator random_unitary(int d, int arity, RandomSource& rng);

/// Random single-wire diagonal-unitary spec: random eigenbasis, each column
/// assigned a uniformly random phase class in [0, d) (so classes may repeat
/// or stay empty).
DiagonalUnitarySpec random_diagonal_spec(int d, RandomSource& rng);

}  // namespace quditsim
