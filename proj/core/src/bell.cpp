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

#include "quditsim/bell.hpp"

#include <cmath>
#include <stdexcept>

namespace quditsim {

void validate_bell_index(const BellIndex& idx) {
    if (idx.d < 2) {
        throw std::invalid_argument("BellIndex: d must be >= 2");
    }
    if (idx.n < 2) {
        throw std::invalid_argument("BellIndex: n must be >= 2");
    }
    if (idx.p < 0 || idx.p >= idx.d) {
        throw std::invalid_argument("BellIndex: p out of range");
    }
    if (static_cast<int>(idx.q.size()) != idx.n - 1) {
        throw std::invalid_argument("BellIndex: q must have n-1 entries");
    }
    for (int qi : idx.q) {
        if (qi < 0 || qi >= idx.d) {
            throw std::invalid_argument("BellIndex: q entry out of range");
        }
    }
}

StateVector bell_qubit(const QubitBellIndex& idx) {
    if (idx.n < 2) {
        throw std::invalid_argument("bell_qubit: n must be >= 2");
    }
    if (idx.x < 0 || idx.x >= (1 << (idx.n - 1))) {
        throw std::invalid_argument("bell_qubit: x out of range [0, 2^(n-1))");
    }
    StateVector state = StateVector::zero_state(2, idx.n);
    state.amps.assign(state.amps.size(), Complex{0.0, 0.0});
    double amp = 1.0 / std::sqrt(2.0);
    std::size_t x = static_cast<std::size_t>(idx.x);
    std::size_t xbar = ~x & ((std::size_t{1} << idx.n) - 1);
    state.amps[x] = Complex{amp, 0.0};
    state.amps[xbar] = Complex{idx.sign == BellSign::Plus ? amp : -amp, 0.0};
    return state;
}

StateVector bell_qudit(const BellIndex& idx) {
    validate_bell_index(idx);
    StateVector state = StateVector::zero_state(idx.d, idx.n);
    state.amps.assign(state.amps.size(), Complex{0.0, 0.0});
    double scale = 1.0 / std::sqrt(static_cast<double>(idx.d));
    std::vector<int> digits(static_cast<std::size_t>(idx.n), 0);
    for (int j = 0; j < idx.d; ++j) {
        digits[0] = j;
        for (int w = 1; w < idx.n; ++w) {
            digits[static_cast<std::size_t>(w)] = (idx.q[static_cast<std::size_t>(w - 1)] + j) % idx.d;
        }
        state.amps[state.index_of(digits)] = scale * root_of_unity(idx.d, static_cast<long long>(j) * idx.p);
    }
    return state;
}

std::vector<BellIndex> enumerate_bell_basis(int d, int n) {
    if (d < 2 || n < 2) {
        throw std::invalid_argument("enumerate_bell_basis: require d >= 2, n >= 2");
    }
    std::vector<BellIndex> labels;
    std::size_t q_count = 1;
    for (int i = 0; i < n - 1; ++i) {
        q_count *= static_cast<std::size_t>(d);
    }
    labels.reserve(static_cast<std::size_t>(d) * q_count);
    for (int p = 0; p < d; ++p) {
        for (std::size_t code = 0; code < q_count; ++code) {
            BellIndex idx;
            idx.d = d;
            idx.n = n;
            idx.p = p;
            idx.q.assign(static_cast<std::size_t>(n - 1), 0);
            std::size_t rem = code;
            for (int i = n - 2; i >= 0; --i) {
                idx.q[static_cast<std::size_t>(i)] = static_cast<int>(rem % static_cast<std::size_t>(d));
                rem /= static_cast<std::size_t>(d);
            }
            labels.push_back(std::move(idx));
        }
    }
    return labels;
}

std::vector<int> digit_offsets(const BellIndex& idx) {
    validate_bell_index(idx);
    std::vector<int> v(static_cast<std::size_t>(idx.n), 0);
    for (int k = 1; k < idx.n; ++k) {
        v[static_cast<std::size_t>(k)] = idx.q[static_cast<std::size_t>(k - 1)];
    }
    return v;
}

int relative_parity(const BellIndex& idx, int a, int b) {
    if (a < 0 || a >= idx.n || b < 0 || b >= idx.n) {
        throw std::invalid_argument("relative_parity: wire out of range");
    }
    std::vector<int> v = digit_offsets(idx);
    return ((v[static_cast<std::size_t>(b)] - v[static_cast<std::size_t>(a)]) % idx.d + idx.d) % idx.d;
}

BellIndex qubit_index_to_bell(const QubitBellIndex& idx) {
    BellIndex out;
    out.d = 2;
    out.n = idx.n;
    out.p = idx.sign == BellSign::Plus ? 0 : 1;
    out.q.assign(static_cast<std::size_t>(idx.n - 1), 0);
    for (int i = 0; i < idx.n - 1; ++i) {
        out.q[static_cast<std::size_t>(i)] = (idx.x >> (idx.n - 2 - i)) & 1;
    }
    return out;
}

}  // namespace quditsim
