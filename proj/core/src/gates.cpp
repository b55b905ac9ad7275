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

#include "quditsim/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace quditsim {

DenseOperator zd_matrix(int d) {
    DenseOperator op(d, 1);
    for (int j = 0; j < d; ++j) {
        op.at(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = root_of_unity(d, j);
    }
    return op;
}

DenseOperator xd_matrix(int d) {
    DenseOperator op(d, 1);
    for (int j = 0; j < d; ++j) {
        op.at(static_cast<std::size_t>((j - 1 + d) % d), static_cast<std::size_t>(j)) =
            Complex{1.0, 0.0};
    }
    return op;
}

DenseOperator hd_matrix(int d) {
    DenseOperator op(d, 1);
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            op.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
                scale * root_of_unity(d, static_cast<long long>(j) * k);
        }
    }
    return op;
}

DenseOperator csum(int d, bool dagger) {
    DenseOperator op(d, 2);
    for (int c = 0; c < d; ++c) {
        for (int t = 0; t < d; ++t) {
            int mapped = dagger ? (t + c) % d : (t - c + d) % d;
            op.at(static_cast<std::size_t>(c * d + mapped), static_cast<std::size_t>(c * d + t)) =
                Complex{1.0, 0.0};
        }
    }
    return op;
}

DenseOperator controlled_u(const DenseOperator& u, int d_ancilla) {
    if (u.d != d_ancilla) {
        throw std::invalid_argument(
            "controlled_u: ancilla dimension must match the payload wire dimension");
    }
    if (!u.is_unitary()) {
        throw std::invalid_argument("controlled_u: payload must be unitary");
    }
    DenseOperator op(u.d, u.arity + 1);
    std::size_t block = u.dim();
    DenseOperator upow = DenseOperator::identity(u.d, u.arity);
    for (int a = 0; a < d_ancilla; ++a) {
        std::size_t shift = static_cast<std::size_t>(a) * block;
        for (std::size_t r = 0; r < block; ++r) {
            for (std::size_t c = 0; c < block; ++c) {
                op.at(shift + r, shift + c) = upow.entries[r * block + c];
            }
        }
        if (a + 1 < d_ancilla) {
            upow = upow * u;
        }
    }
    return op;
}

int GateSpec::arity() const {
    switch (kind) {
        case GateKind::Zd:
        case GateKind::Xd:
        case GateKind::Hd:
        case GateKind::HdDag:
            return 1;
        case GateKind::CSum:
        case GateKind::CSumDag:
            return 2;
        case GateKind::ControlledU:
            if (!payload.has_value()) {
                throw std::invalid_argument("GateSpec: ControlledU requires a payload");
            }
            return payload->arity + 1;
    }
    throw std::invalid_argument("GateSpec: unknown gate kind");
}

DenseOperator GateSpec::realize() const {
    switch (kind) {
        case GateKind::Zd:
            return zd_matrix(d).pow(power);
        case GateKind::Xd:
            return xd_matrix(d).pow(power);
        case GateKind::Hd:
            return hd_matrix(d);
        case GateKind::HdDag:
            return hd_matrix(d).dagger();
        case GateKind::CSum:
            return csum(d, false);
        case GateKind::CSumDag:
            return csum(d, true);
        case GateKind::ControlledU:
            if (!payload.has_value()) {
                throw std::invalid_argument("GateSpec: ControlledU requires a payload");
            }
            return controlled_u(*payload, d);
    }
    throw std::invalid_argument("GateSpec: unknown gate kind");
}

bool GateSpec::operator==(const GateSpec& other) const {
    // control_role is annotation; kind, d, power and payload fix the matrix.
    if (kind != other.kind || d != other.d || power != other.power ||
        payload.has_value() != other.payload.has_value()) {
        return false;
    }
    if (payload.has_value()) {
        if (payload->d != other.payload->d || payload->arity != other.payload->arity) {
            return false;
        }
        if (payload->max_abs_diff(*other.payload) != 0.0) {
            return false;
        }
    }
    return true;
}

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::Zd:
            return "ZD";
        case GateKind::Xd:
            return "XD";
        case GateKind::Hd:
            return "HD";
        case GateKind::HdDag:
            return "HDDAG";
        case GateKind::CSum:
            return "CSUM";
        case GateKind::CSumDag:
            return "CSUMDAG";
        case GateKind::ControlledU:
            return "CU";
    }
    return "?";
}

}  // namespace quditsim
