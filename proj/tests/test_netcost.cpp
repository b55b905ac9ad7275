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

#include <numeric>
#include <stdexcept>

#include "quditsim/bell.hpp"
#include "quditsim/netcost.hpp"
#include "quditsim/state.hpp"

namespace quditsim {
namespace {

TEST_CASE("pinned cost reports", "[netcost]") {
    CostReport star = protocol_cost(Topology{TopologyKind::Star, 10, 1});
    CHECK(star.qudits_moved == 28);
    CHECK(star.two_qudit_gates == 28);
    CHECK(star.per_edge_traversals ==
          std::vector<int>{4, 3, 3, 3, 3, 3, 3, 3, 3});
    CHECK(star.per_player_gate_counts ==
          std::vector<int>{10, 2, 2, 2, 2, 2, 2, 2, 2, 2});

    CostReport linear = protocol_cost(Topology{TopologyKind::Linear, 10, 1});
    CHECK(linear.qudits_moved == 18);
    CHECK(linear.two_qudit_gates == 28);
    CHECK(linear.per_edge_traversals == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 2, 2});
    CHECK(linear.per_player_gate_counts ==
          std::vector<int>{2, 3, 3, 3, 3, 3, 3, 3, 3, 2});

    CostReport star_base = baseline_cost(Topology{TopologyKind::Star, 10, 1});
    CHECK(star_base.qudits_moved == 18);
    CHECK(star_base.two_qudit_gates == 18);
    CHECK(star_base.per_edge_traversals == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 2, 2});
    CHECK(star_base.per_player_gate_counts ==
          std::vector<int>{18, 0, 0, 0, 0, 0, 0, 0, 0, 0});

    CostReport linear_base = baseline_cost(Topology{TopologyKind::Linear, 10, 1});
    CHECK(linear_base.qudits_moved == 90);
    CHECK(linear_base.per_edge_traversals ==
          std::vector<int>{18, 16, 14, 12, 10, 8, 6, 4, 2});
}

TEST_CASE("alice's position shapes the destructive baseline", "[netcost]") {
    // End positions are equivalent, middle positions are cheapest.
    CHECK(baseline_cost(Topology{TopologyKind::Linear, 7, 1}).qudits_moved == 42);
    CHECK(baseline_cost(Topology{TopologyKind::Linear, 7, 7}).qudits_moved == 42);
    CHECK(baseline_cost(Topology{TopologyKind::Linear, 7, 4}).qudits_moved == 24);  // (49-1)/2
    CHECK(baseline_cost(Topology{TopologyKind::Linear, 6, 3}).qudits_moved == 18);  // 36/2
    CHECK(baseline_cost(Topology{TopologyKind::Linear, 6, 4}).qudits_moved == 18);
    // General position: m(m-1) + (n-m)(n-m+1).
    CHECK(baseline_cost(Topology{TopologyKind::Linear, 7, 2}).qudits_moved == 32);

    CHECK_THROWS_AS(baseline_cost(Topology{TopologyKind::Star, 5, 3}), std::invalid_argument);
    CHECK_THROWS_AS(protocol_cost(Topology{TopologyKind::Linear, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(baseline_cost(Topology{TopologyKind::Linear, 5, 6}), std::invalid_argument);
    CHECK_THROWS_AS(baseline_cost(Topology{TopologyKind::Linear, 5, 0}), std::invalid_argument);
}

TEST_CASE("protocol wins from three players up", "[netcost]") {
    for (int n = 2; n <= 30; ++n) {
        int protocol = protocol_cost(Topology{TopologyKind::Linear, n, 1}).qudits_moved;
        int baseline = baseline_cost(Topology{TopologyKind::Linear, n, 1}).qudits_moved;
        if (n == 2) {
            CHECK(protocol == baseline);
        } else {
            CHECK(protocol < baseline);
        }
        // Tallies stay mutually consistent.
        CostReport report = protocol_cost(Topology{TopologyKind::Star, n, 1});
        CHECK(std::accumulate(report.per_edge_traversals.begin(),
                              report.per_edge_traversals.end(), 0) == report.qudits_moved);
        CHECK(std::accumulate(report.per_player_gate_counts.begin(),
                              report.per_player_gate_counts.end(), 0) ==
              report.two_qudit_gates);
    }
}

TEST_CASE("baseline transform flattens basis states and reverses exactly", "[netcost]") {
    BellIndex label{3, 3, 2, {1, 0}};
    StateVector state = bell_qudit(label);
    StateVector flat = baseline_transform(state);
    CHECK(as_product_digits(flat, 1e-12) == std::vector<int>{2, 1, 2});
    CHECK(max_abs_diff(baseline_transform_inverse(flat), state) < 1e-12);

    CHECK(as_product_digits(baseline_transform(bell_qudit(BellIndex{2, 2, 0, {0}})), 1e-12) ==
          std::vector<int>{0, 0});
    CHECK(as_product_digits(baseline_transform(bell_qudit(BellIndex{2, 2, 1, {1}})), 1e-12) ==
          std::vector<int>{1, 1});

    for (const BellIndex& other : enumerate_bell_basis(2, 4)) {
        StateVector input = bell_qudit(other);
        StateVector mapped = baseline_transform(input);
        auto digits = as_product_digits(mapped, 1e-12);
        REQUIRE(digits.has_value());
        CHECK((*digits)[0] == other.p);
        CHECK(max_abs_diff(baseline_transform_inverse(mapped), input) < 1e-12);
    }
}

}  // namespace
}  // namespace quditsim
