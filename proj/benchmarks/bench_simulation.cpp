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

#include <benchmark/benchmark.h>

#include "quditsim/bell.hpp"
#include "quditsim/discriminator.hpp"
#include "quditsim/gates.hpp"
#include "quditsim/outsourcing.hpp"
#include "quditsim/random.hpp"
#include "quditsim/state.hpp"

namespace {

using namespace quditsim;

void BM_ApplySingleWire(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RandomSource rng(1);
    StateVector psi = random_state(2, n, rng);
    DenseOperator h = hd_matrix(2);
    int wire = 0;
    for (auto _ : state) {
        psi = apply_embedded(psi, h, {wire});
        wire = (wire + 1) % n;
        benchmark::DoNotOptimize(psi.amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(psi.amps.size()));
}
BENCHMARK(BM_ApplySingleWire)->Arg(10)->Arg(14)->Arg(18);

void BM_ApplyTwoWire(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RandomSource rng(2);
    StateVector psi = random_state(2, n, rng);
    DenseOperator gate = csum(2, false);
    int wire = 0;
    for (auto _ : state) {
        psi = apply_embedded(psi, gate, {wire, (wire + 1) % n});
        wire = (wire + 1) % n;
        benchmark::DoNotOptimize(psi.amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(psi.amps.size()));
}
BENCHMARK(BM_ApplyTwoWire)->Arg(10)->Arg(14)->Arg(18);

void BM_BellConstruction(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BellIndex label{2, n, 1, std::vector<int>(static_cast<std::size_t>(n - 1), 1)};
    for (auto _ : state) {
        StateVector psi = bell_qudit(label);
        benchmark::DoNotOptimize(psi.amps.data());
    }
}
BENCHMARK(BM_BellConstruction)->Arg(10)->Arg(14)->Arg(18);

void BM_Discriminate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BellIndex label{2, n, 1, std::vector<int>(static_cast<std::size_t>(n - 1), 1)};
    StateVector psi = bell_qudit(label);
    for (auto _ : state) {
        DiscriminationResult result = discriminate(psi);
        benchmark::DoNotOptimize(result.p);
    }
}
BENCHMARK(BM_Discriminate)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_DiscriminateQutrits(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BellIndex label{3, n, 2, std::vector<int>(static_cast<std::size_t>(n - 1), 1)};
    StateVector psi = bell_qudit(label);
    for (auto _ : state) {
        DiscriminationResult result = discriminate(psi);
        benchmark::DoNotOptimize(result.p);
    }
}
BENCHMARK(BM_DiscriminateQutrits)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_OutsourceMeasure(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    RandomSource rng(3);
    DiagonalUnitarySpec spec = random_diagonal_spec(d, rng);
    StateVector psi = random_state(d, 1, rng);
    for (auto _ : state) {
        auto outcomes = outsource_measure(spec, psi);
        benchmark::DoNotOptimize(outcomes.data());
    }
}
BENCHMARK(BM_OutsourceMeasure)->Arg(2)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
