// Copyright 2026 The LRE Toolkit Authors
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

#include "lre/budget.hpp"
#include "lre/experiments.hpp"
#include "lre/interpolation.hpp"
#include "lre/noise_sim.hpp"
#include "lre/protocol.hpp"

namespace {

using namespace lre;

void BM_eta_coefficients(benchmark::State &state) {
    const std::size_t l = static_cast<std::size_t>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        EtaCoefficients eta = eta_coefficients(default_scale_factors(l, d, 2));
        benchmark::DoNotOptimize(eta.values.data());
    }
    state.SetLabel("M=" + std::to_string(monomial_count(l, d)));
}
BENCHMARK(BM_eta_coefficients)->Args({4, 2})->Args({12, 2})->Args({16, 2})->Args({8, 3});

void BM_fold_circuit(benchmark::State &state) {
    const Circuit circuit = ghz_mirror(static_cast<std::uint32_t>(state.range(0)));
    const Chunking chunking = chunk_circuit(circuit, circuit.depth());
    std::vector<int> lambdas(circuit.depth(), 1);
    lambdas[circuit.depth() / 2] = 5;
    for (auto _ : state) {
        Circuit folded = fold_circuit(circuit, chunking, lambdas, FoldMode::Local);
        benchmark::DoNotOptimize(folded.depth());
    }
}
BENCHMARK(BM_fold_circuit)->Arg(4)->Arg(8);

void BM_simulate_ghz(benchmark::State &state) {
    const Circuit circuit = ghz_mirror(static_cast<std::uint32_t>(state.range(0)));
    const NoiseModel noise{0.04, 0.08, true};
    for (auto _ : state) {
        DensityMatrix rho = simulate_exact(circuit, noise);
        benchmark::DoNotOptimize(rho.diagonal_real(0));
    }
}
BENCHMARK(BM_simulate_ghz)->Arg(4)->Arg(6)->Arg(8);

void BM_run_lre_exact(benchmark::State &state) {
    const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
    const Circuit circuit = ghz_mirror(n);
    const DiagonalObservable obs = DiagonalObservable::zero_projector(n);
    const NoiseModel noise{0.04, 0.08, true};
    const MitigationConfig config{2, circuit.depth(), 2, 0, FoldMode::Local, Strategy::Lre};
    for (auto _ : state) {
        MitigatedResult result = run_lre(circuit, obs, config, noise, 0);
        benchmark::DoNotOptimize(result.value);
    }
}
BENCHMARK(BM_run_lre_exact)->Arg(3)->Arg(5);

void BM_shot_sampling(benchmark::State &state) {
    const Circuit circuit = ghz_mirror(6);
    const DiagonalObservable obs = DiagonalObservable::zero_projector(6);
    const NoiseModel noise{0.04, 0.08, true};
    const std::int64_t shots = state.range(0);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        ExpectationEstimate est = estimate_expectation(circuit, noise, obs, shots, seed++);
        benchmark::DoNotOptimize(est.value);
    }
    state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(BM_shot_sampling)->Arg(10'000)->Arg(1'000'000);

}  // namespace

BENCHMARK_MAIN();
