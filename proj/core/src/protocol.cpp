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

#include "lre/protocol.hpp"

#include <stdexcept>

#include "lre/rng.hpp"

namespace lre {

std::string_view strategy_name(Strategy strategy) {
    switch (strategy) {
        case Strategy::Lre:
            return "lre";
        case Strategy::Re:
            return "re";
        case Strategy::Unmitigated:
            return "unmitigated";
    }
    throw std::logic_error("unreachable strategy");
}

void validate_config(const MitigationConfig &config, const Circuit &circuit) {
    if (config.degree < 1) {
        throw std::invalid_argument("extrapolation order must be >= 1");
    }
    if (config.chunk_count < 1 || config.chunk_count > circuit.depth()) {
        throw std::invalid_argument("chunk count must satisfy 1 <= l <= depth");
    }
    if (config.delta < 2 || config.delta % 2 != 0) {
        throw std::invalid_argument("scale-factor gap delta must be even and >= 2");
    }
    if (config.total_shots < 0) {
        throw std::invalid_argument("shot budget must be non-negative");
    }
    if (config.strategy == Strategy::Re && config.chunk_count != 1) {
        throw std::invalid_argument("RE uses a single chunk");
    }
}

ExpectationEstimate SimulatorBackend::estimate(const Circuit &folded,
                                               std::span<const int>, std::int64_t shots,
                                               std::uint64_t seed) const {
    return estimate_expectation(folded, noise_, observable_, shots, seed);
}

MitigatedResult run_lre(const Circuit &circuit, const MitigationConfig &config,
                        const ExpectationBackend &backend, std::uint64_t seed) {
    validate_config(config, circuit);

    // Classical pre-processing first: a singular scale-factor configuration
    // must fail before any circuit is executed.
    MitigatedResult result;
    result.scale_factors =
        default_scale_factors(config.chunk_count, config.degree, config.delta);
    result.eta = eta_coefficients(result.scale_factors);
    result.budget = config.total_shots == 0 ? overhead_metrics(result.eta)
                                            : overhead(result.eta, config.total_shots);

    const Chunking chunking = chunk_circuit(circuit, config.chunk_count);
    const std::size_t m = result.scale_factors.size();
    result.raw.reserve(m);
    std::vector<double> expectations(m);
    for (std::size_t i = 0; i < m; i++) {
        const std::vector<int> &lambda = result.scale_factors.vectors[i];
        const Circuit folded = fold_circuit(circuit, chunking, lambda, config.mode);
        const std::int64_t shots = result.budget.allocations[i];
        const ExpectationEstimate est =
            backend.estimate(folded, lambda, shots, derive_seed(seed, i));
        expectations[i] = est.value;
        result.raw.push_back(RawEstimate{lambda, shots, est.value, est.exact_value});
    }
    result.value = lre_combine(result.eta, expectations);
    return result;
}

MitigatedResult run_lre(const Circuit &circuit, const DiagonalObservable &observable,
                        const MitigationConfig &config, const NoiseModel &noise,
                        std::uint64_t seed) {
    return run_lre(circuit, config, SimulatorBackend(noise, observable), seed);
}

MitigatedResult run_re(const Circuit &circuit, const DiagonalObservable &observable,
                       int degree, int delta, std::int64_t total_shots,
                       const NoiseModel &noise, std::uint64_t seed) {
    MitigationConfig config;
    config.degree = degree;
    config.chunk_count = 1;
    config.delta = delta;
    config.total_shots = total_shots;
    config.mode = FoldMode::Local;
    config.strategy = Strategy::Re;
    return run_lre(circuit, observable, config, noise, seed);
}

ExpectationEstimate run_unmitigated(const Circuit &circuit,
                                    const DiagonalObservable &observable,
                                    std::int64_t total_shots, const NoiseModel &noise,
                                    std::uint64_t seed) {
    return estimate_expectation(circuit, noise, observable, total_shots,
                                derive_seed(seed, 0));
}

}  // namespace lre
