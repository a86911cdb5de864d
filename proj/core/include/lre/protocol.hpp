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
//
// The end-to-end mitigation protocol: build scale factors and coefficients,
// fold, estimate, and combine. RE and unmitigated baselines included.

#ifndef LRE_PROTOCOL_HPP
#define LRE_PROTOCOL_HPP

#include <cstdint>
#include <functional>
#include <span>

#include "lre/budget.hpp"
#include "lre/circuit.hpp"
#include "lre/interpolation.hpp"
#include "lre/noise_sim.hpp"

namespace lre {

enum class Strategy { Lre, Re, Unmitigated };

std::string_view strategy_name(Strategy strategy);

struct MitigationConfig {
    int degree = 2;                  // extrapolation order d
    std::size_t chunk_count = 1;     // number of circuit chunks l
    int delta = 2;                   // minimum scale-factor gap
    std::int64_t total_shots = 0;    // 0 selects exact evaluation
    FoldMode mode = FoldMode::Local;
    Strategy strategy = Strategy::Lre;
};

void validate_config(const MitigationConfig &config, const Circuit &circuit);

/// Estimates an expectation value for a noise-scaled circuit. The scale
/// factors are passed alongside the folded circuit so that synthetic
/// backends can be pure functions of the scale-factor vector.
class ExpectationBackend {
  public:
    virtual ~ExpectationBackend() = default;
    virtual ExpectationEstimate estimate(const Circuit &folded,
                                         std::span<const int> scale_factors,
                                         std::int64_t shots, std::uint64_t seed) const = 0;
};

/// Runs the embedded density-matrix simulator with the configured noise.
class SimulatorBackend final : public ExpectationBackend {
  public:
    SimulatorBackend(NoiseModel noise, DiagonalObservable observable)
        : noise_(noise), observable_(std::move(observable)) {}

    ExpectationEstimate estimate(const Circuit &folded, std::span<const int> scale_factors,
                                 std::int64_t shots, std::uint64_t seed) const override;

  private:
    NoiseModel noise_;
    DiagonalObservable observable_;
};

/// Evaluates a fixed function of the scale-factor vector; used to test the
/// extrapolation path against known polynomials without simulation.
class SyntheticBackend final : public ExpectationBackend {
  public:
    using Function = std::function<double(std::span<const int>)>;

    explicit SyntheticBackend(Function fn) : fn_(std::move(fn)) {}

    ExpectationEstimate estimate(const Circuit &, std::span<const int> scale_factors,
                                 std::int64_t shots, std::uint64_t) const override {
        const double value = fn_(scale_factors);
        return ExpectationEstimate{value, shots, value};
    }

  private:
    Function fn_;
};

struct RawEstimate {
    std::vector<int> scale_factors;
    std::int64_t shots = 0;
    double estimate = 0.0;
    double exact_estimate = 0.0;
};

struct MitigatedResult {
    double value = 0.0;
    EtaCoefficients eta;
    ScaleFactorConfig scale_factors;
    std::vector<RawEstimate> raw;
    BudgetReport budget;
};

/// The full protocol: coefficients are computed before any circuit runs so
/// that singular configurations fail fast; the M estimates are then taken
/// with shots allocated by |eta_i| and combined linearly.
MitigatedResult run_lre(const Circuit &circuit, const MitigationConfig &config,
                        const ExpectationBackend &backend, std::uint64_t seed);

MitigatedResult run_lre(const Circuit &circuit, const DiagonalObservable &observable,
                        const MitigationConfig &config, const NoiseModel &noise,
                        std::uint64_t seed);

/// Single-variable Richardson extrapolation: the chunk_count = 1 special
/// case with scale factors {1, 1+delta, ..., 1+degree*delta}.
MitigatedResult run_re(const Circuit &circuit, const DiagonalObservable &observable,
                       int degree, int delta, std::int64_t total_shots,
                       const NoiseModel &noise, std::uint64_t seed);

/// Direct estimation at unit scale factors with the whole budget.
ExpectationEstimate run_unmitigated(const Circuit &circuit,
                                    const DiagonalObservable &observable,
                                    std::int64_t total_shots, const NoiseModel &noise,
                                    std::uint64_t seed);

}  // namespace lre

#endif
