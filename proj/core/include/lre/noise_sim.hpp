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
// Exact density-matrix simulation under per-gate amplitude damping, with
// optional finite-shot sampling of computational-basis measurements.

#ifndef LRE_NOISE_SIM_HPP
#define LRE_NOISE_SIM_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "lre/circuit.hpp"

namespace lre {

/// Amplitude damping probabilities: p1 after every single-qubit gate, p2 on
/// each qubit of a CNOT. Idle qubits receive no noise.
struct NoiseModel {
    double p1 = 0.04;
    double p2 = 0.08;
    bool enabled = true;

    static NoiseModel noiseless() { return NoiseModel{0.0, 0.0, false}; }
};

void validate_noise_model(const NoiseModel &noise);

/// Dense 2^n x 2^n density matrix, row-major. Qubit k corresponds to bit k
/// of the basis-state index.
class DensityMatrix {
  public:
    explicit DensityMatrix(std::uint32_t qubit_count);  // starts in |0...0><0...0|

    std::uint32_t qubit_count() const { return qubit_count_; }
    std::size_t dim() const { return dim_; }

    std::complex<double> &at(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const std::complex<double> &at(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    double trace_real() const;
    double diagonal_real(std::size_t index) const { return at(index, index).real(); }

    /// rho -> U rho U^dagger for the gate's unitary, contracted on the
    /// gate's qubit indices only.
    void apply_gate(const Gate &gate);

    /// Single-qubit amplitude damping channel with probability p.
    void apply_damping(std::uint32_t qubit, double p);

  private:
    std::uint32_t qubit_count_ = 0;
    std::size_t dim_ = 1;
    std::vector<std::complex<double>> entries_;
};

/// Default cap on simulated width; 4^10 complex entries is about 16 MB.
inline constexpr std::uint32_t kDefaultQubitLimit = 10;

/// Run the circuit from |0...0>, applying each gate followed by its damping
/// channel (p1 after single-qubit gates, p2 on both qubits of a CNOT).
DensityMatrix simulate_exact(const Circuit &circuit, const NoiseModel &noise,
                             std::uint32_t qubit_limit = kDefaultQubitLimit);

/// Observable that is diagonal in the computational basis; weights indexed
/// by basis state.
struct DiagonalObservable {
    std::vector<double> weights;

    static DiagonalObservable zero_projector(std::uint32_t qubit_count);

    double expectation(const DensityMatrix &rho) const;
};

struct ExpectationEstimate {
    double value = 0.0;
    std::int64_t shots = 0;  // 0 means the exact value was used
    double exact_value = 0.0;
};

/// Exact expectation when shots == 0; otherwise the average of `shots`
/// computational-basis samples drawn from the diagonal of the final state.
/// The estimator is unbiased; for projectors its variance is at most
/// 1 / (4 * shots).
ExpectationEstimate estimate_expectation(const Circuit &circuit, const NoiseModel &noise,
                                         const DiagonalObservable &observable,
                                         std::int64_t shots, std::uint64_t seed,
                                         std::uint32_t qubit_limit = kDefaultQubitLimit);

}  // namespace lre

#endif
