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

#include "lre/noise_sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lre/rng.hpp"

namespace lre {

namespace {

using cplx = std::complex<double>;

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

std::array<cplx, 4> single_qubit_unitary(GateKind kind) {
    const cplx i{0.0, 1.0};
    switch (kind) {
        case GateKind::H:
            return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
        case GateKind::X:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y:
            return {0.0, -i, i, 0.0};
        case GateKind::Z:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::S:
            return {1.0, 0.0, 0.0, i};
        case GateKind::Sdg:
            return {1.0, 0.0, 0.0, -i};
        case GateKind::T:
            return {1.0, 0.0, 0.0, cplx{kInvSqrt2, kInvSqrt2}};
        case GateKind::Tdg:
            return {1.0, 0.0, 0.0, cplx{kInvSqrt2, -kInvSqrt2}};
        case GateKind::Cnot:
            break;
    }
    throw std::logic_error("not a single-qubit gate");
}

}  // namespace

void validate_noise_model(const NoiseModel &noise) {
    if (noise.p1 < 0.0 || noise.p1 > 1.0 || noise.p2 < 0.0 || noise.p2 > 1.0) {
        throw std::invalid_argument("damping probabilities must lie in [0, 1]");
    }
}

DensityMatrix::DensityMatrix(std::uint32_t qubit_count)
    : qubit_count_(qubit_count), dim_(std::size_t{1} << qubit_count) {
    if (qubit_count < 1) {
        throw std::invalid_argument("density matrix requires at least one qubit");
    }
    entries_.assign(dim_ * dim_, cplx{0.0, 0.0});
    entries_[0] = cplx{1.0, 0.0};
}

double DensityMatrix::trace_real() const {
    double tr = 0.0;
    for (std::size_t i = 0; i < dim_; i++) {
        tr += at(i, i).real();
    }
    return tr;
}

void DensityMatrix::apply_gate(const Gate &gate) {
    if (gate.max_qubit() >= qubit_count_) {
        throw std::out_of_range("gate qubit index exceeds simulated width");
    }
    if (gate.kind == GateKind::Cnot) {
        // Basis permutation: flip the target bit wherever the control bit is
        // set, on rows then on columns.
        const std::size_t cmask = std::size_t{1} << gate.control();
        const std::size_t tmask = std::size_t{1} << gate.target();
        for (std::size_t r = 0; r < dim_; r++) {
            if ((r & cmask) && !(r & tmask)) {
                const std::size_t r2 = r | tmask;
                for (std::size_t c = 0; c < dim_; c++) {
                    std::swap(entries_[r * dim_ + c], entries_[r2 * dim_ + c]);
                }
            }
        }
        for (std::size_t c = 0; c < dim_; c++) {
            if ((c & cmask) && !(c & tmask)) {
                const std::size_t c2 = c | tmask;
                for (std::size_t r = 0; r < dim_; r++) {
                    std::swap(entries_[r * dim_ + c], entries_[r * dim_ + c2]);
                }
            }
        }
        return;
    }

    const std::array<cplx, 4> u = single_qubit_unitary(gate.kind);
    const std::size_t mask = std::size_t{1} << gate.q0;

    // Left multiply by U: mix row pairs (r, r | mask) across every column.
    for (std::size_t r = 0; r < dim_; r++) {
        if (r & mask) {
            continue;
        }
        const std::size_t r1 = r | mask;
        cplx *row0 = entries_.data() + r * dim_;
        cplx *row1 = entries_.data() + r1 * dim_;
        for (std::size_t c = 0; c < dim_; c++) {
            const cplx a = row0[c];
            const cplx b = row1[c];
            row0[c] = u[0] * a + u[1] * b;
            row1[c] = u[2] * a + u[3] * b;
        }
    }
    // Right multiply by U^dagger: mix column pairs with conjugated entries.
    for (std::size_t c = 0; c < dim_; c++) {
        if (c & mask) {
            continue;
        }
        const std::size_t c1 = c | mask;
        for (std::size_t r = 0; r < dim_; r++) {
            const cplx a = entries_[r * dim_ + c];
            const cplx b = entries_[r * dim_ + c1];
            entries_[r * dim_ + c] = a * std::conj(u[0]) + b * std::conj(u[1]);
            entries_[r * dim_ + c1] = a * std::conj(u[2]) + b * std::conj(u[3]);
        }
    }
}

void DensityMatrix::apply_damping(std::uint32_t qubit, double p) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("damping probability must lie in [0, 1]");
    }
    if (qubit >= qubit_count_) {
        throw std::out_of_range("damping qubit index exceeds simulated width");
    }
    if (p == 0.0) {
        return;
    }
    const double keep = std::sqrt(1.0 - p);
    const std::size_t mask = std::size_t{1} << qubit;
    for (std::size_t r = 0; r < dim_; r++) {
        if (r & mask) {
            continue;
        }
        const std::size_t r1 = r | mask;
        for (std::size_t c = 0; c < dim_; c++) {
            if (c & mask) {
                continue;
            }
            const std::size_t c1 = c | mask;
            // E0 rho E0^dag + E1 rho E1^dag restricted to this 2x2 sub-block.
            entries_[r * dim_ + c] += p * entries_[r1 * dim_ + c1];
            entries_[r * dim_ + c1] *= keep;
            entries_[r1 * dim_ + c] *= keep;
            entries_[r1 * dim_ + c1] *= 1.0 - p;
        }
    }
}

DensityMatrix simulate_exact(const Circuit &circuit, const NoiseModel &noise,
                             std::uint32_t qubit_limit) {
    validate_noise_model(noise);
    if (circuit.width() > qubit_limit) {
        throw std::invalid_argument("circuit width exceeds the simulator qubit limit");
    }
    const bool noisy = noise.enabled && (noise.p1 > 0.0 || noise.p2 > 0.0);
    DensityMatrix rho(circuit.width());
    for (const Layer &layer : circuit.layers()) {
        for (const Gate &gate : layer.gates) {
            rho.apply_gate(gate);
            if (!noisy) {
                continue;
            }
            if (gate.kind == GateKind::Cnot) {
                rho.apply_damping(gate.control(), noise.p2);
                rho.apply_damping(gate.target(), noise.p2);
            } else {
                rho.apply_damping(gate.q0, noise.p1);
            }
        }
    }
    return rho;
}

DiagonalObservable DiagonalObservable::zero_projector(std::uint32_t qubit_count) {
    DiagonalObservable obs;
    obs.weights.assign(std::size_t{1} << qubit_count, 0.0);
    obs.weights[0] = 1.0;
    return obs;
}

double DiagonalObservable::expectation(const DensityMatrix &rho) const {
    if (weights.size() != rho.dim()) {
        throw std::invalid_argument("observable dimension must match the state");
    }
    double acc = 0.0;
    for (std::size_t b = 0; b < weights.size(); b++) {
        if (weights[b] != 0.0) {
            acc += weights[b] * rho.diagonal_real(b);
        }
    }
    return acc;
}

ExpectationEstimate estimate_expectation(const Circuit &circuit, const NoiseModel &noise,
                                         const DiagonalObservable &observable,
                                         std::int64_t shots, std::uint64_t seed,
                                         std::uint32_t qubit_limit) {
    if (shots < 0) {
        throw std::invalid_argument("shot count must be non-negative");
    }
    const DensityMatrix rho = simulate_exact(circuit, noise, qubit_limit);
    const double exact = observable.expectation(rho);
    if (shots == 0) {
        return ExpectationEstimate{exact, 0, exact};
    }

    // Cumulative distribution over the diagonal; tiny negative entries from
    // roundoff are clamped.
    std::vector<double> cumulative(rho.dim());
    double total = 0.0;
    for (std::size_t b = 0; b < rho.dim(); b++) {
        total += std::max(0.0, rho.diagonal_real(b));
        cumulative[b] = total;
    }

    Rng rng(seed);
    double acc = 0.0;
    for (std::int64_t s = 0; s < shots; s++) {
        const double u = rng.next_double() * total;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t b = std::min<std::size_t>(
            static_cast<std::size_t>(it - cumulative.begin()), rho.dim() - 1);
        acc += observable.weights[b];
    }
    return ExpectationEstimate{acc / static_cast<double>(shots), shots, exact};
}

}  // namespace lre
