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

#include "support/helpers.hpp"

#include <cmath>
#include <stdexcept>

#include "lre/qasm_io.hpp"

namespace lre::testing {

std::vector<double> eta_via_determinant_ratios(const ScaleFactorConfig &config) {
    const SampleMatrix a = sample_matrix(config);
    const double det_a = determinant(a);
    if (det_a == 0.0) {
        throw std::runtime_error("oracle requires a non-singular sample matrix");
    }
    std::vector<double> eta(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        SquareMatrix replaced = a;
        for (std::size_t j = 0; j < a.size(); j++) {
            replaced.at(i, j) = j == 0 ? 1.0 : 0.0;
        }
        eta[i] = determinant(replaced) / det_a;
    }
    return eta;
}

namespace {

template <typename Point>
double evaluate_terms(const Polynomial &poly, Point point) {
    double acc = 0.0;
    for (std::size_t t = 0; t < poly.coefficients.size(); t++) {
        double term = poly.coefficients[t];
        const std::vector<int> &exps = poly.exponents[t];
        for (std::size_t k = 0; k < exps.size(); k++) {
            for (int e = 0; e < exps[k]; e++) {
                term *= static_cast<double>(point[k]);
            }
        }
        acc += term;
    }
    return acc;
}

}  // namespace

double Polynomial::operator()(std::span<const double> point) const {
    return evaluate_terms(*this, point);
}

double Polynomial::operator()(std::span<const int> point) const {
    return evaluate_terms(*this, point);
}

double Polynomial::constant_term() const {
    for (std::size_t t = 0; t < coefficients.size(); t++) {
        bool all_zero = true;
        for (int e : exponents[t]) {
            all_zero = all_zero && e == 0;
        }
        if (all_zero) {
            return coefficients[t];
        }
    }
    return 0.0;
}

Polynomial random_polynomial(std::size_t variable_count, int max_degree, double bound,
                             Rng &rng) {
    const MonomialBasis basis = monomial_basis(variable_count, max_degree);
    Polynomial poly;
    poly.exponents = basis.exponents;
    poly.coefficients.reserve(basis.size());
    for (std::size_t t = 0; t < basis.size(); t++) {
        poly.coefficients.push_back((2.0 * rng.next_double() - 1.0) * bound);
    }
    return poly;
}

namespace {

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations. Sizes
// here are at most 2 * 2^n for small n, so the O(n^3)-per-sweep cost is
// irrelevant.
std::vector<double> symmetric_eigenvalues(std::vector<double> m, std::size_t n) {
    auto at = [&](std::size_t r, std::size_t c) -> double & { return m[r * n + c]; };
    for (int sweep = 0; sweep < 100; sweep++) {
        double off = 0.0;
        for (std::size_t r = 0; r < n; r++) {
            for (std::size_t c = r + 1; c < n; c++) {
                off += at(r, c) * at(r, c);
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (std::size_t p = 0; p < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) {
                    continue;
                }
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; k++) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; k++) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eigs(n);
    for (std::size_t k = 0; k < n; k++) {
        eigs[k] = at(k, k);
    }
    return eigs;
}

}  // namespace

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    const std::size_t d = rho.dim();
    // Real symmetric embedding of the Hermitian difference; its spectrum is
    // that of the difference with every eigenvalue doubled in multiplicity.
    std::vector<double> embed(4 * d * d, 0.0);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            const std::complex<double> v = rho.at(r, c) - sigma.at(r, c);
            embed[r * 2 * d + c] = v.real();
            embed[(r + d) * 2 * d + (c + d)] = v.real();
            embed[r * 2 * d + (c + d)] = -v.imag();
            embed[(r + d) * 2 * d + c] = v.imag();
        }
    }
    double sum_abs = 0.0;
    for (double eig : symmetric_eigenvalues(std::move(embed), 2 * d)) {
        sum_abs += std::abs(eig);
    }
    return sum_abs / 4.0;  // half the trace norm, halved again for doubling
}

double frobenius_distance(const DensityMatrix &rho, const DensityMatrix &sigma) {
    double acc = 0.0;
    for (std::size_t r = 0; r < rho.dim(); r++) {
        for (std::size_t c = 0; c < rho.dim(); c++) {
            acc += std::norm(rho.at(r, c) - sigma.at(r, c));
        }
    }
    return std::sqrt(acc);
}

double hermiticity_defect(const DensityMatrix &rho) {
    double worst = 0.0;
    for (std::size_t r = 0; r < rho.dim(); r++) {
        for (std::size_t c = 0; c < rho.dim(); c++) {
            worst = std::max(worst, std::abs(rho.at(r, c) - std::conj(rho.at(c, r))));
        }
    }
    return worst;
}

Circuit random_asap_circuit(std::uint32_t width, std::size_t gate_count, Rng &rng) {
    constexpr GateKind kSingles[] = {GateKind::H,   GateKind::X, GateKind::Y,
                                     GateKind::Z,   GateKind::S, GateKind::T,
                                     GateKind::Sdg, GateKind::Tdg};
    std::vector<Gate> gates;
    gates.reserve(gate_count);
    for (std::size_t i = 0; i < gate_count; i++) {
        if (width >= 2 && rng.next_bernoulli(0.4)) {
            const auto control = static_cast<std::uint32_t>(rng.next_below(width));
            auto target = static_cast<std::uint32_t>(rng.next_below(width - 1));
            if (target >= control) {
                target++;
            }
            gates.push_back(Gate::cnot(control, target));
        } else {
            gates.push_back(Gate::single(kSingles[rng.next_below(8)],
                                         static_cast<std::uint32_t>(rng.next_below(width))));
        }
    }
    return asap_schedule(width, gates);
}

std::vector<int> random_odd_lambdas(std::size_t count, int max_lambda, Rng &rng) {
    std::vector<int> out(count);
    const int options = (max_lambda + 1) / 2;
    for (std::size_t i = 0; i < count; i++) {
        out[i] = 1 + 2 * static_cast<int>(rng.next_below(static_cast<std::uint64_t>(options)));
    }
    return out;
}

}  // namespace lre::testing
