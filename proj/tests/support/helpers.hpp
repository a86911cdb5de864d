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
// Test-only oracles, kept independent of the implementation paths they
// check: determinant-ratio coefficients, an exact trace distance via a
// Jacobi eigensolver, brute-force polynomial evaluation, and seeded random
// circuit generation.

#ifndef LRE_TESTS_SUPPORT_HELPERS_HPP
#define LRE_TESTS_SUPPORT_HELPERS_HPP

#include <cstdint>
#include <vector>

#include "lre/circuit.hpp"
#include "lre/interpolation.hpp"
#include "lre/noise_sim.hpp"
#include "lre/rng.hpp"

namespace lre::testing {

/// eta_i = det(M_i) / det(A) computed literally, replacing row i of the
/// sample matrix with e1 and taking determinant ratios.
std::vector<double> eta_via_determinant_ratios(const ScaleFactorConfig &config);

/// A multivariate polynomial as a list of (coefficient, exponent vector).
struct Polynomial {
    std::vector<double> coefficients;
    std::vector<std::vector<int>> exponents;

    double operator()(std::span<const double> point) const;
    double operator()(std::span<const int> point) const;
    double constant_term() const;
};

/// Random polynomial over the full monomial basis (l variables, total degree
/// <= d) with coefficients uniform in [-bound, bound].
Polynomial random_polynomial(std::size_t variable_count, int max_degree, double bound,
                             Rng &rng);

/// Exact trace distance (1/2)||rho - sigma||_1 from the eigenvalues of the
/// Hermitian difference, computed with a cyclic Jacobi sweep on the real
/// symmetric embedding [[Re, -Im], [Im, Re]].
double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma);

double frobenius_distance(const DensityMatrix &rho, const DensityMatrix &sigma);

/// Max |rho_ij - rho_ji^*|, the distance from being Hermitian.
double hermiticity_defect(const DensityMatrix &rho);

/// Random circuit in ASAP-canonical layering: `gate_count` gates drawn over
/// all kinds (CNOTs only when width >= 2), packed greedily.
Circuit random_asap_circuit(std::uint32_t width, std::size_t gate_count, Rng &rng);

/// Random odd scale factors in [1, max_lambda] (inclusive, odd).
std::vector<int> random_odd_lambdas(std::size_t count, int max_lambda, Rng &rng);

}  // namespace lre::testing

#endif
