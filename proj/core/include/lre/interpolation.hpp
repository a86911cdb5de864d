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
// Multivariate monomial bases, sample matrices, and the Lagrange-at-zero
// coefficients used to combine noise-scaled expectation values.

#ifndef LRE_INTERPOLATION_HPP
#define LRE_INTERPOLATION_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace lre {

/// Thrown when a set of scale-factor vectors yields a sample matrix whose LU
/// factorization hits a negligible pivot. The caller should alter the scale
/// factors rather than trust coefficients from an ill-conditioned system.
class SingularSampleMatrixError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// All monomials in `variable_count` variables of total degree at most
/// `max_degree`, in graded lexicographic order (degree ascending, then
/// lexicographically descending exponents). The first entry is always the
/// constant monomial.
struct MonomialBasis {
    std::size_t variable_count = 0;
    int max_degree = 0;
    std::vector<std::vector<int>> exponents;

    std::size_t size() const { return exponents.size(); }
};

MonomialBasis monomial_basis(std::size_t variable_count, int max_degree);

/// Number of monomials C(max_degree + variable_count, max_degree).
std::size_t monomial_count(std::size_t variable_count, int max_degree);

/// A set of M scale-factor vectors, one per monomial. Entries are odd
/// integers >= 1 so that every vector is realizable by unitary folding.
struct ScaleFactorConfig {
    std::size_t variable_count = 0;
    int max_degree = 0;
    int delta = 2;
    std::vector<std::vector<int>> vectors;

    std::size_t size() const { return vectors.size(); }
};

/// The pattern lambda_i = 1 + m_i * delta where {m_i} ranges over all
/// non-negative integer vectors of 1-norm <= max_degree, in graded-lex
/// order. Requires an even delta >= 2 (folding changes depth in steps of 2).
ScaleFactorConfig default_scale_factors(std::size_t variable_count, int max_degree, int delta);

void validate_scale_factor_config(const ScaleFactorConfig &config);

/// Dense row-major square matrix of doubles.
class SquareMatrix {
  public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t size) : size_(size), entries_(size * size, 0.0) {}
    SquareMatrix(std::size_t size, std::vector<double> entries);

    std::size_t size() const { return size_; }
    double &at(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }
    double at(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }
    const std::vector<double> &entries() const { return entries_; }

    SquareMatrix transposed() const;

  private:
    std::size_t size_ = 0;
    std::vector<double> entries_;
};

using SampleMatrix = SquareMatrix;

/// LU determinant with partial pivoting; returns 0 when a pivot falls below
/// the relative tolerance (1e-12 times the largest magnitude of the pivot's
/// initial column).
double determinant(const SquareMatrix &matrix);

/// Sample matrix a[i][j] = j-th monomial evaluated at the i-th scale-factor
/// vector. Throws SingularSampleMatrixError if the matrix is singular.
SampleMatrix sample_matrix(const ScaleFactorConfig &config);

/// Linear-combination weights eta_i = det(M_i) / det(A), where M_i replaces
/// row i of the sample matrix with e1. Computed as the solution of
/// A^T eta = e1, which equals the determinant ratios by Cramer's rule.
struct EtaCoefficients {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

EtaCoefficients eta_coefficients(const ScaleFactorConfig &config);

/// The extrapolated zero-noise estimate: sum_i eta_i * z_i.
double lre_combine(const EtaCoefficients &eta, std::span<const double> expectations);

/// Evaluate the interpolating polynomial at an arbitrary point. Reproduces
/// every node value exactly and reduces to lre_combine at the origin.
double interpolate_at(const ScaleFactorConfig &config, std::span<const double> expectations,
                      std::span<const double> point);

}  // namespace lre

#endif
