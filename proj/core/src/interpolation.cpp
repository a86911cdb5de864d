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

#include "lre/interpolation.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace lre {

namespace {

constexpr double kRelativePivotTolerance = 1e-12;

void append_exponents_of_degree(std::size_t variable_count, int degree,
                                std::vector<int> &prefix,
                                std::vector<std::vector<int>> &out) {
    if (prefix.size() + 1 == variable_count) {
        prefix.push_back(degree);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    // Descending first entry gives lexicographically descending vectors,
    // which puts lambda_1^k ahead of lambda_2^k within a degree.
    for (int v = degree; v >= 0; v--) {
        prefix.push_back(v);
        append_exponents_of_degree(variable_count, degree - v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::size_t monomial_count(std::size_t variable_count, int max_degree) {
    // C(d + l, d) without overflow for the sizes in play.
    std::size_t count = 1;
    for (int i = 1; i <= max_degree; i++) {
        count = count * (variable_count + static_cast<std::size_t>(i)) /
                static_cast<std::size_t>(i);
    }
    return count;
}

MonomialBasis monomial_basis(std::size_t variable_count, int max_degree) {
    if (variable_count < 1 || max_degree < 0) {
        throw std::invalid_argument("monomial basis requires l >= 1 and d >= 0");
    }
    MonomialBasis basis;
    basis.variable_count = variable_count;
    basis.max_degree = max_degree;
    std::vector<int> prefix;
    for (int degree = 0; degree <= max_degree; degree++) {
        append_exponents_of_degree(variable_count, degree, prefix, basis.exponents);
    }
    return basis;
}

ScaleFactorConfig default_scale_factors(std::size_t variable_count, int max_degree, int delta) {
    if (delta < 2 || delta % 2 != 0) {
        throw std::invalid_argument("scale-factor gap delta must be even and >= 2");
    }
    const MonomialBasis basis = monomial_basis(variable_count, max_degree);
    ScaleFactorConfig config;
    config.variable_count = variable_count;
    config.max_degree = max_degree;
    config.delta = delta;
    config.vectors.reserve(basis.size());
    for (const std::vector<int> &m : basis.exponents) {
        std::vector<int> lambda(m.size());
        for (std::size_t k = 0; k < m.size(); k++) {
            lambda[k] = 1 + delta * m[k];
        }
        config.vectors.push_back(std::move(lambda));
    }
    return config;
}

void validate_scale_factor_config(const ScaleFactorConfig &config) {
    if (config.variable_count < 1 || config.max_degree < 0) {
        throw std::invalid_argument("scale-factor config requires l >= 1 and d >= 0");
    }
    const std::size_t expected = monomial_count(config.variable_count, config.max_degree);
    if (config.vectors.size() != expected) {
        throw std::invalid_argument("scale-factor config must hold exactly C(d+l,d) vectors");
    }
    for (const std::vector<int> &lambda : config.vectors) {
        if (lambda.size() != config.variable_count) {
            throw std::invalid_argument("scale-factor vector length must equal l");
        }
        for (int v : lambda) {
            if (v < 1 || v % 2 == 0) {
                throw std::invalid_argument("scale factors must be odd integers >= 1");
            }
        }
    }
}

SquareMatrix::SquareMatrix(std::size_t size, std::vector<double> entries)
    : size_(size), entries_(std::move(entries)) {
    if (entries_.size() != size_ * size_) {
        throw std::invalid_argument("entry count must equal size * size");
    }
}

SquareMatrix SquareMatrix::transposed() const {
    SquareMatrix out(size_);
    for (std::size_t i = 0; i < size_; i++) {
        for (std::size_t j = 0; j < size_; j++) {
            out.at(j, i) = at(i, j);
        }
    }
    return out;
}

namespace {

// LU factorization with partial pivoting. A pivot is treated as zero when
// its magnitude falls below kRelativePivotTolerance times the largest
// magnitude found in that pivot's column of the unfactored matrix.
struct LuFactorization {
    std::size_t size = 0;
    std::vector<double> lu;        // row-major, L below diagonal, U on/above
    std::vector<std::size_t> perm; // row permutation applied to the input
    int sign = 1;
    bool singular = false;

    static LuFactorization factor(const SquareMatrix &matrix) {
        const std::size_t n = matrix.size();
        LuFactorization f;
        f.size = n;
        f.lu = matrix.entries();
        f.perm.resize(n);
        std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});

        std::vector<double> column_scale(n, 0.0);
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < n; j++) {
                column_scale[j] = std::max(column_scale[j], std::abs(f.lu[i * n + j]));
            }
        }

        for (std::size_t k = 0; k < n; k++) {
            std::size_t pivot_row = k;
            double pivot_mag = std::abs(f.lu[k * n + k]);
            for (std::size_t i = k + 1; i < n; i++) {
                const double mag = std::abs(f.lu[i * n + k]);
                if (mag > pivot_mag) {
                    pivot_mag = mag;
                    pivot_row = i;
                }
            }
            if (pivot_mag <= kRelativePivotTolerance * column_scale[k]) {
                f.singular = true;
                return f;
            }
            if (pivot_row != k) {
                for (std::size_t j = 0; j < n; j++) {
                    std::swap(f.lu[k * n + j], f.lu[pivot_row * n + j]);
                }
                std::swap(f.perm[k], f.perm[pivot_row]);
                f.sign = -f.sign;
            }
            const double pivot = f.lu[k * n + k];
            for (std::size_t i = k + 1; i < n; i++) {
                const double factor = f.lu[i * n + k] / pivot;
                f.lu[i * n + k] = factor;
                for (std::size_t j = k + 1; j < n; j++) {
                    f.lu[i * n + j] -= factor * f.lu[k * n + j];
                }
            }
        }
        return f;
    }

    double det() const {
        if (singular) {
            return 0.0;
        }
        double d = sign;
        for (std::size_t k = 0; k < size; k++) {
            d *= lu[k * size + k];
        }
        return d;
    }

    std::vector<double> solve(std::span<const double> rhs) const {
        if (singular) {
            throw SingularSampleMatrixError("cannot solve a singular system");
        }
        const std::size_t n = size;
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; i++) {
            x[i] = rhs[perm[i]];
        }
        for (std::size_t i = 1; i < n; i++) {
            double acc = x[i];
            for (std::size_t j = 0; j < i; j++) {
                acc -= lu[i * n + j] * x[j];
            }
            x[i] = acc;
        }
        for (std::size_t i = n; i-- > 0;) {
            double acc = x[i];
            for (std::size_t j = i + 1; j < n; j++) {
                acc -= lu[i * n + j] * x[j];
            }
            x[i] = acc / lu[i * n + i];
        }
        return x;
    }
};

double evaluate_monomial(std::span<const int> exponents, std::span<const double> point) {
    double value = 1.0;
    for (std::size_t k = 0; k < exponents.size(); k++) {
        for (int e = 0; e < exponents[k]; e++) {
            value *= point[k];
        }
    }
    return value;
}

SampleMatrix build_sample_matrix(const ScaleFactorConfig &config) {
    validate_scale_factor_config(config);
    const MonomialBasis basis = monomial_basis(config.variable_count, config.max_degree);
    const std::size_t m = basis.size();
    SampleMatrix a(m);
    std::vector<double> point(config.variable_count);
    for (std::size_t i = 0; i < m; i++) {
        for (std::size_t k = 0; k < config.variable_count; k++) {
            point[k] = static_cast<double>(config.vectors[i][k]);
        }
        for (std::size_t j = 0; j < m; j++) {
            a.at(i, j) = evaluate_monomial(basis.exponents[j], point);
        }
    }
    return a;
}

}  // namespace

double determinant(const SquareMatrix &matrix) {
    return LuFactorization::factor(matrix).det();
}

SampleMatrix sample_matrix(const ScaleFactorConfig &config) {
    SampleMatrix a = build_sample_matrix(config);
    if (LuFactorization::factor(a).singular) {
        throw SingularSampleMatrixError(
            "sample matrix is singular; alter the scale-factor vectors");
    }
    return a;
}

EtaCoefficients eta_coefficients(const ScaleFactorConfig &config) {
    const SampleMatrix a = sample_matrix(config);
    const LuFactorization f = LuFactorization::factor(a.transposed());
    if (f.singular) {
        throw SingularSampleMatrixError(
            "sample matrix is singular; alter the scale-factor vectors");
    }
    std::vector<double> e1(a.size(), 0.0);
    e1[0] = 1.0;
    return EtaCoefficients{f.solve(e1)};
}

double lre_combine(const EtaCoefficients &eta, std::span<const double> expectations) {
    if (eta.size() != expectations.size()) {
        throw std::invalid_argument("coefficient and expectation counts must match");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < eta.size(); i++) {
        acc += eta.values[i] * expectations[i];
    }
    return acc;
}

double interpolate_at(const ScaleFactorConfig &config, std::span<const double> expectations,
                      std::span<const double> point) {
    if (point.size() != config.variable_count) {
        throw std::invalid_argument("evaluation point length must equal l");
    }
    const SampleMatrix a = sample_matrix(config);
    if (expectations.size() != a.size()) {
        throw std::invalid_argument("expectation count must equal the number of vectors");
    }
    const LuFactorization f = LuFactorization::factor(a.transposed());
    if (f.singular) {
        throw SingularSampleMatrixError(
            "sample matrix is singular; alter the scale-factor vectors");
    }
    // Lagrange weights w_i = det(M_i(point)) / det(A) obtained in one solve:
    // A^T w equals the monomial row evaluated at the point.
    const MonomialBasis basis = monomial_basis(config.variable_count, config.max_degree);
    std::vector<double> rhs(a.size());
    for (std::size_t j = 0; j < a.size(); j++) {
        rhs[j] = evaluate_monomial(basis.exponents[j], point);
    }
    const std::vector<double> weights = f.solve(rhs);
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); i++) {
        acc += weights[i] * expectations[i];
    }
    return acc;
}

}  // namespace lre
