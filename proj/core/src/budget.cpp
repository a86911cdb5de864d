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

#include "lre/budget.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lre {

BudgetReport overhead_metrics(const EtaCoefficients &eta) {
    if (eta.size() == 0) {
        throw std::invalid_argument("eta must be non-empty");
    }
    BudgetReport report;
    double sum_abs = 0.0;
    double sum_sq = 0.0;
    for (double v : eta.values) {
        sum_abs += std::abs(v);
        sum_sq += v * v;
    }
    report.gamma = sum_abs;
    report.gamma_tilde = std::sqrt(sum_sq);
    report.c = sum_abs * sum_abs;
    report.c_tilde = static_cast<double>(eta.size()) * sum_sq;
    report.allocations.assign(eta.size(), 0);
    report.total_shots = 0;
    return report;
}

BudgetReport overhead(const EtaCoefficients &eta, std::int64_t total_shots) {
    const std::int64_t m = static_cast<std::int64_t>(eta.size());
    if (total_shots < m) {
        throw std::invalid_argument("shot budget must allow at least one shot per circuit");
    }
    BudgetReport report = overhead_metrics(eta);
    if (report.gamma == 0.0) {
        throw std::invalid_argument("cannot allocate shots for an all-zero eta");
    }
    report.total_shots = total_shots;

    // Largest-remainder rounding of s_i = s_tot * |eta_i| / gamma, ties
    // broken toward lower index. Remainders are compared through the exact
    // products s_tot * |eta_i| - s_i * gamma so that analytically equal
    // fractions tie exactly instead of depending on division roundoff.
    std::vector<double> remainders(eta.size());
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < eta.size(); i++) {
        const double target = static_cast<double>(total_shots) * std::abs(eta.values[i]);
        auto base = static_cast<std::int64_t>(target / report.gamma);
        double remainder = target - static_cast<double>(base) * report.gamma;
        while (remainder < 0.0) {
            base--;
            remainder += report.gamma;
        }
        while (remainder >= report.gamma) {
            base++;
            remainder -= report.gamma;
        }
        report.allocations[i] = base;
        remainders[i] = remainder;
        assigned += base;
    }
    std::vector<std::size_t> order(eta.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return remainders[a] > remainders[b];
    });
    for (std::size_t k = 0; assigned < total_shots; k++) {
        report.allocations[order[k % order.size()]]++;
        assigned++;
    }

    // Floor of one shot per circuit, funded by the largest allocations.
    for (std::size_t i = 0; i < report.allocations.size(); i++) {
        while (report.allocations[i] < 1) {
            const auto donor = std::max_element(report.allocations.begin(),
                                                report.allocations.end());
            (*donor)--;
            report.allocations[i]++;
        }
    }
    return report;
}

OverheadPoint overhead_point(std::size_t chunk_count, int degree, int delta) {
    const EtaCoefficients eta =
        eta_coefficients(default_scale_factors(chunk_count, degree, delta));
    const BudgetReport report = overhead_metrics(eta);
    return OverheadPoint{chunk_count, degree, delta, report.gamma, report.c, report.c_tilde};
}

std::vector<OverheadPoint> overhead_curve(std::size_t chunk_count_begin,
                                          std::size_t chunk_count_end, int degree, int delta) {
    if (chunk_count_begin < 1 || chunk_count_end < chunk_count_begin) {
        throw std::invalid_argument("invalid chunk-count range");
    }
    std::vector<OverheadPoint> out;
    out.reserve(chunk_count_end - chunk_count_begin + 1);
    for (std::size_t l = chunk_count_begin; l <= chunk_count_end; l++) {
        out.push_back(overhead_point(l, degree, delta));
    }
    return out;
}

}  // namespace lre
