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

#ifndef LRE_BUDGET_HPP
#define LRE_BUDGET_HPP

#include <cstdint>
#include <vector>

#include "lre/interpolation.hpp"

namespace lre {

/// Sampling-overhead metrics for a coefficient vector, plus the integer shot
/// allocation for a total budget.
///
/// gamma is the 1-norm of eta and c = gamma^2 the overhead under the optimal
/// split s_i proportional to |eta_i|; gamma_tilde is the 2-norm and
/// c_tilde = M * gamma_tilde^2 the overhead under an equal split. Cauchy-
/// Schwarz gives c_tilde >= c.
struct BudgetReport {
    double gamma = 0.0;
    double gamma_tilde = 0.0;
    double c = 0.0;
    double c_tilde = 0.0;
    std::vector<std::int64_t> allocations;
    std::int64_t total_shots = 0;
};

/// Overhead metrics only; allocations are all zero (exact-evaluation mode).
BudgetReport overhead_metrics(const EtaCoefficients &eta);

/// Metrics plus an integer shot allocation: s_i proportional to |eta_i|,
/// rounded by largest remainder, with a floor of one shot per circuit.
/// Requires total_shots >= number of circuits.
BudgetReport overhead(const EtaCoefficients &eta, std::int64_t total_shots);

/// One row of the overhead-vs-hyperparameter tables.
struct OverheadPoint {
    std::size_t chunk_count = 0;
    int degree = 0;
    int delta = 0;
    double gamma = 0.0;
    double c = 0.0;
    double c_tilde = 0.0;
};

OverheadPoint overhead_point(std::size_t chunk_count, int degree, int delta);

/// Overhead as a function of the chunk count, inclusive range.
std::vector<OverheadPoint> overhead_curve(std::size_t chunk_count_begin,
                                          std::size_t chunk_count_end, int degree, int delta);

}  // namespace lre

#endif
