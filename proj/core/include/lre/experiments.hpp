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
// Mirror benchmark circuits (ideal expectation exactly 1) and the sweep
// harness comparing unmitigated, RE, and LRE estimation under a fixed total
// shot budget.

#ifndef LRE_EXPERIMENTS_HPP
#define LRE_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lre/protocol.hpp"

namespace lre {

/// GHZ preparation followed by its inverse; depth 2n, one gate per layer.
Circuit ghz_mirror(std::uint32_t qubit_count);

/// A random half circuit followed by its inverse. Each layer of the half
/// circuit assigns a gate to every qubit: unoccupied qubits are visited in
/// random order and paired into a CNOT with probability cnot_probability
/// (random direction) or given a uniform gate from {H, X, Y, Z, S, T}.
/// Total depth is 2 * half_depth.
Circuit random_mirror(std::uint32_t qubit_count, std::size_t half_depth,
                      double cnot_probability, std::uint64_t seed);

enum class CircuitFamily { GhzMirror, RandomMirror };
enum class SweepVariable { Qubits, Degree, Shots, Delta, Chunks };

std::string_view family_name(CircuitFamily family);
std::string_view sweep_name(SweepVariable sweep);

struct ExperimentSpec {
    CircuitFamily family = CircuitFamily::GhzMirror;
    SweepVariable sweep = SweepVariable::Qubits;
    std::vector<std::int64_t> values;
    std::size_t trials = 10;

    /// Base hyperparameters; the swept variable is overridden per value.
    /// chunk_count == 0 selects the full layer count of each circuit.
    MitigationConfig base{2, 0, 2, 1'000'000, FoldMode::Local, Strategy::Lre};

    std::uint32_t qubit_count = 4;  // fixed width for non-qubit sweeps
    std::size_t half_depth = 2;     // random family only
    double cnot_probability = 0.9;  // random family only
    NoiseModel noise;
    std::uint64_t seed = 0;
    std::size_t threads = 1;  // 0 selects hardware concurrency
};

/// One aggregated row per (sweep value, strategy). The ideal value of every
/// mirror circuit is 1, so mean_abs_error averages |estimate - 1|.
/// improvement_pct = (RE error - LRE error) / LRE error * 100, reported on
/// LRE rows.
struct ResultRow {
    std::int64_t sweep_value = 0;
    Strategy strategy = Strategy::Unmitigated;
    int degree = 0;
    std::size_t chunk_count = 0;
    int delta = 0;
    std::int64_t total_shots = 0;
    std::size_t trials = 0;
    double mean = 0.0;
    double std_dev = 0.0;
    double mean_abs_error = 0.0;
    std::optional<double> improvement_pct;
    std::vector<double> trial_values;
};

struct ResultTable {
    CircuitFamily family = CircuitFamily::GhzMirror;
    SweepVariable sweep = SweepVariable::Qubits;
    std::vector<ResultRow> rows;
};

/// Runs trials * strategies * values jobs (in parallel when requested) with
/// seeds derived per (value, trial, strategy); identical spec and seed give
/// a bit-identical table regardless of thread count.
ResultTable run_experiment(const ExperimentSpec &spec);

/// Shortest-round-trip decimal formatting, byte-stable across runs.
std::string format_double(double value);

std::string to_csv(const ResultTable &table);
std::string to_json(const ResultTable &table);

}  // namespace lre

#endif
