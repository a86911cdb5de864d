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

#include "lre/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lre/rng.hpp"

namespace lre {

Circuit ghz_mirror(std::uint32_t qubit_count) {
    if (qubit_count < 1) {
        throw std::invalid_argument("ghz_mirror requires at least one qubit");
    }
    std::vector<Layer> layers;
    layers.push_back(Layer{{Gate::single(GateKind::H, 0)}});
    for (std::uint32_t q = 0; q + 1 < qubit_count; q++) {
        layers.push_back(Layer{{Gate::cnot(q, q + 1)}});
    }
    Circuit forward(qubit_count, std::move(layers));
    Circuit backward = inverse(forward);
    std::vector<Layer> all = forward.layers();
    all.insert(all.end(), backward.layers().begin(), backward.layers().end());
    return Circuit(qubit_count, std::move(all));
}

namespace {

constexpr GateKind kRandomSingleQubitKinds[] = {GateKind::H, GateKind::X, GateKind::Y,
                                                GateKind::Z, GateKind::S, GateKind::T};

}  // namespace

Circuit random_mirror(std::uint32_t qubit_count, std::size_t half_depth,
                      double cnot_probability, std::uint64_t seed) {
    if (qubit_count < 2) {
        throw std::invalid_argument("random_mirror requires at least two qubits");
    }
    if (half_depth < 1) {
        throw std::invalid_argument("random_mirror requires half_depth >= 1");
    }
    if (cnot_probability < 0.0 || cnot_probability > 1.0) {
        throw std::invalid_argument("cnot probability must lie in [0, 1]");
    }
    Rng rng(seed);
    std::vector<Layer> layers;
    layers.reserve(2 * half_depth);
    std::vector<std::uint32_t> pending(qubit_count);
    for (std::size_t li = 0; li < half_depth; li++) {
        // Visit unoccupied qubits in random order (Fisher-Yates as we go).
        pending.resize(qubit_count);
        std::iota(pending.begin(), pending.end(), 0u);
        Layer layer;
        while (!pending.empty()) {
            const std::size_t pick = rng.next_below(pending.size());
            const std::uint32_t q = pending[pick];
            pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
            if (pending.size() >= 1 && rng.next_bernoulli(cnot_probability)) {
                const std::size_t partner_pick = rng.next_below(pending.size());
                const std::uint32_t partner = pending[partner_pick];
                pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(partner_pick));
                if (rng.next_bernoulli(0.5)) {
                    layer.gates.push_back(Gate::cnot(q, partner));
                } else {
                    layer.gates.push_back(Gate::cnot(partner, q));
                }
            } else {
                const GateKind kind = kRandomSingleQubitKinds[rng.next_below(6)];
                layer.gates.push_back(Gate::single(kind, q));
            }
        }
        layers.push_back(std::move(layer));
    }
    Circuit forward(qubit_count, std::move(layers));
    Circuit backward = inverse(forward);
    std::vector<Layer> all = forward.layers();
    all.insert(all.end(), backward.layers().begin(), backward.layers().end());
    return Circuit(qubit_count, std::move(all));
}

std::string_view family_name(CircuitFamily family) {
    switch (family) {
        case CircuitFamily::GhzMirror:
            return "ghz";
        case CircuitFamily::RandomMirror:
            return "random";
    }
    throw std::logic_error("unreachable family");
}

std::string_view sweep_name(SweepVariable sweep) {
    switch (sweep) {
        case SweepVariable::Qubits:
            return "qubits";
        case SweepVariable::Degree:
            return "degree";
        case SweepVariable::Shots:
            return "shots";
        case SweepVariable::Delta:
            return "delta";
        case SweepVariable::Chunks:
            return "chunks";
    }
    throw std::logic_error("unreachable sweep variable");
}

namespace {

constexpr Strategy kStrategyOrder[] = {Strategy::Unmitigated, Strategy::Re, Strategy::Lre};

struct ResolvedJob {
    std::uint32_t qubit_count;
    MitigationConfig config;
};

ResolvedJob resolve(const ExperimentSpec &spec, std::int64_t value, Strategy strategy) {
    ResolvedJob job;
    job.qubit_count = spec.qubit_count;
    job.config = spec.base;
    job.config.strategy = strategy;
    switch (spec.sweep) {
        case SweepVariable::Qubits:
            job.qubit_count = static_cast<std::uint32_t>(value);
            break;
        case SweepVariable::Degree:
            job.config.degree = static_cast<int>(value);
            break;
        case SweepVariable::Shots:
            job.config.total_shots = value;
            break;
        case SweepVariable::Delta:
            job.config.delta = static_cast<int>(value);
            break;
        case SweepVariable::Chunks:
            job.config.chunk_count = static_cast<std::size_t>(value);
            break;
    }
    if (strategy == Strategy::Re) {
        job.config.chunk_count = 1;
    } else if (job.config.chunk_count == 0) {
        // Full layerwise splitting; both families have a known total depth.
        job.config.chunk_count = spec.family == CircuitFamily::GhzMirror
                                     ? 2 * static_cast<std::size_t>(job.qubit_count)
                                     : 2 * spec.half_depth;
    }
    return job;
}

// Seed streams: 0 reserved for random-circuit generation, 1 for estimation.
std::uint64_t circuit_seed(const ExperimentSpec &spec, std::size_t value_idx,
                           std::size_t trial_idx) {
    return derive_seed(spec.seed, 0, value_idx, trial_idx);
}

std::uint64_t trial_seed(const ExperimentSpec &spec, std::size_t value_idx,
                         std::size_t trial_idx, std::size_t strategy_idx) {
    return derive_seed(derive_seed(spec.seed, 1, value_idx, trial_idx), strategy_idx);
}

double run_one(const ExperimentSpec &spec, std::size_t value_idx, std::size_t trial_idx,
               std::size_t strategy_idx) {
    const std::int64_t value = spec.values[value_idx];
    const Strategy strategy = kStrategyOrder[strategy_idx];
    ResolvedJob job = resolve(spec, value, strategy);

    const Circuit circuit =
        spec.family == CircuitFamily::GhzMirror
            ? ghz_mirror(job.qubit_count)
            : random_mirror(job.qubit_count, spec.half_depth, spec.cnot_probability,
                            circuit_seed(spec, value_idx, trial_idx));

    const std::uint64_t seed = trial_seed(spec, value_idx, trial_idx, strategy_idx);
    const DiagonalObservable obs = DiagonalObservable::zero_projector(circuit.width());
    switch (strategy) {
        case Strategy::Unmitigated:
            return run_unmitigated(circuit, obs, job.config.total_shots, spec.noise, seed)
                .value;
        case Strategy::Re:
            return run_re(circuit, obs, job.config.degree, job.config.delta,
                          job.config.total_shots, spec.noise, seed)
                .value;
        case Strategy::Lre:
            return run_lre(circuit, obs, job.config, spec.noise, seed).value;
    }
    throw std::logic_error("unreachable strategy");
}

}  // namespace

ResultTable run_experiment(const ExperimentSpec &spec) {
    if (spec.values.empty()) {
        throw std::invalid_argument("experiment requires at least one sweep value");
    }
    if (spec.trials < 1) {
        throw std::invalid_argument("experiment requires at least one trial");
    }
    for (std::int64_t v : spec.values) {
        if (v < 1 && !(spec.sweep == SweepVariable::Shots && v == 0)) {
            throw std::invalid_argument("sweep values must be positive");
        }
    }

    const std::size_t num_values = spec.values.size();
    const std::size_t num_strategies = std::size(kStrategyOrder);
    const std::size_t num_jobs = num_values * num_strategies * spec.trials;

    // values[value_idx][strategy_idx][trial_idx], filled by independent jobs
    // and joined deterministically.
    std::vector<double> estimates(num_jobs, 0.0);
    auto slot = [&](std::size_t vi, std::size_t si, std::size_t ti) {
        return (vi * num_strategies + si) * spec.trials + ti;
    };

    std::size_t threads = spec.threads == 0
                              ? std::max<std::size_t>(1, std::thread::hardware_concurrency())
                              : spec.threads;
    threads = std::min(threads, num_jobs);

    std::atomic<std::size_t> next_job{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next_job.fetch_add(1);
            if (idx >= num_jobs) {
                return;
            }
            const std::size_t ti = idx % spec.trials;
            const std::size_t si = (idx / spec.trials) % num_strategies;
            const std::size_t vi = idx / (spec.trials * num_strategies);
            try {
                estimates[slot(vi, si, ti)] = run_one(spec, vi, ti, si);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
        for (std::thread &t : pool) {
            t.join();
        }
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }

    ResultTable table;
    table.family = spec.family;
    table.sweep = spec.sweep;
    table.rows.reserve(num_values * num_strategies);
    for (std::size_t vi = 0; vi < num_values; vi++) {
        std::vector<ResultRow> group;
        for (std::size_t si = 0; si < num_strategies; si++) {
            const Strategy strategy = kStrategyOrder[si];
            ResolvedJob job = resolve(spec, spec.values[vi], strategy);
            ResultRow row;
            row.sweep_value = spec.values[vi];
            row.strategy = strategy;
            if (strategy != Strategy::Unmitigated) {
                row.degree = job.config.degree;
                row.chunk_count = job.config.chunk_count;
                row.delta = job.config.delta;
            }
            row.total_shots = job.config.total_shots;
            row.trials = spec.trials;
            row.trial_values.resize(spec.trials);
            double sum = 0.0;
            double abs_err = 0.0;
            for (std::size_t ti = 0; ti < spec.trials; ti++) {
                const double v = estimates[slot(vi, si, ti)];
                row.trial_values[ti] = v;
                sum += v;
                abs_err += std::abs(v - 1.0);
            }
            row.mean = sum / static_cast<double>(spec.trials);
            double var = 0.0;
            for (double v : row.trial_values) {
                var += (v - row.mean) * (v - row.mean);
            }
            row.std_dev = std::sqrt(var / static_cast<double>(spec.trials));
            row.mean_abs_error = abs_err / static_cast<double>(spec.trials);
            group.push_back(std::move(row));
        }
        const double re_err = group[1].mean_abs_error;
        const double lre_err = group[2].mean_abs_error;
        if (lre_err > 0.0) {
            group[2].improvement_pct = (re_err - lre_err) / lre_err * 100.0;
        }
        for (ResultRow &row : group) {
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

std::string format_double(double value) {
    char buf[64];
    // Shortest representation that round-trips; stable across platforms.
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string to_csv(const ResultTable &table) {
    std::ostringstream out;
    out << "family,sweep_var,sweep_value,strategy,d,l,delta,s_tot,trials,mean,std,"
           "mean_abs_error,improvement_pct\n";
    for (const ResultRow &row : table.rows) {
        out << family_name(table.family) << ',' << sweep_name(table.sweep) << ','
            << row.sweep_value << ',' << strategy_name(row.strategy) << ',' << row.degree
            << ',' << row.chunk_count << ',' << row.delta << ',' << row.total_shots << ','
            << row.trials << ',' << format_double(row.mean) << ','
            << format_double(row.std_dev) << ',' << format_double(row.mean_abs_error) << ',';
        if (row.improvement_pct) {
            out << format_double(*row.improvement_pct);
        }
        out << '\n';
    }
    return out.str();
}

std::string to_json(const ResultTable &table) {
    nlohmann::json doc;
    doc["family"] = std::string(family_name(table.family));
    doc["sweep_var"] = std::string(sweep_name(table.sweep));
    doc["rows"] = nlohmann::json::array();
    for (const ResultRow &row : table.rows) {
        nlohmann::json jrow;
        jrow["sweep_value"] = row.sweep_value;
        jrow["strategy"] = std::string(strategy_name(row.strategy));
        jrow["d"] = row.degree;
        jrow["l"] = row.chunk_count;
        jrow["delta"] = row.delta;
        jrow["s_tot"] = row.total_shots;
        jrow["trials"] = row.trials;
        jrow["mean"] = row.mean;
        jrow["std"] = row.std_dev;
        jrow["mean_abs_error"] = row.mean_abs_error;
        if (row.improvement_pct) {
            jrow["improvement_pct"] = *row.improvement_pct;
        }
        jrow["trial_values"] = row.trial_values;
        doc["rows"].push_back(std::move(jrow));
    }
    return doc.dump(2) + "\n";
}

}  // namespace lre
