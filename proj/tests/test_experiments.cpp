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

#include <doctest.h>

#include <cmath>

#include "lre/experiments.hpp"
#include "support/helpers.hpp"

using namespace lre;
using doctest::Approx;

TEST_SUITE("experiments") {

TEST_CASE("ghz mirror structure") {
    SUBCASE("one qubit is H then H") {
        const Circuit c = ghz_mirror(1);
        REQUIRE(c.depth() == 2);
        CHECK(c.layers()[0] == Layer{{Gate::single(GateKind::H, 0)}});
        CHECK(c.layers()[1] == Layer{{Gate::single(GateKind::H, 0)}});
    }
    SUBCASE("three qubits: H, ladder, mirrored ladder, H") {
        const Circuit c = ghz_mirror(3);
        REQUIRE(c.depth() == 6);
        CHECK(c.layers()[0] == Layer{{Gate::single(GateKind::H, 0)}});
        CHECK(c.layers()[1] == Layer{{Gate::cnot(0, 1)}});
        CHECK(c.layers()[2] == Layer{{Gate::cnot(1, 2)}});
        CHECK(c.layers()[3] == Layer{{Gate::cnot(1, 2)}});
        CHECK(c.layers()[4] == Layer{{Gate::cnot(0, 1)}});
        CHECK(c.layers()[5] == Layer{{Gate::single(GateKind::H, 0)}});
    }
    SUBCASE("every width restores the ground state without noise") {
        for (std::uint32_t n = 1; n <= 6; n++) {
            const DensityMatrix rho = simulate_exact(ghz_mirror(n), NoiseModel::noiseless());
            CHECK(rho.at(0, 0).real() == Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("random mirror structure") {
    SUBCASE("deterministic for a fixed seed") {
        const Circuit a = random_mirror(4, 3, 0.9, 77);
        const Circuit b = random_mirror(4, 3, 0.9, 77);
        CHECK(a == b);
        const Circuit other = random_mirror(4, 3, 0.9, 78);
        CHECK(a != other);
    }
    SUBCASE("depth is twice the half depth and every qubit is busy") {
        const Circuit c = random_mirror(5, 4, 0.9, 3);
        REQUIRE(c.depth() == 8);
        for (const Layer &layer : c.layers()) {
            std::size_t busy = 0;
            for (const Gate &g : layer.gates) {
                busy += g.arity();
            }
            CHECK(busy == 5);
        }
    }
    SUBCASE("p_cnot = 0 yields no CNOTs") {
        const Circuit c = random_mirror(4, 5, 0.0, 9);
        for (const Layer &layer : c.layers()) {
            for (const Gate &g : layer.gates) {
                CHECK(g.kind != GateKind::Cnot);
            }
        }
    }
    SUBCASE("mirror identity without noise, any seed") {
        for (std::uint64_t seed = 0; seed < 8; seed++) {
            const Circuit c = random_mirror(3, 2, 0.9, seed);
            const DensityMatrix rho = simulate_exact(c, NoiseModel::noiseless());
            CHECK(rho.at(0, 0).real() == Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("single-qubit widths rejected") {
        CHECK_THROWS_AS(random_mirror(1, 2, 0.9, 0), std::invalid_argument);
    }
}

namespace {

ExperimentSpec small_ghz_spec() {
    ExperimentSpec spec;
    spec.family = CircuitFamily::GhzMirror;
    spec.sweep = SweepVariable::Qubits;
    spec.values = {2, 3};
    spec.trials = 3;
    spec.base = MitigationConfig{2, 0, 2, 20'000, FoldMode::Local, Strategy::Lre};
    spec.noise = NoiseModel{0.04, 0.08, true};
    spec.seed = 99;
    return spec;
}

}  // namespace

TEST_CASE("run_experiment emits one row per value and strategy") {
    const ResultTable table = run_experiment(small_ghz_spec());
    REQUIRE(table.rows.size() == 6);
    CHECK(table.rows[0].strategy == Strategy::Unmitigated);
    CHECK(table.rows[1].strategy == Strategy::Re);
    CHECK(table.rows[2].strategy == Strategy::Lre);
    CHECK(table.rows[0].sweep_value == 2);
    CHECK(table.rows[3].sweep_value == 3);
    for (const ResultRow &row : table.rows) {
        CHECK(row.trials == 3);
        CHECK(row.trial_values.size() == 3);
        CHECK(row.std_dev >= 0.0);
    }
    // Full-depth LRE resolves l to 2n.
    CHECK(table.rows[2].chunk_count == 4);
    CHECK(table.rows[5].chunk_count == 6);
    CHECK(table.rows[1].chunk_count == 1);
}

TEST_CASE("experiment tables are reproducible and thread-invariant") {
    ExperimentSpec spec = small_ghz_spec();
    spec.threads = 1;
    const std::string csv_single = to_csv(run_experiment(spec));
    spec.threads = 4;
    const std::string csv_parallel = to_csv(run_experiment(spec));
    CHECK(csv_single == csv_parallel);
    const std::string csv_repeat = to_csv(run_experiment(spec));
    CHECK(csv_parallel == csv_repeat);
}

TEST_CASE("lre beats re on the noisy ghz sweep") {
    ExperimentSpec spec = small_ghz_spec();
    spec.base.total_shots = 0;  // exact mode isolates the bias
    spec.trials = 1;
    spec.values = {2, 3, 4};
    const ResultTable table = run_experiment(spec);
    for (std::size_t vi = 0; vi < spec.values.size(); vi++) {
        const ResultRow &re = table.rows[vi * 3 + 1];
        const ResultRow &lre = table.rows[vi * 3 + 2];
        CHECK(lre.mean_abs_error < re.mean_abs_error);
        REQUIRE(lre.improvement_pct.has_value());
        CHECK(*lre.improvement_pct > 0.0);
    }
}

TEST_CASE("chunk sweep reduces to re at a single chunk") {
    ExperimentSpec spec = small_ghz_spec();
    spec.sweep = SweepVariable::Chunks;
    spec.qubit_count = 3;
    spec.values = {1, 2, 6};
    spec.trials = 1;
    spec.base.total_shots = 0;
    const ResultTable table = run_experiment(spec);
    // Rows: per value {unmit, re, lre}; at l = 1 LRE and RE coincide.
    CHECK(table.rows[1].mean == table.rows[2].mean);
    // Bias shrinks as the chunk count grows.
    CHECK(table.rows[8].mean_abs_error < table.rows[2].mean_abs_error);
}

TEST_CASE("degree sweep: bias falls and statistical noise grows with d") {
    ExperimentSpec spec = small_ghz_spec();
    spec.sweep = SweepVariable::Degree;
    spec.qubit_count = 4;
    spec.values = {1, 2, 3};

    SUBCASE("exact mode: extrapolation bias decreases for both strategies") {
        spec.trials = 1;
        spec.base.total_shots = 0;
        const ResultTable table = run_experiment(spec);
        for (std::size_t vi = 1; vi < spec.values.size(); vi++) {
            CHECK(table.rows[vi * 3 + 1].mean_abs_error <
                  table.rows[(vi - 1) * 3 + 1].mean_abs_error);
            CHECK(table.rows[vi * 3 + 2].mean_abs_error <
                  table.rows[(vi - 1) * 3 + 2].mean_abs_error);
        }
    }
    SUBCASE("finite shots: trial std grows with the extrapolation order") {
        spec.trials = 5;
        spec.base.total_shots = 100'000;
        spec.seed = 5;
        const ResultTable table = run_experiment(spec);
        for (std::size_t vi = 1; vi < spec.values.size(); vi++) {
            CHECK(table.rows[vi * 3 + 2].std_dev > table.rows[(vi - 1) * 3 + 2].std_dev);
        }
    }
}

TEST_CASE("delta sweep: wider gaps increase the extrapolation bias") {
    ExperimentSpec spec = small_ghz_spec();
    spec.sweep = SweepVariable::Delta;
    spec.qubit_count = 4;
    spec.values = {2, 4, 6, 8};
    spec.trials = 1;
    spec.base.total_shots = 0;
    const ResultTable table = run_experiment(spec);
    for (std::size_t vi = 1; vi < spec.values.size(); vi++) {
        CHECK(table.rows[vi * 3 + 2].mean_abs_error >
              table.rows[(vi - 1) * 3 + 2].mean_abs_error);
    }
}

TEST_CASE("csv output is stable and carries the documented columns") {
    ExperimentSpec spec = small_ghz_spec();
    spec.trials = 2;
    spec.values = {2};
    const std::string csv = to_csv(run_experiment(spec));
    CHECK(csv.find("family,sweep_var,sweep_value,strategy,d,l,delta,s_tot,trials,mean,"
                   "std,mean_abs_error,improvement_pct\n") == 0);
    CHECK(csv.find("ghz,qubits,2,unmitigated,") != std::string::npos);
    CHECK(csv.find("ghz,qubits,2,re,") != std::string::npos);
    CHECK(csv.find("ghz,qubits,2,lre,") != std::string::npos);
}

TEST_CASE("json output carries per-trial raw values") {
    ExperimentSpec spec = small_ghz_spec();
    spec.trials = 2;
    spec.values = {2};
    const std::string json = to_json(run_experiment(spec));
    CHECK(json.find("\"trial_values\"") != std::string::npos);
    CHECK(json.find("\"strategy\": \"lre\"") != std::string::npos);
}

TEST_CASE("random family shares the circuit across strategies in a trial") {
    ExperimentSpec spec;
    spec.family = CircuitFamily::RandomMirror;
    spec.sweep = SweepVariable::Qubits;
    spec.values = {3, 4};
    spec.trials = 2;
    spec.half_depth = 2;
    spec.base = MitigationConfig{2, 0, 2, 0, FoldMode::Local, Strategy::Lre};
    spec.noise = NoiseModel{0.04, 0.08, true};
    spec.seed = 7;
    const ResultTable table = run_experiment(spec);
    REQUIRE(table.rows.size() == 6);
    // Exact mode: identical spec and seed give identical tables.
    CHECK(to_csv(run_experiment(spec)) == to_csv(table));
    // Full-depth chunking resolves to 2 * half_depth.
    CHECK(table.rows[2].chunk_count == 4);
}

}  // TEST_SUITE
