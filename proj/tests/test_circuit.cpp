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

#include "lre/circuit.hpp"
#include "lre/noise_sim.hpp"
#include "support/helpers.hpp"

using namespace lre;

namespace {

Layer single_layer(GateKind kind, std::uint32_t q) {
    return Layer{{Gate::single(kind, q)}};
}

Circuit three_layer_circuit() {
    return Circuit(2, {single_layer(GateKind::H, 0),
                       Layer{{Gate::cnot(0, 1)}},
                       single_layer(GateKind::T, 1)});
}

}  // namespace

TEST_SUITE("circuit") {

TEST_CASE("gate adjoints pair up") {
    CHECK(adjoint_kind(GateKind::H) == GateKind::H);
    CHECK(adjoint_kind(GateKind::X) == GateKind::X);
    CHECK(adjoint_kind(GateKind::Y) == GateKind::Y);
    CHECK(adjoint_kind(GateKind::Z) == GateKind::Z);
    CHECK(adjoint_kind(GateKind::Cnot) == GateKind::Cnot);
    CHECK(adjoint_kind(GateKind::S) == GateKind::Sdg);
    CHECK(adjoint_kind(GateKind::Sdg) == GateKind::S);
    CHECK(adjoint_kind(GateKind::T) == GateKind::Tdg);
    CHECK(adjoint_kind(GateKind::Tdg) == GateKind::T);
    for (GateKind kind : {GateKind::H, GateKind::S, GateKind::T, GateKind::Sdg}) {
        const Gate g = Gate::single(kind, 3);
        CHECK(g.adjoint().adjoint() == g);
    }
}

TEST_CASE("construction rejects invalid gates and layers") {
    CHECK_THROWS_AS(Gate::cnot(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Gate::single(GateKind::Cnot, 0), std::invalid_argument);
    // qubit beyond width
    CHECK_THROWS_AS(Circuit(1, {single_layer(GateKind::H, 1)}), std::invalid_argument);
    // qubit used twice in one layer
    CHECK_THROWS_AS(Circuit(2, {Layer{{Gate::single(GateKind::H, 0), Gate::cnot(0, 1)}}}),
                    std::invalid_argument);
}

TEST_CASE("chunk_circuit splits near-evenly") {
    std::vector<Layer> six(6, single_layer(GateKind::H, 0));
    const Circuit c6(1, six);

    SUBCASE("single chunk") {
        const Chunking ch = chunk_circuit(c6, 1);
        REQUIRE(ch.size() == 1);
        CHECK(ch.ranges[0] == LayerRange{0, 6});
    }
    SUBCASE("exact division") {
        const Chunking ch = chunk_circuit(c6, 3);
        REQUIRE(ch.size() == 3);
        CHECK(ch.ranges[0].size() == 2);
        CHECK(ch.ranges[1].size() == 2);
        CHECK(ch.ranges[2].size() == 2);
    }
    SUBCASE("remainder goes to the earliest chunks") {
        std::vector<Layer> seven(7, single_layer(GateKind::H, 0));
        const Chunking ch = chunk_circuit(Circuit(1, seven), 3);
        REQUIRE(ch.size() == 3);
        CHECK(ch.ranges[0].size() == 3);
        CHECK(ch.ranges[1].size() == 2);
        CHECK(ch.ranges[2].size() == 2);
    }
    SUBCASE("out-of-range chunk counts rejected") {
        CHECK_THROWS_AS(chunk_circuit(c6, 0), std::invalid_argument);
        CHECK_THROWS_AS(chunk_circuit(c6, 7), std::invalid_argument);
    }
}

TEST_CASE("fold_chunk expansions") {
    const Layer l = single_layer(GateKind::S, 0);

    SUBCASE("lambda 1 is the identity transformation") {
        const std::vector<Layer> chunk{l};
        CHECK(fold_chunk(chunk, 1, FoldMode::Global) == chunk);
        CHECK(fold_chunk(chunk, 1, FoldMode::Local) == chunk);
    }
    SUBCASE("lambda 3 global on one layer gives L, L-adjoint, L") {
        const std::vector<Layer> chunk{l};
        const std::vector<Layer> folded = fold_chunk(chunk, 3, FoldMode::Global);
        REQUIRE(folded.size() == 3);
        CHECK(folded[0] == l);
        CHECK(folded[1] == l.adjoint());
        CHECK(folded[2] == l);
    }
    SUBCASE("lambda 3 local folds each layer in place") {
        const Layer g1 = single_layer(GateKind::T, 0);
        const Layer g2 = single_layer(GateKind::H, 1);
        const std::vector<Layer> chunk{g1, g2};
        const std::vector<Layer> folded = fold_chunk(chunk, 3, FoldMode::Local);
        REQUIRE(folded.size() == 6);
        CHECK(folded[0] == g1);
        CHECK(folded[1] == g1.adjoint());
        CHECK(folded[2] == g1);
        CHECK(folded[3] == g2);
        CHECK(folded[4] == g2.adjoint());
        CHECK(folded[5] == g2);
    }
    SUBCASE("lambda 3 global on two layers reverses the adjoint block") {
        const Layer a = single_layer(GateKind::S, 0);
        const Layer b = single_layer(GateKind::H, 1);
        const std::vector<Layer> folded = fold_chunk(std::vector<Layer>{a, b}, 3, FoldMode::Global);
        REQUIRE(folded.size() == 6);
        CHECK(folded[0] == a);
        CHECK(folded[1] == b);
        CHECK(folded[2] == b.adjoint());
        CHECK(folded[3] == a.adjoint());
        CHECK(folded[4] == a);
        CHECK(folded[5] == b);
    }
    SUBCASE("even or sub-1 lambdas rejected") {
        const std::vector<Layer> chunk{l};
        CHECK_THROWS_AS(fold_chunk(chunk, 2, FoldMode::Global), std::invalid_argument);
        CHECK_THROWS_AS(fold_chunk(chunk, 0, FoldMode::Local), std::invalid_argument);
        CHECK_THROWS_AS(fold_chunk(chunk, -3, FoldMode::Local), std::invalid_argument);
    }
    SUBCASE("empty chunks rejected") {
        CHECK_THROWS_AS(fold_chunk(std::vector<Layer>{}, 3, FoldMode::Global),
                        std::invalid_argument);
    }
}

TEST_CASE("fold_circuit obeys the depth law and leaves untouched chunks alone") {
    const Circuit c = three_layer_circuit();
    const Chunking singles = chunk_circuit(c, 3);

    SUBCASE("all-ones scale factors reproduce the circuit") {
        const int ones[] = {1, 1, 1};
        CHECK(fold_circuit(c, singles, ones, FoldMode::Global) == c);
        CHECK(fold_circuit(c, singles, ones, FoldMode::Local) == c);
    }
    SUBCASE("middle layer tripled") {
        const int lambdas[] = {1, 3, 1};
        const Circuit folded = fold_circuit(c, singles, lambdas, FoldMode::Global);
        REQUIRE(folded.depth() == 5);
        CHECK(folded.layers()[0] == c.layers()[0]);
        CHECK(folded.layers()[1] == c.layers()[1]);
        CHECK(folded.layers()[2] == c.layers()[1].adjoint());
        CHECK(folded.layers()[3] == c.layers()[1]);
        CHECK(folded.layers()[4] == c.layers()[2]);
    }
    SUBCASE("depth is the lambda-weighted sum of chunk depths") {
        const int lambdas[] = {3, 5, 1};
        CHECK(fold_circuit(c, singles, lambdas, FoldMode::Local).depth() == 3 + 5 + 1);
    }
    SUBCASE("arity mismatch rejected") {
        const int lambdas[] = {1, 3};
        CHECK_THROWS_AS(fold_circuit(c, singles, lambdas, FoldMode::Local),
                        std::invalid_argument);
    }
}

TEST_CASE("inverse reverses and adjoints") {
    CHECK(inverse(Circuit(1, {})) == Circuit(1, {}));

    const Circuit c(2, {single_layer(GateKind::H, 0), Layer{{Gate::cnot(0, 1)}}});
    const Circuit inv = inverse(c);
    REQUIRE(inv.depth() == 2);
    CHECK(inv.layers()[0] == Layer{{Gate::cnot(0, 1)}});
    CHECK(inv.layers()[1] == single_layer(GateKind::H, 0));

    const Circuit s(1, {single_layer(GateKind::S, 0)});
    CHECK(inverse(s).layers()[0] == single_layer(GateKind::Sdg, 0));
}

TEST_CASE("inverse is an involution on random circuits") {
    Rng rng(11);
    for (int rep = 0; rep < 20; rep++) {
        const Circuit c = testing::random_asap_circuit(4, 12, rng);
        CHECK(inverse(inverse(c)) == c);
    }
}

TEST_CASE("global and local folding coincide on depth-1 chunks") {
    Rng rng(12);
    for (int rep = 0; rep < 20; rep++) {
        const Circuit c = testing::random_asap_circuit(3, 9, rng);
        if (c.depth() == 0) {
            continue;
        }
        const Chunking singles = chunk_circuit(c, c.depth());
        const std::vector<int> lambdas = testing::random_odd_lambdas(c.depth(), 7, rng);
        CHECK(fold_circuit(c, singles, lambdas, FoldMode::Global) ==
              fold_circuit(c, singles, lambdas, FoldMode::Local));
    }
}

TEST_CASE("folding preserves the noiseless state") {
    Rng rng(13);
    const NoiseModel off = NoiseModel::noiseless();
    for (int rep = 0; rep < 15; rep++) {
        const Circuit c = testing::random_asap_circuit(3, 10, rng);
        if (c.depth() == 0) {
            continue;
        }
        const std::size_t l = 1 + rng.next_below(c.depth());
        const Chunking chunking = chunk_circuit(c, l);
        const std::vector<int> lambdas = testing::random_odd_lambdas(l, 7, rng);
        const FoldMode mode = rng.next_bernoulli(0.5) ? FoldMode::Global : FoldMode::Local;
        const Circuit folded = fold_circuit(c, chunking, lambdas, mode);

        std::size_t expected_depth = 0;
        for (std::size_t k = 0; k < l; k++) {
            expected_depth += chunking.ranges[k].size() * static_cast<std::size_t>(lambdas[k]);
        }
        CHECK(folded.depth() == expected_depth);

        const DensityMatrix original = simulate_exact(c, off);
        const DensityMatrix scaled = simulate_exact(folded, off);
        CHECK(testing::trace_distance(original, scaled) < 1e-10);
    }
}

}  // TEST_SUITE
