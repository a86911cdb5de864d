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

#include "lre/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace lre {

std::size_t gate_arity(GateKind kind) {
    return kind == GateKind::Cnot ? 2 : 1;
}

GateKind adjoint_kind(GateKind kind) {
    switch (kind) {
        case GateKind::S:
            return GateKind::Sdg;
        case GateKind::Sdg:
            return GateKind::S;
        case GateKind::T:
            return GateKind::Tdg;
        case GateKind::Tdg:
            return GateKind::T;
        default:
            return kind;  // H, X, Y, Z, CNOT are self-adjoint
    }
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::X:
            return "x";
        case GateKind::Y:
            return "y";
        case GateKind::Z:
            return "z";
        case GateKind::S:
            return "s";
        case GateKind::T:
            return "t";
        case GateKind::Sdg:
            return "sdg";
        case GateKind::Tdg:
            return "tdg";
        case GateKind::Cnot:
            return "cx";
    }
    throw std::logic_error("unreachable gate kind");
}

Gate Gate::single(GateKind kind, std::uint32_t qubit) {
    if (gate_arity(kind) != 1) {
        throw std::invalid_argument("Gate::single requires a single-qubit kind");
    }
    return Gate{kind, qubit, qubit};
}

Gate Gate::cnot(std::uint32_t control, std::uint32_t target) {
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    return Gate{GateKind::Cnot, control, target};
}

Layer Layer::adjoint() const {
    Layer out;
    out.gates.reserve(gates.size());
    for (const Gate &g : gates) {
        out.gates.push_back(g.adjoint());
    }
    return out;
}

namespace {

void validate_layers(std::uint32_t width, const std::vector<Layer> &layers) {
    std::vector<std::size_t> seen_in_layer(width, SIZE_MAX);
    for (std::size_t li = 0; li < layers.size(); li++) {
        for (const Gate &g : layers[li].gates) {
            if (g.arity() == 2 && g.q0 == g.q1) {
                throw std::invalid_argument("CNOT control and target must differ");
            }
            if (g.max_qubit() >= width) {
                throw std::invalid_argument("gate qubit index exceeds circuit width");
            }
            const std::uint32_t qs[2] = {g.q0, g.q1};
            for (std::size_t k = 0; k < g.arity(); k++) {
                if (seen_in_layer[qs[k]] == li) {
                    throw std::invalid_argument("qubit appears in two gates of the same layer");
                }
                seen_in_layer[qs[k]] = li;
            }
        }
    }
}

}  // namespace

Circuit::Circuit(std::uint32_t width, std::vector<Layer> layers)
    : width_(width), layers_(std::move(layers)) {
    validate_layers(width_, layers_);
}

Chunking chunk_circuit(const Circuit &circuit, std::size_t chunk_count) {
    const std::size_t depth = circuit.depth();
    if (chunk_count < 1 || chunk_count > depth) {
        throw std::invalid_argument("chunk count must satisfy 1 <= l <= depth");
    }
    const std::size_t small = depth / chunk_count;
    const std::size_t extras = depth % chunk_count;
    Chunking out;
    out.ranges.reserve(chunk_count);
    std::size_t pos = 0;
    for (std::size_t k = 0; k < chunk_count; k++) {
        const std::size_t len = small + (k < extras ? 1 : 0);
        out.ranges.push_back(LayerRange{pos, pos + len});
        pos += len;
    }
    return out;
}

void validate_chunking(const Circuit &circuit, const Chunking &chunking) {
    std::size_t pos = 0;
    if (chunking.ranges.empty()) {
        throw std::invalid_argument("chunking must contain at least one range");
    }
    for (const LayerRange &r : chunking.ranges) {
        if (r.begin != pos || r.end <= r.begin) {
            throw std::invalid_argument("chunk ranges must be contiguous and non-empty");
        }
        pos = r.end;
    }
    if (pos != circuit.depth()) {
        throw std::invalid_argument("chunking must cover all layers exactly once");
    }
}

namespace {

void require_odd_lambda(int lambda) {
    if (lambda < 1 || lambda % 2 == 0) {
        throw std::invalid_argument("scale factor must be an odd integer >= 1");
    }
}

}  // namespace

std::vector<Layer> fold_chunk(std::span<const Layer> chunk, int lambda, FoldMode mode) {
    require_odd_lambda(lambda);
    if (chunk.empty()) {
        throw std::invalid_argument("fold_chunk requires a non-empty chunk");
    }
    const int repeats = (lambda - 1) / 2;
    std::vector<Layer> out;
    out.reserve(chunk.size() * static_cast<std::size_t>(lambda));
    if (mode == FoldMode::Global) {
        // chunk, then (adjoint-of-chunk, chunk) repeated. The adjoint of a
        // multi-layer chunk reverses layer order.
        out.insert(out.end(), chunk.begin(), chunk.end());
        for (int r = 0; r < repeats; r++) {
            for (auto it = chunk.rbegin(); it != chunk.rend(); ++it) {
                out.push_back(it->adjoint());
            }
            out.insert(out.end(), chunk.begin(), chunk.end());
        }
    } else {
        for (const Layer &layer : chunk) {
            out.push_back(layer);
            for (int r = 0; r < repeats; r++) {
                out.push_back(layer.adjoint());
                out.push_back(layer);
            }
        }
    }
    return out;
}

Circuit fold_circuit(const Circuit &circuit, const Chunking &chunking,
                     std::span<const int> lambdas, FoldMode mode) {
    validate_chunking(circuit, chunking);
    if (lambdas.size() != chunking.size()) {
        throw std::invalid_argument("one scale factor per chunk required");
    }
    std::vector<Layer> folded;
    for (std::size_t k = 0; k < chunking.size(); k++) {
        const LayerRange &r = chunking.ranges[k];
        std::span<const Layer> chunk(circuit.layers().data() + r.begin, r.size());
        std::vector<Layer> piece = fold_chunk(chunk, lambdas[k], mode);
        folded.insert(folded.end(), std::make_move_iterator(piece.begin()),
                      std::make_move_iterator(piece.end()));
    }
    return Circuit(circuit.width(), std::move(folded));
}

Circuit inverse(const Circuit &circuit) {
    std::vector<Layer> out;
    out.reserve(circuit.depth());
    for (auto it = circuit.layers().rbegin(); it != circuit.layers().rend(); ++it) {
        out.push_back(it->adjoint());
    }
    return Circuit(circuit.width(), std::move(out));
}

}  // namespace lre
