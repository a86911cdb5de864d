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

#ifndef LRE_CIRCUIT_HPP
#define LRE_CIRCUIT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lre {

/// Supported gate set: six single-qubit gates, their adjoints, and CNOT.
enum class GateKind : std::uint8_t { H, X, Y, Z, S, T, Sdg, Tdg, Cnot };

std::size_t gate_arity(GateKind kind);
GateKind adjoint_kind(GateKind kind);
std::string_view gate_name(GateKind kind);

/// A single gate application. `q1` is meaningful only for CNOT (target);
/// `q0` is the lone qubit for single-qubit kinds and the control for CNOT.
struct Gate {
    GateKind kind = GateKind::H;
    std::uint32_t q0 = 0;
    std::uint32_t q1 = 0;

    static Gate single(GateKind kind, std::uint32_t qubit);
    static Gate cnot(std::uint32_t control, std::uint32_t target);

    std::size_t arity() const { return gate_arity(kind); }
    std::uint32_t control() const { return q0; }
    std::uint32_t target() const { return q1; }

    Gate adjoint() const { return Gate{adjoint_kind(kind), q0, q1}; }
    std::uint32_t max_qubit() const { return arity() == 2 && q1 > q0 ? q1 : q0; }

    bool operator==(const Gate &) const = default;
};

/// Gates acting concurrently; no qubit may appear twice.
struct Layer {
    std::vector<Gate> gates;

    // Gates in a layer act on disjoint qubits, so the adjoint is gatewise.
    Layer adjoint() const;

    bool operator==(const Layer &) const = default;
};

/// A layered circuit. Layers are stored in application order: layers()[0]
/// is applied first.
class Circuit {
  public:
    Circuit() = default;
    Circuit(std::uint32_t width, std::vector<Layer> layers);

    std::uint32_t width() const { return width_; }
    std::size_t depth() const { return layers_.size(); }
    const std::vector<Layer> &layers() const { return layers_; }

    bool operator==(const Circuit &) const = default;

  private:
    std::uint32_t width_ = 0;
    std::vector<Layer> layers_;
};

/// Half-open range [begin, end) of layer indices.
struct LayerRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool operator==(const LayerRange &) const = default;
};

/// Contiguous, non-overlapping layer ranges covering a circuit exactly once.
struct Chunking {
    std::vector<LayerRange> ranges;

    std::size_t size() const { return ranges.size(); }
    bool operator==(const Chunking &) const = default;
};

enum class FoldMode { Global, Local };

/// Split into `chunk_count` contiguous chunks of near-equal depth; the first
/// depth % chunk_count chunks carry the extra layer.
Chunking chunk_circuit(const Circuit &circuit, std::size_t chunk_count);

void validate_chunking(const Circuit &circuit, const Chunking &chunking);

/// Unitary folding of one chunk with odd scale factor `lambda`.
/// Global repeats the whole chunk, local folds each layer in place; the
/// output depth is lambda * chunk.size() for both modes.
std::vector<Layer> fold_chunk(std::span<const Layer> chunk, int lambda, FoldMode mode);

/// Fold each chunk with its own scale factor (one odd lambda per chunk).
Circuit fold_circuit(const Circuit &circuit, const Chunking &chunking,
                     std::span<const int> lambdas, FoldMode mode);

/// Layers reversed and every gate adjointed; circuit * inverse(circuit) acts
/// as the identity.
Circuit inverse(const Circuit &circuit);

}  // namespace lre

#endif
