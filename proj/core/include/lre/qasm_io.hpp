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
// Circuit I/O: a minimal OpenQASM 2.0 subset (layering re-derived by ASAP
// packing) and a native JSON format that preserves layering exactly.

#ifndef LRE_QASM_IO_HPP
#define LRE_QASM_IO_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lre/circuit.hpp"

namespace lre {

class QasmParseError : public std::runtime_error {
  public:
    QasmParseError(std::size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

class JsonSchemaError : public std::runtime_error {
  public:
    JsonSchemaError(std::string path, const std::string &message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

    const std::string &path() const { return path_; }

  private:
    std::string path_;
};

/// Pack a gate sequence into layers: each gate lands in the earliest layer
/// after the last layer touching any of its qubits.
Circuit asap_schedule(std::uint32_t width, std::span<const Gate> gates);

/// Parse an OpenQASM 2.0 program with a single qreg and gates from
/// {h,x,y,z,s,t,sdg,tdg,cx}. measure/barrier/creg statements are skipped and
/// reported through `warnings` when provided.
Circuit parse_qasm(std::string_view text, std::vector<std::string> *warnings = nullptr);

std::string emit_qasm(const Circuit &circuit);

/// JSON round trip is lossless, including explicit layer boundaries.
Circuit parse_json(std::string_view text);

std::string emit_json(const Circuit &circuit);

}  // namespace lre

#endif
