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

#include "lre/qasm_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace lre {

Circuit asap_schedule(std::uint32_t width, std::span<const Gate> gates) {
    std::vector<Layer> layers;
    // next_free[q] = first layer index that may take a gate on qubit q.
    std::vector<std::size_t> next_free(width, 0);
    for (const Gate &g : gates) {
        std::size_t slot = next_free[g.q0];
        if (g.arity() == 2) {
            slot = std::max(slot, next_free[g.q1]);
        }
        if (slot == layers.size()) {
            layers.emplace_back();
        }
        layers[slot].gates.push_back(g);
        next_free[g.q0] = slot + 1;
        if (g.arity() == 2) {
            next_free[g.q1] = slot + 1;
        }
    }
    return Circuit(width, std::move(layers));
}

namespace {

const std::map<std::string, GateKind, std::less<>> kGateNames = {
    {"h", GateKind::H},     {"x", GateKind::X},     {"y", GateKind::Y},
    {"z", GateKind::Z},     {"s", GateKind::S},     {"t", GateKind::T},
    {"sdg", GateKind::Sdg}, {"tdg", GateKind::Tdg}, {"cx", GateKind::Cnot},
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

struct QasmStatementParser {
    std::size_t line_no;
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string &message) const {
        throw QasmParseError(line_no, message);
    }

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
    }

    std::string_view take_identifier() {
        skip_space();
        const std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            pos++;
        }
        if (pos == start) {
            fail("expected an identifier");
        }
        return text.substr(start, pos - start);
    }

    void expect(char c) {
        skip_space();
        if (pos >= text.size() || text[pos] != c) {
            fail(std::string("expected '") + c + "'");
        }
        pos++;
    }

    bool accept(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            pos++;
            return true;
        }
        return false;
    }

    std::uint32_t take_index() {
        skip_space();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
        if (pos == start) {
            fail("expected an integer index");
        }
        std::uint32_t value = 0;
        const auto res = std::from_chars(text.data() + start, text.data() + pos, value);
        if (res.ec != std::errc{}) {
            fail("index out of range");
        }
        return value;
    }

    bool at_end() {
        skip_space();
        return pos >= text.size();
    }

    /// `name [ index ]` referring to the declared register.
    std::uint32_t take_qubit(std::string_view reg_name, std::uint32_t reg_size) {
        const std::string_view name = take_identifier();
        if (name != reg_name) {
            fail("unknown register '" + std::string(name) + "'");
        }
        expect('[');
        const std::uint32_t index = take_index();
        expect(']');
        if (index >= reg_size) {
            fail("qubit index " + std::to_string(index) + " out of range");
        }
        return index;
    }
};

}  // namespace

Circuit parse_qasm(std::string_view text, std::vector<std::string> *warnings) {
    std::optional<std::string> reg_name;
    std::uint32_t reg_size = 0;
    std::vector<Gate> gates;
    bool saw_header = false;

    std::size_t line_no = 0;
    std::size_t cursor = 0;
    std::string pending;  // statements may span lines until ';'
    std::size_t pending_line = 1;

    auto handle_statement = [&](std::string_view raw, std::size_t stmt_line) {
        const std::string_view stmt = trim(raw);
        if (stmt.empty()) {
            return;
        }
        QasmStatementParser p{stmt_line, stmt};
        const std::string_view head = p.take_identifier();
        if (head == "OPENQASM") {
            saw_header = true;
            return;  // version token ignored
        }
        if (head == "include") {
            return;
        }
        if (head == "qreg") {
            if (reg_name) {
                p.fail("multiple qreg declarations are not supported");
            }
            const std::string_view name = p.take_identifier();
            p.expect('[');
            const std::uint32_t size = p.take_index();
            p.expect(']');
            if (size == 0) {
                p.fail("qreg must hold at least one qubit");
            }
            reg_name = std::string(name);
            reg_size = size;
            return;
        }
        if (head == "creg" || head == "measure" || head == "barrier" || head == "reset") {
            if (warnings) {
                warnings->push_back("line " + std::to_string(stmt_line) + ": ignored '" +
                                    std::string(head) + "' statement");
            }
            return;
        }
        const auto it = kGateNames.find(head);
        if (it == kGateNames.end()) {
            p.fail("unknown gate '" + std::string(head) + "'");
        }
        if (!reg_name) {
            p.fail("gate application before qreg declaration");
        }
        if (it->second == GateKind::Cnot) {
            const std::uint32_t control = p.take_qubit(*reg_name, reg_size);
            p.expect(',');
            const std::uint32_t target = p.take_qubit(*reg_name, reg_size);
            if (control == target) {
                p.fail("cx control and target must differ");
            }
            gates.push_back(Gate::cnot(control, target));
        } else {
            const std::uint32_t qubit = p.take_qubit(*reg_name, reg_size);
            gates.push_back(Gate::single(it->second, qubit));
        }
        if (!p.at_end()) {
            p.fail("trailing characters after gate statement");
        }
    };

    while (cursor <= text.size()) {
        const bool at_eof = cursor == text.size();
        const char c = at_eof ? '\n' : text[cursor];
        cursor++;
        if (c == '\n' || at_eof) {
            line_no++;
            // Strip line comments before splitting on ';'.
            const std::size_t comment = pending.find("//");
            if (comment != std::string::npos) {
                pending.resize(comment);
            }
            std::size_t start = 0;
            std::size_t semi;
            while ((semi = pending.find(';', start)) != std::string::npos) {
                handle_statement(std::string_view(pending).substr(start, semi - start),
                                 pending_line);
                start = semi + 1;
            }
            pending.erase(0, start);
            if (trim(pending).empty()) {
                pending.clear();
                pending_line = line_no + 1;
            }
            if (at_eof) {
                break;
            }
        } else {
            pending.push_back(c);
        }
    }
    if (!trim(pending).empty()) {
        throw QasmParseError(pending_line, "unterminated statement (missing ';')");
    }
    if (!saw_header && warnings) {
        warnings->push_back("line 1: missing OPENQASM header");
    }
    if (!reg_name) {
        throw QasmParseError(line_no == 0 ? 1 : line_no, "no qreg declaration found");
    }
    return asap_schedule(reg_size, gates);
}

std::string emit_qasm(const Circuit &circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.width() << "];\n";
    for (const Layer &layer : circuit.layers()) {
        for (const Gate &g : layer.gates) {
            out << gate_name(g.kind) << " q[" << g.q0 << "]";
            if (g.arity() == 2) {
                out << ",q[" << g.q1 << "]";
            }
            out << ";\n";
        }
    }
    return out.str();
}

namespace {

constexpr std::string_view kFormatVersion = "1";

[[noreturn]] void json_fail(const std::string &path, const std::string &message) {
    throw JsonSchemaError(path, message);
}

std::uint32_t require_qubit(const nlohmann::json &value, const std::string &path) {
    if (!value.is_number_unsigned()) {
        json_fail(path, "expected a non-negative qubit index");
    }
    return value.get<std::uint32_t>();
}

}  // namespace

Circuit parse_json(std::string_view text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        json_fail("$", "invalid JSON");
    }
    if (!doc.is_object()) {
        json_fail("$", "expected an object");
    }
    if (doc.contains("format_version") && doc["format_version"] != kFormatVersion) {
        json_fail("$.format_version", "unsupported format version");
    }
    if (!doc.contains("width") || !doc["width"].is_number_unsigned()) {
        json_fail("$.width", "expected a positive integer");
    }
    const std::uint32_t width = doc["width"].get<std::uint32_t>();
    if (width == 0) {
        json_fail("$.width", "expected a positive integer");
    }
    if (!doc.contains("layers") || !doc["layers"].is_array()) {
        json_fail("$.layers", "expected an array of layers");
    }

    std::vector<Layer> layers;
    for (std::size_t li = 0; li < doc["layers"].size(); li++) {
        const std::string layer_path = "$.layers[" + std::to_string(li) + "]";
        const nlohmann::json &jlayer = doc["layers"][li];
        if (!jlayer.is_array()) {
            json_fail(layer_path, "expected an array of gates");
        }
        Layer layer;
        for (std::size_t gi = 0; gi < jlayer.size(); gi++) {
            const std::string gate_path = layer_path + "[" + std::to_string(gi) + "]";
            const nlohmann::json &jgate = jlayer[gi];
            if (!jgate.is_object() || !jgate.contains("kind") || !jgate.contains("qubits")) {
                json_fail(gate_path, "expected {kind, qubits}");
            }
            if (!jgate["kind"].is_string()) {
                json_fail(gate_path + ".kind", "expected a string");
            }
            const std::string kind_name = jgate["kind"].get<std::string>();
            const auto it = kGateNames.find(kind_name);
            if (it == kGateNames.end()) {
                json_fail(gate_path + ".kind", "unknown gate '" + kind_name + "'");
            }
            const nlohmann::json &jqubits = jgate["qubits"];
            if (!jqubits.is_array() || jqubits.size() != gate_arity(it->second)) {
                json_fail(gate_path + ".qubits",
                          "expected " + std::to_string(gate_arity(it->second)) + " qubit indices");
            }
            const std::string qubits_path = gate_path + ".qubits";
            if (it->second == GateKind::Cnot) {
                const std::uint32_t control = require_qubit(jqubits[0], qubits_path + "[0]");
                const std::uint32_t target = require_qubit(jqubits[1], qubits_path + "[1]");
                if (control == target) {
                    json_fail(qubits_path, "cx control and target must differ");
                }
                layer.gates.push_back(Gate::cnot(control, target));
            } else {
                layer.gates.push_back(
                    Gate::single(it->second, require_qubit(jqubits[0], qubits_path + "[0]")));
            }
        }
        layers.push_back(std::move(layer));
    }

    try {
        return Circuit(width, std::move(layers));
    } catch (const std::invalid_argument &e) {
        json_fail("$.layers", e.what());
    }
}

std::string emit_json(const Circuit &circuit) {
    nlohmann::json doc;
    doc["format_version"] = kFormatVersion;
    doc["width"] = circuit.width();
    doc["layers"] = nlohmann::json::array();
    for (const Layer &layer : circuit.layers()) {
        nlohmann::json jlayer = nlohmann::json::array();
        for (const Gate &g : layer.gates) {
            nlohmann::json jgate;
            jgate["kind"] = std::string(gate_name(g.kind));
            jgate["qubits"] = g.arity() == 2 ? nlohmann::json::array({g.q0, g.q1})
                                             : nlohmann::json::array({g.q0});
            jlayer.push_back(std::move(jgate));
        }
        doc["layers"].push_back(std::move(jlayer));
    }
    return doc.dump(2) + "\n";
}

}  // namespace lre
