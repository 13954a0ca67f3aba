// Copyright 2026 The qacc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qacc/gate.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace qacc {

std::size_t arity(GateKind kind) noexcept {
    switch (kind) {
        case GateKind::kCNOT:
        case GateKind::kCPhase:
        case GateKind::kSwap:
            return 2;
        case GateKind::kToffoli:
            return 3;
        default:
            return 1;
    }
}

bool takes_angle(GateKind kind) noexcept {
    return kind == GateKind::kRX || kind == GateKind::kRY || kind == GateKind::kRZ;
}

bool is_unitary(GateKind kind) noexcept {
    return kind != GateKind::kMeasure && kind != GateKind::kPrepZ;
}

std::string_view mnemonic(GateKind kind) noexcept {
    switch (kind) {
        case GateKind::kX: return "x";
        case GateKind::kY: return "y";
        case GateKind::kZ: return "z";
        case GateKind::kH: return "h";
        case GateKind::kRX: return "rx";
        case GateKind::kRY: return "ry";
        case GateKind::kRZ: return "rz";
        case GateKind::kCNOT: return "cnot";
        case GateKind::kCPhase: return "cz";
        case GateKind::kToffoli: return "toffoli";
        case GateKind::kSwap: return "swap";
        case GateKind::kPrepZ: return "prep_z";
        case GateKind::kMeasure: return "measure";
    }
    return "?";
}

std::optional<GateKind> kind_from_mnemonic(std::string_view text) {
    std::string lowered(text);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (GateKind kind : kAllGateKinds) {
        if (mnemonic(kind) == lowered) {
            return kind;
        }
    }
    return std::nullopt;
}

Gate make_gate(GateKind kind, std::initializer_list<std::size_t> qubits,
               std::optional<double> angle) {
    return make_gate(kind, std::vector<std::size_t>(qubits), angle);
}

namespace {

void check_shape(const Gate& gate) {
    const GateKind kind = gate.kind;
    if (gate.qubits.size() != arity(kind)) {
        throw std::invalid_argument(std::string(mnemonic(kind)) + " takes " +
                                    std::to_string(arity(kind)) + " operand(s), got " +
                                    std::to_string(gate.qubits.size()));
    }
    for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
        for (std::size_t j = i + 1; j < gate.qubits.size(); ++j) {
            if (gate.qubits[i] == gate.qubits[j]) {
                throw std::invalid_argument(std::string(mnemonic(kind)) +
                                            " operands must be distinct");
            }
        }
    }
    if (takes_angle(kind) != gate.angle.has_value()) {
        throw std::invalid_argument(std::string(mnemonic(kind)) +
                                    (takes_angle(kind) ? " requires an angle" : " takes no angle"));
    }
}

}  // namespace

Gate make_gate(GateKind kind, std::vector<std::size_t> qubits, std::optional<double> angle) {
    Gate gate{kind, std::move(qubits), angle};
    check_shape(gate);
    return gate;
}

void validate_gate(const Gate& gate, std::size_t num_qubits) {
    check_shape(gate);
    for (std::size_t q : gate.qubits) {
        if (q >= num_qubits) {
            throw std::out_of_range("qubit q[" + std::to_string(q) + "] out of range for " +
                                    std::to_string(num_qubits) + " qubits");
        }
    }
}

std::string to_string(const Gate& gate) {
    std::string out(mnemonic(gate.kind));
    for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
        out += i == 0 ? " " : ", ";
        out += "q[" + std::to_string(gate.qubits[i]) + "]";
    }
    if (gate.angle) {
        char buf[64];
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), *gate.angle);
        out += ", ";
        out.append(buf, end);
    }
    return out;
}

}  // namespace qacc
