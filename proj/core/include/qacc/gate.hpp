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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qacc {

enum class GateKind {
    kX,
    kY,
    kZ,
    kH,
    kRX,
    kRY,
    kRZ,
    kCNOT,
    kCPhase,
    kToffoli,
    kSwap,
    kPrepZ,
    kMeasure,
};

/// Every kind, in declaration order.
inline constexpr GateKind kAllGateKinds[] = {
    GateKind::kX,    GateKind::kY,      GateKind::kZ,       GateKind::kH,    GateKind::kRX,
    GateKind::kRY,   GateKind::kRZ,     GateKind::kCNOT,    GateKind::kCPhase,
    GateKind::kToffoli, GateKind::kSwap, GateKind::kPrepZ, GateKind::kMeasure,
};

/// Number of qubit operands the kind takes.
std::size_t arity(GateKind kind) noexcept;

/// True for RX, RY and RZ.
bool takes_angle(GateKind kind) noexcept;

/// False for MEASURE and PREP_Z.
bool is_unitary(GateKind kind) noexcept;

/// Lower-case cQASM mnemonic ("cz" for CPHASE).
std::string_view mnemonic(GateKind kind) noexcept;

/// Case-insensitive lookup of a cQASM mnemonic.
std::optional<GateKind> kind_from_mnemonic(std::string_view text);

/// One instruction: operands are ordered with controls before the target.
struct Gate {
    GateKind kind = GateKind::kX;
    std::vector<std::size_t> qubits;
    std::optional<double> angle;

    bool operator==(const Gate&) const = default;
};

/// Builds a gate and checks arity, operand distinctness and angle presence.
/// Throws std::invalid_argument on violation.
Gate make_gate(GateKind kind, std::initializer_list<std::size_t> qubits,
               std::optional<double> angle = std::nullopt);
Gate make_gate(GateKind kind, std::vector<std::size_t> qubits,
               std::optional<double> angle = std::nullopt);

/// Checks the gate against a register of `num_qubits`. Throws
/// std::invalid_argument for arity/angle problems and std::out_of_range for
/// operands >= num_qubits.
void validate_gate(const Gate& gate, std::size_t num_qubits);

/// e.g. "cnot q[0], q[1]" or "rx q[0], 1.5707963267948966".
std::string to_string(const Gate& gate);

}  // namespace qacc
