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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qacc/gate.hpp"

namespace qacc {

/// Named group of instructions. An empty name marks the leading block of
/// instructions that appear before any kernel marker.
struct Kernel {
    std::string name;
    std::vector<Gate> instructions;

    bool operator==(const Kernel&) const = default;
};

/// A parsed cQASM program. Kernels are organizational only: execution order
/// is the concatenation of all kernels.
struct Program {
    std::string version = "1.0";
    std::size_t num_qubits = 0;
    std::vector<Kernel> kernels;

    bool operator==(const Program&) const = default;

    /// All instructions in execution order.
    std::vector<Gate> instructions() const;

    std::size_t instruction_count() const;

    /// Appends to the last kernel, creating an anonymous one if there is none.
    void append(Gate gate);

    /// Starts a new kernel and returns it.
    Kernel& add_kernel(std::string name);
};

/// True when `name` matches [A-Za-z_][A-Za-z0-9_]*.
bool is_valid_kernel_name(std::string_view name);

/// Checks operand ranges, gate shapes and kernel naming rules.
/// Throws std::invalid_argument / std::out_of_range.
void validate(const Program& program);

/// Convenience: a single anonymous kernel holding `gates`.
Program make_program(std::size_t num_qubits, std::vector<Gate> gates);

}  // namespace qacc
