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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qacc/program.hpp"

namespace qacc {

/**
 * Parses the cQASM subset.
 *
 *     version 1.0
 *     qubits 2
 *     # comment
 *     .bell
 *     h q[0]
 *     cnot q[0], q[1]
 *     rx q[1], 1.5707963267948966
 *     measure q[0]
 *
 * Mnemonics are case-insensitive; kernel names are case-sensitive. LF and
 * CRLF line endings are accepted. Errors throw ParseError carrying the line.
 */
Program parse(std::string_view text);

/// Reads and parses a file. A missing file is a ParseError with line 0.
Program parse_file(const std::string& path);

struct EmitOptions {
    /// Rewrite every SWAP as three CNOTs.
    bool lower_swaps = false;
};

/// Canonical LF-terminated text; parse(emit(p)) == p (without lowering).
std::string emit(const Program& program, const EmitOptions& options = {});

/// Instruction ordering constraints: edge i -> j when instruction j is the
/// next instruction after i on at least one shared operand.
struct DependencyDAG {
    std::size_t num_nodes = 0;
    /// Sorted, de-duplicated (from, to) pairs with from < to.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> predecessors;
    std::vector<std::vector<std::size_t>> successors;
};

DependencyDAG dependency_graph(const Program& program);
DependencyDAG dependency_graph(const std::vector<Gate>& instructions);

/// Picks the position (within `ready`) of the node to emit next.
using ReadyPicker = std::function<std::size_t(std::span<const std::size_t> ready)>;

/// Kahn's algorithm. Without a picker the smallest ready index goes first,
/// which reproduces program order.
std::vector<std::size_t> topological_order(const DependencyDAG& dag,
                                           const ReadyPicker& pick = {});

}  // namespace qacc
