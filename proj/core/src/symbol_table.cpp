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

#include "qacc/symbol_table.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace qacc {

SymbolTable::SymbolTable(std::size_t num_qubits) {
    entries_.reserve(num_qubits);
    for (std::size_t i = 0; i < num_qubits; ++i) {
        entries_.push_back({"q[" + std::to_string(i) + "]", i, std::nullopt, std::nullopt});
    }
}

const SymbolEntry& SymbolTable::at(std::size_t virtual_index) const {
    if (virtual_index >= entries_.size()) {
        throw std::out_of_range("no qubit with index " + std::to_string(virtual_index));
    }
    return entries_[virtual_index];
}

const SymbolEntry& SymbolTable::lookup(std::string_view name) const {
    for (const auto& entry : entries_) {
        if (entry.name == name) {
            return entry;
        }
    }
    throw std::out_of_range("unknown qubit '" + std::string(name) + "'");
}

void SymbolTable::attach_layout(std::span<const std::size_t> virtual_to_physical) {
    if (virtual_to_physical.size() != entries_.size()) {
        throw std::invalid_argument("layout size does not match the qubit count");
    }
    std::set<std::size_t> used;
    for (std::size_t p : virtual_to_physical) {
        if (!used.insert(p).second) {
            throw std::invalid_argument("layout maps two qubits to physical " + std::to_string(p));
        }
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i].physical = virtual_to_physical[i];
    }
}

void SymbolTable::snapshot(const StateVector& state) {
    const auto amps = state.live();
    for (auto& entry : entries_) {
        const std::size_t location = entry.physical.value_or(entry.virtual_index);
        if (location >= state.num_qubits()) {
            throw std::out_of_range(entry.name + " is not held by the state");
        }
        const std::uint64_t mask = std::uint64_t{1} << location;
        double p = 0.0;
        for (std::uint64_t i = 0; i < amps.size(); ++i) {
            if (i & mask) {
                p += std::norm(amps[i]);
            }
        }
        entry.p_one = p;
    }
    ++snapshots_;
}

}  // namespace qacc
