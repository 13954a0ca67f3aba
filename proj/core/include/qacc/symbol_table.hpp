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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qacc/state.hpp"

namespace qacc {

struct SymbolEntry {
    std::string name;
    std::size_t virtual_index = 0;
    /// Physical location once a layout is attached.
    std::optional<std::size_t> physical;
    /// Probability of reading |1> from the most recent snapshot.
    std::optional<double> p_one;
};

/**
 * Links qubit names ("q[i]") to their physical location and to the latest
 * amplitude readout taken from a state vector.
 */
class SymbolTable {
public:
    explicit SymbolTable(std::size_t num_qubits);

    std::size_t size() const noexcept { return entries_.size(); }

    /// Throws std::out_of_range for unknown names or indices.
    const SymbolEntry& at(std::size_t virtual_index) const;
    const SymbolEntry& lookup(std::string_view name) const;

    /// Attaches a virtual -> physical assignment. Throws std::invalid_argument
    /// unless it has one entry per qubit and is injective.
    void attach_layout(std::span<const std::size_t> virtual_to_physical);

    /// Records the per-qubit |1> probability, reading each qubit at its
    /// physical location when a layout is attached.
    void snapshot(const StateVector& state);

    /// Number of snapshots taken so far.
    std::size_t snapshot_count() const noexcept { return snapshots_; }

private:
    std::vector<SymbolEntry> entries_;
    std::size_t snapshots_ = 0;
};

}  // namespace qacc
