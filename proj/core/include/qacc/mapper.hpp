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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qacc/program.hpp"

namespace qacc {

enum class TopologyKind { kLine, kRing, kGrid, kFull };

/// Undirected connectivity graph of physical qubits.
class Topology {
public:
    /// `grid_cols` is only meaningful for grids (row width).
    Topology(TopologyKind kind, std::size_t num_nodes,
             std::vector<std::pair<std::size_t, std::size_t>> edges, std::size_t grid_cols = 0);

    TopologyKind kind() const noexcept { return kind_; }
    std::size_t num_nodes() const noexcept { return adjacency_.size(); }

    /// Sorted (a, b) pairs with a < b.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
    /// Sorted neighbour lists.
    const std::vector<std::size_t>& neighbours(std::size_t node) const { return adjacency_.at(node); }

    bool adjacent(std::size_t a, std::size_t b) const;
    bool connected() const;

    /// Hop distance; std::nullopt when unreachable.
    std::optional<std::size_t> distance(std::size_t from, std::size_t to) const;

    /// Lexicographically smallest shortest path from `from` to any node in
    /// `goals`, never entering `blocked` (the start may be blocked).
    /// Returns the node sequence including both ends, or empty if none.
    std::vector<std::size_t> shortest_path(std::size_t from, const std::vector<std::size_t>& goals,
                                           const std::vector<std::size_t>& blocked = {}) const;

    /// e.g. "line:4", "grid:2x3".
    std::string describe() const;

private:
    TopologyKind kind_;
    std::size_t grid_cols_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

struct TopologyParams {
    std::size_t nodes = 0;  // line, ring, full
    std::size_t rows = 0;   // grid
    std::size_t cols = 0;   // grid
};

/// line: (i, i+1); ring: line plus (n-1, 0); grid: 4-neighbour lattice with
/// node r*cols+c; full: all pairs. Throws std::invalid_argument on bad sizes.
Topology build_topology(TopologyKind kind, const TopologyParams& params);

/// Parses "line:N", "ring:N", "grid:RxC" or "full:N".
Topology parse_topology(std::string_view text);

/// Bijection between the program's virtual qubits and physical nodes.
class LayoutMap {
public:
    LayoutMap() = default;
    /// Throws std::invalid_argument unless the assignment is injective and
    /// every target is < num_physical.
    LayoutMap(std::vector<std::size_t> virtual_to_physical, std::size_t num_physical);

    static LayoutMap identity(std::size_t num_virtual, std::size_t num_physical);

    std::size_t num_virtual() const noexcept { return v2p_.size(); }
    std::size_t num_physical() const noexcept { return p2v_.size(); }

    std::size_t physical(std::size_t virtual_qubit) const { return v2p_.at(virtual_qubit); }
    /// Virtual qubit on a physical node, if any.
    std::optional<std::size_t> virtual_at(std::size_t physical_node) const;

    const std::vector<std::size_t>& virtual_to_physical() const noexcept { return v2p_; }

    /// Exchanges whatever sits on two physical nodes.
    void swap_physical(std::size_t a, std::size_t b);

    bool operator==(const LayoutMap&) const = default;

private:
    std::vector<std::size_t> v2p_;
    std::vector<std::optional<std::size_t>> p2v_;
};

enum class PlacementStrategy { kIdentity, kGreedy };

/// identity: i -> i. greedy: virtual pairs ordered by two-qubit interaction
/// count (descending, ties by index) are put on free adjacent nodes; leftover
/// qubits take the lowest free nodes. Throws MappingError if the topology is
/// smaller than the program.
LayoutMap initial_placement(const Program& program, const Topology& topology,
                            PlacementStrategy strategy);

struct ScheduledCircuit {
    std::vector<Gate> instructions;
    std::vector<std::size_t> cycles;
    std::size_t depth = 0;

    /// Sum over cycles of the slowest gate in each cycle, using `durations`
    /// (missing kinds default to `fallback`).
    double latency(const std::map<GateKind, double>& durations, double fallback = 1.0) const;
};

/// ASAP list scheduling with unit durations.
ScheduledCircuit schedule_asap(const Program& program);

struct MappingReport {
    std::size_t gates_before = 0;
    std::size_t gates_after = 0;
    std::size_t added_swaps = 0;
    std::size_t depth_before = 0;
    std::size_t depth_after = 0;

    bool operator==(const MappingReport&) const = default;
};

struct RoutedProgram {
    /// Operates on physical indices; num_qubits == topology node count.
    Program program;
    LayoutMap initial_layout;
    LayoutMap final_layout;
    MappingReport report;
};

/// Inserts SWAPs so every multi-qubit gate acts on adjacent nodes. Two-qubit
/// gates move the first operand toward the second along the lexicographically
/// smallest shortest path; Toffoli needs both controls adjacent to the target.
RoutedProgram route(const Program& program, const Topology& topology, const LayoutMap& layout);

struct MappedCircuit {
    std::string cqasm;
    RoutedProgram routed;
    ScheduledCircuit schedule;
};

/// placement -> route -> schedule, with canonical cQASM output.
MappedCircuit map_circuit(const Program& program, const Topology& topology,
                          PlacementStrategy strategy);

/// True when every multi-qubit gate in `program` satisfies the adjacency rule.
bool adjacency_valid(const Program& program, const Topology& topology);

}  // namespace qacc
