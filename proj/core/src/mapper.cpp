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

#include "qacc/mapper.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

#include "qacc/cqasm.hpp"
#include "qacc/errors.hpp"

namespace qacc {

// ---------------------------------------------------------------------------
// Topology

Topology::Topology(TopologyKind kind, std::size_t num_nodes,
                   std::vector<std::pair<std::size_t, std::size_t>> edges, std::size_t grid_cols)
    : kind_(kind), grid_cols_(grid_cols == 0 ? num_nodes : grid_cols), adjacency_(num_nodes) {
    if (num_nodes == 0) {
        throw std::invalid_argument("topology needs at least one node");
    }
    std::set<std::pair<std::size_t, std::size_t>> unique;
    for (auto [a, b] : edges) {
        if (a == b || a >= num_nodes || b >= num_nodes) {
            throw std::invalid_argument("invalid edge (" + std::to_string(a) + ", " +
                                        std::to_string(b) + ")");
        }
        unique.emplace(std::min(a, b), std::max(a, b));
    }
    edges_.assign(unique.begin(), unique.end());
    for (auto [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
}

bool Topology::adjacent(std::size_t a, std::size_t b) const {
    const auto& list = adjacency_.at(a);
    return std::binary_search(list.begin(), list.end(), b);
}

bool Topology::connected() const {
    for (std::size_t node = 1; node < num_nodes(); ++node) {
        if (!distance(0, node)) {
            return false;
        }
    }
    return true;
}

std::optional<std::size_t> Topology::distance(std::size_t from, std::size_t to) const {
    const auto path = shortest_path(from, {to});
    if (path.empty()) {
        return std::nullopt;
    }
    return path.size() - 1;
}

std::vector<std::size_t> Topology::shortest_path(std::size_t from,
                                                 const std::vector<std::size_t>& goals,
                                                 const std::vector<std::size_t>& blocked) const {
    constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
    const std::size_t n = num_nodes();
    if (from >= n) {
        throw std::out_of_range("node " + std::to_string(from) + " not in topology");
    }
    std::vector<bool> is_blocked(n, false);
    for (std::size_t b : blocked) {
        if (b < n) {
            is_blocked[b] = true;
        }
    }
    // Distances to the goal set, over unblocked nodes.
    std::vector<std::size_t> dist(n, kUnreached);
    std::deque<std::size_t> queue;
    for (std::size_t g : goals) {
        if (g < n && !is_blocked[g] && dist[g] == kUnreached) {
            dist[g] = 0;
            queue.push_back(g);
        }
    }
    if (dist[from] == 0) {
        return {from};
    }
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t next : adjacency_[cur]) {
            if (!is_blocked[next] && dist[next] == kUnreached) {
                dist[next] = dist[cur] + 1;
                queue.push_back(next);
            }
        }
    }
    std::size_t best = kUnreached;
    for (std::size_t next : adjacency_[from]) {
        if (dist[next] != kUnreached) {
            best = std::min(best, dist[next]);
        }
    }
    if (best == kUnreached) {
        return {};
    }
    // Walk downhill, always taking the smallest qualifying neighbour.
    std::vector<std::size_t> path{from};
    std::size_t remaining = best + 1;
    std::size_t cur = from;
    while (remaining > 0) {
        for (std::size_t next : adjacency_[cur]) {
            if (dist[next] == remaining - 1) {
                cur = next;
                break;
            }
        }
        path.push_back(cur);
        --remaining;
    }
    return path;
}

std::string Topology::describe() const {
    switch (kind_) {
        case TopologyKind::kLine:
            return "line:" + std::to_string(num_nodes());
        case TopologyKind::kRing:
            return "ring:" + std::to_string(num_nodes());
        case TopologyKind::kFull:
            return "full:" + std::to_string(num_nodes());
        case TopologyKind::kGrid:
            return "grid:" + std::to_string(num_nodes() / grid_cols_) + "x" + std::to_string(grid_cols_);
    }
    return "?";
}

Topology build_topology(TopologyKind kind, const TopologyParams& params) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    switch (kind) {
        case TopologyKind::kLine:
        case TopologyKind::kRing: {
            const std::size_t n = params.nodes;
            if (n < 1) {
                throw std::invalid_argument("topology needs at least one node");
            }
            for (std::size_t i = 0; i + 1 < n; ++i) {
                edges.emplace_back(i, i + 1);
            }
            if (kind == TopologyKind::kRing && n > 2) {
                edges.emplace_back(n - 1, 0);
            }
            return Topology(kind, n, std::move(edges));
        }
        case TopologyKind::kGrid: {
            const std::size_t rows = params.rows;
            const std::size_t cols = params.cols;
            if (rows < 1 || cols < 1) {
                throw std::invalid_argument("grid needs rows >= 1 and cols >= 1");
            }
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < cols; ++c) {
                    const std::size_t node = r * cols + c;
                    if (c + 1 < cols) {
                        edges.emplace_back(node, node + 1);
                    }
                    if (r + 1 < rows) {
                        edges.emplace_back(node, node + cols);
                    }
                }
            }
            return Topology(kind, rows * cols, std::move(edges), cols);
        }
        case TopologyKind::kFull: {
            const std::size_t n = params.nodes;
            if (n < 1) {
                throw std::invalid_argument("topology needs at least one node");
            }
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = a + 1; b < n; ++b) {
                    edges.emplace_back(a, b);
                }
            }
            return Topology(kind, n, std::move(edges));
        }
    }
    throw std::invalid_argument("unknown topology kind");
}

namespace {

std::size_t parse_count(std::string_view digits, std::string_view text) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || value == 0) {
        throw std::invalid_argument("invalid topology '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Topology parse_topology(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("topology must look like kind:size, got '" + std::string(text) + "'");
    }
    const std::string_view kind = text.substr(0, colon);
    const std::string_view size = text.substr(colon + 1);
    if (kind == "grid") {
        const auto x = size.find('x');
        if (x == std::string_view::npos) {
            throw std::invalid_argument("grid topology must look like grid:RxC");
        }
        return build_topology(TopologyKind::kGrid,
                              {0, parse_count(size.substr(0, x), text), parse_count(size.substr(x + 1), text)});
    }
    const std::size_t n = parse_count(size, text);
    if (kind == "line") {
        return build_topology(TopologyKind::kLine, {n, 0, 0});
    }
    if (kind == "ring") {
        return build_topology(TopologyKind::kRing, {n, 0, 0});
    }
    if (kind == "full") {
        return build_topology(TopologyKind::kFull, {n, 0, 0});
    }
    throw std::invalid_argument("unknown topology kind '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------------------
// Layout

LayoutMap::LayoutMap(std::vector<std::size_t> virtual_to_physical, std::size_t num_physical)
    : v2p_(std::move(virtual_to_physical)), p2v_(num_physical) {
    for (std::size_t v = 0; v < v2p_.size(); ++v) {
        const std::size_t p = v2p_[v];
        if (p >= num_physical) {
            throw std::invalid_argument("layout target " + std::to_string(p) + " out of range");
        }
        if (p2v_[p]) {
            throw std::invalid_argument("layout maps two qubits to physical " + std::to_string(p));
        }
        p2v_[p] = v;
    }
}

LayoutMap LayoutMap::identity(std::size_t num_virtual, std::size_t num_physical) {
    std::vector<std::size_t> v2p(num_virtual);
    for (std::size_t i = 0; i < num_virtual; ++i) {
        v2p[i] = i;
    }
    return LayoutMap(std::move(v2p), num_physical);
}

std::optional<std::size_t> LayoutMap::virtual_at(std::size_t physical_node) const {
    return p2v_.at(physical_node);
}

void LayoutMap::swap_physical(std::size_t a, std::size_t b) {
    std::swap(p2v_.at(a), p2v_.at(b));
    if (p2v_[a]) {
        v2p_[*p2v_[a]] = a;
    }
    if (p2v_[b]) {
        v2p_[*p2v_[b]] = b;
    }
}

// ---------------------------------------------------------------------------
// Placement

LayoutMap initial_placement(const Program& program, const Topology& topology,
                            PlacementStrategy strategy) {
    const std::size_t n = program.num_qubits;
    const std::size_t nodes = topology.num_nodes();
    if (nodes < n) {
        throw MappingError("topology " + topology.describe() + " has " + std::to_string(nodes) +
                           " nodes but the program needs " + std::to_string(n));
    }
    // Every placement is equally good on a fully connected device.
    if (strategy == PlacementStrategy::kIdentity || topology.kind() == TopologyKind::kFull) {
        return LayoutMap::identity(n, nodes);
    }

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> interactions;
    for (const auto& gate : program.instructions()) {
        if (gate.qubits.size() < 2) {
            continue;
        }
        for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
            for (std::size_t j = i + 1; j < gate.qubits.size(); ++j) {
                const auto a = std::min(gate.qubits[i], gate.qubits[j]);
                const auto b = std::max(gate.qubits[i], gate.qubits[j]);
                ++interactions[{a, b}];
            }
        }
    }
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> pairs(
        interactions.begin(), interactions.end());
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& x, const auto& y) { return x.second > y.second; });

    constexpr auto kFree = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> v2p(n, kFree);
    std::vector<bool> node_used(nodes, false);
    auto place = [&](std::size_t v, std::size_t p) {
        v2p[v] = p;
        node_used[p] = true;
    };

    for (const auto& [pair, count] : pairs) {
        const auto [u, v] = pair;
        const bool u_placed = v2p[u] != kFree;
        const bool v_placed = v2p[v] != kFree;
        if (u_placed && v_placed) {
            continue;
        }
        if (!u_placed && !v_placed) {
            for (auto [a, b] : topology.edges()) {
                if (!node_used[a] && !node_used[b]) {
                    place(u, a);
                    place(v, b);
                    break;
                }
            }
            continue;
        }
        const std::size_t anchor = u_placed ? v2p[u] : v2p[v];
        const std::size_t loose = u_placed ? v : u;
        for (std::size_t p : topology.neighbours(anchor)) {
            if (!node_used[p]) {
                place(loose, p);
                break;
            }
        }
    }
    std::size_t next_free = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (v2p[v] != kFree) {
            continue;
        }
        while (node_used[next_free]) {
            ++next_free;
        }
        place(v, next_free);
    }
    return LayoutMap(std::move(v2p), nodes);
}

// ---------------------------------------------------------------------------
// Scheduling

ScheduledCircuit schedule_asap(const Program& program) {
    ScheduledCircuit schedule;
    schedule.instructions = program.instructions();
    const DependencyDAG dag = dependency_graph(schedule.instructions);
    schedule.cycles.assign(dag.num_nodes, 0);
    for (std::size_t j = 0; j < dag.num_nodes; ++j) {
        std::size_t cycle = 0;
        for (std::size_t i : dag.predecessors[j]) {
            cycle = std::max(cycle, schedule.cycles[i] + 1);
        }
        schedule.cycles[j] = cycle;
        schedule.depth = std::max(schedule.depth, cycle + 1);
    }
    return schedule;
}

double ScheduledCircuit::latency(const std::map<GateKind, double>& durations, double fallback) const {
    std::vector<double> slowest(depth, 0.0);
    for (std::size_t j = 0; j < instructions.size(); ++j) {
        const auto it = durations.find(instructions[j].kind);
        const double d = it == durations.end() ? fallback : it->second;
        slowest[cycles[j]] = std::max(slowest[cycles[j]], d);
    }
    double total = 0.0;
    for (double d : slowest) {
        total += d;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Routing

namespace {

class Router {
public:
    Router(const Topology& topology, LayoutMap layout) : topology_(topology), layout_(std::move(layout)) {}

    const LayoutMap& layout() const { return layout_; }
    std::size_t added_swaps() const { return added_swaps_; }

    void route_gate(const Gate& gate, std::vector<Gate>& out) {
        switch (gate.qubits.size()) {
            case 1:
                break;
            case 2:
                route_pair(gate.qubits[0], gate.qubits[1], out);
                break;
            case 3:
                route_toffoli(gate.qubits[0], gate.qubits[1], gate.qubits[2], out);
                break;
            default:
                throw MappingError("cannot route " + to_string(gate));
        }
        Gate physical = gate;
        for (auto& q : physical.qubits) {
            q = layout_.physical(q);
        }
        out.push_back(std::move(physical));
    }

private:
    void swap_nodes(std::size_t a, std::size_t b, std::vector<Gate>& out) {
        out.push_back(make_gate(GateKind::kSwap, {a, b}));
        layout_.swap_physical(a, b);
        ++added_swaps_;
    }

    // Moves whatever sits on path[0] to path.back().
    void walk(const std::vector<std::size_t>& path, std::vector<Gate>& out) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            swap_nodes(path[i], path[i + 1], out);
        }
    }

    void route_pair(std::size_t mover, std::size_t anchor, std::vector<Gate>& out) {
        const std::size_t from = layout_.physical(mover);
        const std::size_t to = layout_.physical(anchor);
        if (topology_.adjacent(from, to)) {
            return;
        }
        auto path = topology_.shortest_path(from, {to});
        if (path.empty()) {
            throw MappingError("physical qubits " + std::to_string(from) + " and " +
                               std::to_string(to) + " are disconnected in " + topology_.describe());
        }
        path.pop_back();
        walk(path, out);
    }

    void route_toffoli(std::size_t c1, std::size_t c2, std::size_t target, std::vector<Gate>& out) {
        const std::size_t limit = 4 * topology_.num_nodes() + 16;
        for (std::size_t step = 0; step < limit; ++step) {
            const std::size_t t = layout_.physical(target);
            const std::size_t p1 = layout_.physical(c1);
            const std::size_t p2 = layout_.physical(c2);
            const bool ok1 = topology_.adjacent(p1, t);
            const bool ok2 = topology_.adjacent(p2, t);
            if (ok1 && ok2) {
                return;
            }
            if (topology_.neighbours(t).size() < 2) {
                move_target_to_hub(t, out);
                continue;
            }
            const std::size_t control = ok1 ? c2 : c1;
            const std::size_t other = ok1 ? c1 : c2;
            const std::size_t pc = layout_.physical(control);
            std::vector<std::size_t> blocked{t};
            if (topology_.adjacent(layout_.physical(other), t)) {
                blocked.push_back(layout_.physical(other));
            }
            std::vector<std::size_t> goals;
            for (std::size_t nb : topology_.neighbours(t)) {
                if (std::find(blocked.begin(), blocked.end(), nb) == blocked.end()) {
                    goals.push_back(nb);
                }
            }
            const auto path = topology_.shortest_path(pc, goals, blocked);
            if (!path.empty()) {
                walk(path, out);
                continue;
            }
            // Blocked in: step the target toward the stranded control instead.
            const auto toward = topology_.shortest_path(t, {pc});
            if (toward.size() < 2) {
                throw MappingError("toffoli operands are disconnected in " + topology_.describe());
            }
            swap_nodes(toward[0], toward[1], out);
        }
        throw MappingError("could not make toffoli operands adjacent on " + topology_.describe());
    }

    void move_target_to_hub(std::size_t t, std::vector<Gate>& out) {
        std::vector<std::size_t> hubs;
        for (std::size_t node = 0; node < topology_.num_nodes(); ++node) {
            if (topology_.neighbours(node).size() >= 2) {
                hubs.push_back(node);
            }
        }
        const auto path = topology_.shortest_path(t, hubs);
        if (path.size() < 2) {
            throw MappingError("topology " + topology_.describe() +
                               " has no node with two neighbours for a toffoli");
        }
        swap_nodes(path[0], path[1], out);
    }

    const Topology& topology_;
    LayoutMap layout_;
    std::size_t added_swaps_ = 0;
};

}  // namespace

RoutedProgram route(const Program& program, const Topology& topology, const LayoutMap& layout) {
    validate(program);
    if (layout.num_virtual() != program.num_qubits || layout.num_physical() != topology.num_nodes()) {
        throw MappingError("layout does not match program and topology sizes");
    }
    if (!topology.connected()) {
        throw MappingError("topology " + topology.describe() + " is disconnected");
    }
    Router router(topology, layout);
    RoutedProgram result;
    result.program.version = program.version;
    result.program.num_qubits = topology.num_nodes();
    for (const auto& kernel : program.kernels) {
        Kernel mapped{kernel.name, {}};
        for (const auto& gate : kernel.instructions) {
            router.route_gate(gate, mapped.instructions);
        }
        result.program.kernels.push_back(std::move(mapped));
    }
    result.initial_layout = layout;
    result.final_layout = router.layout();
    result.report.gates_before = program.instruction_count();
    result.report.gates_after = result.program.instruction_count();
    result.report.added_swaps = router.added_swaps();
    result.report.depth_before = schedule_asap(program).depth;
    result.report.depth_after = schedule_asap(result.program).depth;
    return result;
}

MappedCircuit map_circuit(const Program& program, const Topology& topology,
                          PlacementStrategy strategy) {
    MappedCircuit mapped;
    const LayoutMap layout = initial_placement(program, topology, strategy);
    mapped.routed = route(program, topology, layout);
    mapped.schedule = schedule_asap(mapped.routed.program);
    mapped.cqasm = emit(mapped.routed.program);
    return mapped;
}

bool adjacency_valid(const Program& program, const Topology& topology) {
    for (const auto& gate : program.instructions()) {
        if (gate.qubits.size() == 2 && !topology.adjacent(gate.qubits[0], gate.qubits[1])) {
            return false;
        }
        if (gate.qubits.size() == 3 && !(topology.adjacent(gate.qubits[0], gate.qubits[2]) &&
                                         topology.adjacent(gate.qubits[1], gate.qubits[2]))) {
            return false;
        }
    }
    return true;
}

}  // namespace qacc
