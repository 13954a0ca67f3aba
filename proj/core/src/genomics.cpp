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

#include "qacc/genomics.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qacc/errors.hpp"
#include "qacc/execute.hpp"

namespace qacc::genomics {

namespace {

bool is_binary(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

std::string nucleotides_to_bits(std::string_view s) {
    std::string bits;
    bits.reserve(2 * s.size());
    for (char c : s) {
        switch (std::toupper(static_cast<unsigned char>(c))) {
            case 'C': bits += "00"; break;
            case 'A': bits += "01"; break;
            case 'G': bits += "10"; break;
            case 'T': bits += "11"; break;
            default:
                throw std::invalid_argument(std::string("unexpected symbol '") + c +
                                            "'; use 0/1 or A/C/G/T");
        }
    }
    return bits;
}

void check_instance(const AlignmentInstance& inst) {
    if (inst.read.empty()) {
        throw std::invalid_argument("read must not be empty");
    }
    if (!is_binary(inst.reference) || !is_binary(inst.read)) {
        throw std::invalid_argument("reference and read must be bit strings");
    }
    if (inst.symbol_bits == 0 || inst.read.size() % inst.symbol_bits != 0 ||
        inst.reference.size() % inst.symbol_bits != 0) {
        throw std::invalid_argument("sequence lengths must be whole symbols");
    }
    if (inst.read.size() > inst.reference.size()) {
        throw std::invalid_argument("read (" + std::to_string(inst.read.size()) +
                                    " bits) is longer than the reference (" +
                                    std::to_string(inst.reference.size()) + " bits)");
    }
}

std::size_t ceil_log2(std::size_t value) {
    return value <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(value - 1));
}

/// Emits multi-controlled operations through Toffoli ladders on clean ancillas.
class GateWriter {
public:
    GateWriter(Kernel& kernel, std::size_t ancilla_begin, std::size_t ancilla_count)
        : kernel_(kernel), ancilla_begin_(ancilla_begin), ancilla_count_(ancilla_count) {}

    void x(std::size_t q) { add(GateKind::kX, {q}); }
    void h(std::size_t q) { add(GateKind::kH, {q}); }

    /// X on `target` when every control is |1>.
    void mcx(const std::vector<std::size_t>& controls, std::size_t target) {
        switch (controls.size()) {
            case 0: add(GateKind::kX, {target}); return;
            case 1: add(GateKind::kCNOT, {controls[0], target}); return;
            case 2: add(GateKind::kToffoli, {controls[0], controls[1], target}); return;
            default: break;
        }
        std::vector<std::size_t> head(controls.begin(), controls.end() - 1);
        const auto ladder = compute_and(head);
        add(GateKind::kToffoli, {ladder.result, controls.back(), target});
        uncompute(ladder);
    }

    /// Phase -1 on the all-ones pattern of `qubits`.
    void mcz(const std::vector<std::size_t>& qubits) {
        switch (qubits.size()) {
            case 0: return;
            case 1: add(GateKind::kZ, {qubits[0]}); return;
            case 2: add(GateKind::kCPhase, {qubits[0], qubits[1]}); return;
            default: break;
        }
        const std::size_t last = qubits.back();
        std::vector<std::size_t> controls(qubits.begin(), qubits.end() - 1);
        h(last);
        mcx(controls, last);
        h(last);
    }

    /// Phase -1 on one basis pattern (bit j of `pattern` for qubits[j]).
    void flip_pattern(const std::vector<std::size_t>& qubits, const std::string& pattern) {
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            if (pattern[j] == '0') x(qubits[j]);
        }
        mcz(qubits);
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            if (pattern[j] == '0') x(qubits[j]);
        }
    }

private:
    struct Ladder {
        std::vector<Gate> gates;
        std::size_t result = 0;
    };

    // AND of `controls` into a fresh ancilla chain; returns the steps taken.
    Ladder compute_and(const std::vector<std::size_t>& controls) {
        Ladder ladder;
        ladder.result = controls[0];
        if (controls.size() == 1) {
            return ladder;
        }
        std::size_t acc = controls[0];
        for (std::size_t i = 1; i < controls.size(); ++i) {
            const std::size_t anc = take_ancilla();
            ladder.gates.push_back(make_gate(GateKind::kToffoli, {acc, controls[i], anc}));
            kernel_.instructions.push_back(ladder.gates.back());
            acc = anc;
        }
        ladder.result = acc;
        return ladder;
    }

    void uncompute(const Ladder& ladder) {
        for (auto it = ladder.gates.rbegin(); it != ladder.gates.rend(); ++it) {
            kernel_.instructions.push_back(*it);
            --used_;
        }
    }

    std::size_t take_ancilla() {
        if (used_ >= ancilla_count_) {
            throw std::logic_error("alignment circuit ran out of ancilla qubits");
        }
        return ancilla_begin_ + used_++;
    }

    void add(GateKind kind, std::initializer_list<std::size_t> qubits) {
        kernel_.instructions.push_back(make_gate(kind, qubits));
    }

    Kernel& kernel_;
    std::size_t ancilla_begin_;
    std::size_t ancilla_count_;
    std::size_t used_ = 0;
};

std::vector<std::size_t> range(std::size_t begin, std::size_t count) {
    std::vector<std::size_t> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = begin + i;
    }
    return out;
}

// Bit j of `value` as '0'/'1', j = 0 first.
std::string index_pattern(std::size_t value, std::size_t width) {
    std::string bits(width, '0');
    for (std::size_t j = 0; j < width; ++j) {
        if ((value >> j) & 1U) bits[j] = '1';
    }
    return bits;
}

std::size_t popcount_bits(const std::string& bits) {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), '1'));
}

std::string xor_bits(const std::string& a, const std::string& b) {
    std::string out(a.size(), '0');
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] == b[i] ? '0' : '1';
    }
    return out;
}

// Every data pattern (bit j for data qubit j) with at most `weight` ones.
std::vector<std::string> patterns_up_to_weight(std::size_t width, std::size_t weight) {
    std::vector<std::string> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << width); ++v) {
        if (static_cast<std::size_t>(std::popcount(v)) <= weight) {
            out.push_back(index_pattern(v, width));
        }
    }
    return out;
}

}  // namespace

AlignmentInstance make_instance(std::string_view reference, std::string_view read,
                                std::size_t iterations) {
    AlignmentInstance inst;
    inst.iterations = iterations;
    if (is_binary(reference) && is_binary(read)) {
        inst.reference = std::string(reference);
        inst.read = std::string(read);
        inst.symbol_bits = 1;
    } else {
        inst.reference = nucleotides_to_bits(reference);
        inst.read = nucleotides_to_bits(read);
        inst.symbol_bits = 2;
    }
    check_instance(inst);
    return inst;
}

std::vector<Slice> encode_reference(const AlignmentInstance& inst) {
    check_instance(inst);
    const std::size_t width = inst.read.size();
    const std::size_t step = inst.symbol_bits;
    std::vector<Slice> slices;
    for (std::size_t offset = 0; offset + width <= inst.reference.size(); offset += step) {
        slices.push_back({offset / step, inst.reference.substr(offset, width), false});
    }
    const std::size_t slots = std::size_t{1} << (ceil_log2(slices.size()) + inst.extra_index_qubits);
    std::string complement = inst.read;
    for (char& c : complement) {
        c = c == '0' ? '1' : '0';
    }
    for (std::size_t pos = slices.size(); pos < slots; ++pos) {
        slices.push_back({pos, complement, true});
    }
    return slices;
}

AlignmentLayout layout_for(const AlignmentInstance& inst) {
    check_instance(inst);
    AlignmentLayout layout;
    layout.positions = (inst.reference.size() - inst.read.size()) / inst.symbol_bits + 1;
    layout.index_qubits = ceil_log2(layout.positions) + inst.extra_index_qubits;
    layout.data_qubits = inst.read.size();
    const std::size_t k = layout.index_qubits;
    const std::size_t r = layout.data_qubits;
    const std::size_t reflected = inst.diffusion == DiffusionScope::kIndexAndData ? k + r : k;
    // mcx with c controls needs c-2 ancillas; mcz over m qubits needs m-3.
    std::size_t needed = 1;
    if (k >= 2) needed = std::max(needed, k - 2);
    if (inst.iterations > 0) {
        if (r >= 3) needed = std::max(needed, r - 3);
        if (reflected >= 3) needed = std::max(needed, reflected - 3);
    }
    layout.ancilla_qubits = needed;
    if (layout.total_qubits() > kMaxQubits) {
        throw CapacityError("alignment needs " + std::to_string(layout.total_qubits()) +
                            " qubits; the engine supports " + std::to_string(kMaxQubits));
    }
    return layout;
}

Program build_alignment_circuit(const AlignmentInstance& inst) {
    const AlignmentLayout layout = layout_for(inst);
    const auto slices = encode_reference(inst);
    const auto index = range(0, layout.index_qubits);
    const auto data = range(layout.data_begin(), layout.data_qubits);

    Program program;
    program.num_qubits = layout.total_qubits();

    {
        Kernel& k = program.add_kernel("superpose");
        for (std::size_t q : index) {
            k.instructions.push_back(make_gate(GateKind::kH, {q}));
        }
    }
    {
        Kernel& k = program.add_kernel("encode");
        GateWriter w(k, layout.ancilla_begin(), layout.ancilla_qubits);
        for (std::size_t slot = 0; slot < slices.size(); ++slot) {
            const std::string& bits = slices[slot].bits;
            if (popcount_bits(bits) == 0) {
                continue;
            }
            const std::string pattern = index_pattern(slot, layout.index_qubits);
            for (std::size_t j = 0; j < index.size(); ++j) {
                if (pattern[j] == '0') w.x(index[j]);
            }
            for (std::size_t j = 0; j < data.size(); ++j) {
                if (bits[j] == '1') w.mcx(index, data[j]);
            }
            for (std::size_t j = 0; j < index.size(); ++j) {
                if (pattern[j] == '0') w.x(index[j]);
            }
        }
    }
    {
        Kernel& k = program.add_kernel("distance");
        for (std::size_t j = 0; j < data.size(); ++j) {
            if (inst.read[j] == '1') {
                k.instructions.push_back(make_gate(GateKind::kX, {data[j]}));
            }
        }
    }
    if (inst.iterations > 0) {
        Kernel& k = program.add_kernel("grover");
        GateWriter w(k, layout.ancilla_begin(), layout.ancilla_qubits);
        std::vector<std::size_t> reflected = index;
        if (inst.diffusion == DiffusionScope::kIndexAndData) {
            reflected.insert(reflected.end(), data.begin(), data.end());
        }
        const auto marked = patterns_up_to_weight(layout.data_qubits, inst.max_mismatches);
        const std::string all_zero(reflected.size(), '0');
        for (std::size_t it = 0; it < inst.iterations; ++it) {
            for (const auto& pattern : marked) {
                w.flip_pattern(data, pattern);
            }
            for (std::size_t q : reflected) w.h(q);
            w.flip_pattern(reflected, all_zero);
            for (std::size_t q : reflected) w.h(q);
            // RZ(2pi) = -I: turns I - 2|s><s| into 2|s><s| - I.
            k.instructions.push_back(
                make_gate(GateKind::kRZ, {layout.ancilla_begin()}, 2.0 * std::numbers::pi));
        }
    }
    return program;
}

std::vector<double> index_marginals(const StateVector& state, const AlignmentLayout& layout) {
    const std::uint64_t index_mask = (std::uint64_t{1} << layout.index_qubits) - 1;
    std::vector<double> marginals(std::size_t{1} << layout.index_qubits, 0.0);
    const auto amps = state.live();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        marginals[i & index_mask] += std::norm(amps[i]);
    }
    return marginals;
}

namespace {

// Per-position probability that the data register holds a marked pattern.
std::vector<double> marked_mass(const StateVector& state, const AlignmentLayout& layout,
                                std::size_t max_mismatches) {
    const std::uint64_t index_mask = (std::uint64_t{1} << layout.index_qubits) - 1;
    const std::uint64_t data_mask = (std::uint64_t{1} << layout.data_qubits) - 1;
    std::vector<double> mass(std::size_t{1} << layout.index_qubits, 0.0);
    const auto amps = state.live();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const std::uint64_t data = (i >> layout.data_begin()) & data_mask;
        if (static_cast<std::size_t>(std::popcount(data)) <= max_mismatches) {
            mass[i & index_mask] += std::norm(amps[i]);
        }
    }
    return mass;
}

StateVector run_prefix(const Program& program, std::size_t kernel_count) {
    StateVector state(program.num_qubits);
    for (std::size_t k = 0; k < kernel_count && k < program.kernels.size(); ++k) {
        apply_all(state, program.kernels[k].instructions);
    }
    return state;
}

}  // namespace

AlignmentResult align(const AlignmentInstance& instance, std::size_t shots, Rng& rng) {
    check_instance(instance);
    AlignmentInstance inst = instance;

    // Lowest mismatch threshold at which some real window is marked, read off
    // the state after the distance step.
    std::vector<bool> is_marked;
    {
        const AlignmentLayout layout = layout_for(inst);
        const Program circuit = build_alignment_circuit(inst);
        const StateVector prefix = run_prefix(circuit, 3);
        for (std::size_t threshold = inst.max_mismatches; threshold <= inst.read.size(); ++threshold) {
            const auto mass = marked_mass(prefix, layout, threshold);
            is_marked.assign(layout.positions, false);
            bool any = false;
            for (std::size_t p = 0; p < layout.positions; ++p) {
                is_marked[p] = mass[p] > kTolerance;
                any = any || is_marked[p];
            }
            if (any) {
                inst.max_mismatches = threshold;
                break;
            }
        }
    }

    AlignmentResult result;
    while (true) {
        result.instance = inst;
        result.layout = layout_for(inst);
        result.circuit = build_alignment_circuit(inst);
        const StateVector state = simulate(result.circuit);
        const auto marginals = index_marginals(state, result.layout);

        double weakest_marked = 1.0;
        double strongest_unmarked = -1.0;
        for (std::size_t p = 0; p < result.layout.positions; ++p) {
            if (is_marked[p]) {
                weakest_marked = std::min(weakest_marked, marginals[p]);
            } else {
                strongest_unmarked = std::max(strongest_unmarked, marginals[p]);
            }
        }
        const bool distinguished = strongest_unmarked < 0.0 || inst.iterations == 0 ||
                                   weakest_marked > strongest_unmarked + kTolerance;
        AlignmentLayout wider = result.layout;
        wider.index_qubits += 1;
        const bool can_widen = wider.total_qubits() + 2 <= kMaxQubits &&
                               inst.extra_index_qubits < 4;
        if (!distinguished && can_widen) {
            ++inst.extra_index_qubits;
            continue;
        }

        const auto slices = encode_reference(inst);
        result.ranking.clear();
        for (std::size_t p = 0; p < result.layout.positions; ++p) {
            result.ranking.push_back(
                {p, marginals[p], popcount_bits(xor_bits(slices[p].bits, inst.read))});
        }
        // Probabilities closer than ~1e-12 count as ties and keep position order.
        auto key = [](const RankedPosition& r) { return std::llround(r.probability * 1e12); };
        std::stable_sort(result.ranking.begin(), result.ranking.end(),
                         [&](const RankedPosition& a, const RankedPosition& b) {
                             return key(a) > key(b);
                         });

        const std::uint64_t index_mask = (std::uint64_t{1} << result.layout.index_qubits) - 1;
        if (shots > 0) {
            const Histogram histogram = sample(state, shots, rng);
            for (const auto& [bits, count] : histogram) {
                const std::size_t position = from_bitstring(bits) & index_mask;
                result.sampled_positions.insert(result.sampled_positions.end(), count, position);
            }
        }
        return result;
    }
}

}  // namespace qacc::genomics
