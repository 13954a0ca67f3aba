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

#include "qacc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qacc/state.hpp"

namespace qacc {

GateCounts gate_count(const Program& program) {
    GateCounts counts;
    for (const auto& kernel : program.kernels) {
        for (const auto& gate : kernel.instructions) {
            ++counts.per_kind[std::string(mnemonic(gate.kind))];
            if (gate.kind == GateKind::kMeasure) {
                ++counts.measurements;
            } else if (gate.kind == GateKind::kPrepZ) {
                ++counts.preparations;
            } else {
                ++counts.unitary_total;
            }
        }
    }
    return counts;
}

double fidelity(std::span<const Amplitude> ideal, std::span<const Amplitude> actual) {
    if (ideal.size() != actual.size()) {
        throw std::invalid_argument("fidelity needs states of equal dimension (" +
                                    std::to_string(ideal.size()) + " vs " +
                                    std::to_string(actual.size()) + ")");
    }
    Amplitude overlap{};
    for (std::size_t i = 0; i < ideal.size(); ++i) {
        overlap += std::conj(ideal[i]) * actual[i];
    }
    return std::clamp(std::norm(overlap), 0.0, 1.0);
}

double success_probability(const Histogram& histogram, const std::set<std::string>& correct) {
    std::uint64_t total = 0;
    std::uint64_t hits = 0;
    for (const auto& [bits, count] : histogram) {
        total += count;
        if (correct.contains(bits)) {
            hits += count;
        }
    }
    if (total == 0) {
        throw std::invalid_argument("success probability of an empty histogram");
    }
    return static_cast<double>(hits) / static_cast<double>(total);
}

std::uint64_t quantum_volume(std::size_t depth) {
    if (depth > 62) {
        throw std::overflow_error("quantum volume 2^" + std::to_string(depth) +
                                  " exceeds the 64-bit range");
    }
    return std::uint64_t{1} << depth;
}

double amdahl(double parallel_fraction, double speedup) {
    if (!(parallel_fraction >= 0.0 && parallel_fraction <= 1.0)) {
        throw std::invalid_argument("parallel fraction must lie in [0, 1]");
    }
    if (!(speedup > 0.0)) {
        throw std::invalid_argument("speedup factor must be positive");
    }
    return 1.0 / ((1.0 - parallel_fraction) + parallel_fraction / speedup);
}

double amdahl(std::span<const std::pair<double, double>> components) {
    if (components.empty()) {
        throw std::invalid_argument("amdahl needs at least one component");
    }
    double fraction_sum = 0.0;
    double time = 0.0;
    for (auto [fraction, speedup] : components) {
        if (!(fraction >= 0.0 && fraction <= 1.0)) {
            throw std::invalid_argument("component fraction must lie in [0, 1]");
        }
        if (!(speedup > 0.0)) {
            throw std::invalid_argument("component speedup must be positive");
        }
        fraction_sum += fraction;
        time += fraction / speedup;
    }
    if (std::abs(fraction_sum - 1.0) > kTolerance) {
        throw std::invalid_argument("component fractions must sum to 1");
    }
    return 1.0 / time;
}

double gustafson(double processors, double serial_fraction) {
    if (!(processors >= 1.0)) {
        throw std::invalid_argument("processor count must be >= 1");
    }
    if (!(serial_fraction >= 0.0 && serial_fraction <= 1.0)) {
        throw std::invalid_argument("serial fraction must lie in [0, 1]");
    }
    return processors - serial_fraction * (processors - 1.0);
}

double round_to(double value, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(value * scale) / scale;
}

}  // namespace qacc
