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
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qacc/gates.hpp"
#include "qacc/program.hpp"
#include "qacc/state.hpp"

namespace qacc {

struct GateCounts {
    /// Keyed by mnemonic ("h", "cnot", "measure", ...); zero counts omitted.
    std::map<std::string, std::size_t> per_kind;
    /// Unitary gates only.
    std::size_t unitary_total = 0;
    std::size_t measurements = 0;
    std::size_t preparations = 0;

    std::size_t total() const noexcept { return unitary_total + measurements + preparations; }

    bool operator==(const GateCounts&) const = default;
};

GateCounts gate_count(const Program& program);

/// |<ideal|actual>|^2. Throws std::invalid_argument on dimension mismatch.
double fidelity(std::span<const Amplitude> ideal, std::span<const Amplitude> actual);

/// Fraction of shots whose bitstring is in `correct`.
/// Throws std::invalid_argument for an empty histogram.
double success_probability(const Histogram& histogram, const std::set<std::string>& correct);

/// 2^depth. Throws std::overflow_error for depth > 62.
std::uint64_t quantum_volume(std::size_t depth);

/// 1 / ((1 - p) + p / s). Throws std::invalid_argument for p outside [0, 1]
/// or s <= 0.
double amdahl(double parallel_fraction, double speedup);

/// 1 / sum(p_i / s_i) over components whose fractions sum to 1.
double amdahl(std::span<const std::pair<double, double>> components);

/// Scaled speedup P - serial * (P - 1); always within [1, P].
double gustafson(double processors, double serial_fraction);

/// The evaluation quantities persisted with every run.
struct MetricSet {
    GateCounts gates;
    std::size_t depth = 0;
    std::optional<double> fidelity;
    std::optional<double> success_probability;
    /// Absent when 2^depth does not fit in 64 bits.
    std::optional<std::uint64_t> quantum_volume;

    bool operator==(const MetricSet&) const = default;
};

/// Rounds for display (the persisted value keeps full precision).
double round_to(double value, int decimals);

}  // namespace qacc
