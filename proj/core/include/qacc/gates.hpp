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
#include <random>
#include <string>
#include <vector>

#include "qacc/gate.hpp"
#include "qacc/state.hpp"

namespace qacc {

/// Seeded generator used for measurement, sampling and noise.
using Rng = std::mt19937_64;

/// Measurement outcomes keyed by bitstring (qubit n-1 leftmost).
using Histogram = std::map<std::string, std::uint64_t>;

struct ApplyOptions {
    /// Skip basis states whose input amplitude is exactly zero.
    bool zero_skip = true;
};

/// Applies a unitary gate as a basis-state mapping from the live buffer into
/// the scratch buffer, then zeroes the old input and toggles parity.
/// Throws std::invalid_argument for MEASURE/PREP_Z or malformed gates and
/// std::out_of_range for operands outside the register.
void apply_gate(StateVector& state, const Gate& gate, const ApplyOptions& options = {});

/// Projective Z-basis measurement of one qubit with collapse. Returns 0 or 1.
int measure(StateVector& state, std::size_t qubit, Rng& rng);

/// Resets `qubit` to |0>: measure, then flip when the outcome was 1.
void prep_z(StateVector& state, std::size_t qubit, Rng& rng, const ApplyOptions& options = {});

/// Draws `shots` full-register samples from the state's distribution.
Histogram sample(const StateVector& state, std::size_t shots, Rng& rng);

/// Bitstring for a basis index, qubit n-1 first: to_bitstring(1, 2) == "01".
std::string to_bitstring(std::uint64_t index, std::size_t num_qubits);

/// Inverse of to_bitstring. Throws std::invalid_argument on bad input.
std::uint64_t from_bitstring(const std::string& bits);

/// Symmetric depolarizing noise, applied per operand after the ideal gate.
struct NoiseConfig {
    double probability = 0.0;
    std::uint64_t seed = 0;
};

/// One Pauli error injected by the noise model.
struct NoiseEvent {
    std::size_t qubit = 0;
    GateKind pauli = GateKind::kX;
};

/// Applies `gate`, then for each operand independently injects X, Y or Z
/// (uniformly) with probability `config.probability`. Returns the injected
/// errors in operand order.
std::vector<NoiseEvent> apply_depolarizing(StateVector& state, const Gate& gate,
                                           const NoiseConfig& config, Rng& rng,
                                           const ApplyOptions& options = {});

}  // namespace qacc
