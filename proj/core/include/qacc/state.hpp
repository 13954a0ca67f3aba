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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qacc {

using Amplitude = std::complex<double>;

/// Largest register the engine allocates.
inline constexpr std::size_t kMaxQubits = 30;

/// Absolute tolerance for normalization and equivalence checks.
inline constexpr double kTolerance = 1e-9;

/**
 * State vector over `n` qubits held in two alternating amplitude buffers.
 *
 * The live buffer is the input of the next gate; the other buffer receives
 * that gate's output and is all zeros whenever control is outside a gate.
 * Basis index bit k holds qubit k (qubit 0 is the least significant bit).
 */
class StateVector {
public:
    /// Ground state |0...0>. Throws CapacityError for n outside [1, kMaxQubits].
    explicit StateVector(std::size_t num_qubits);

    /// Builds a state from explicit amplitudes (size must be a power of two >= 2).
    static StateVector from_amplitudes(std::span<const Amplitude> amplitudes);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return std::size_t{1} << num_qubits_; }

    /// 0 when the even buffer is live, 1 when the odd one is.
    int parity() const noexcept { return parity_; }

    /// Throws std::out_of_range for index >= dimension().
    Amplitude amplitude(std::uint64_t index) const;

    std::span<const Amplitude> amplitudes() const noexcept { return live(); }

    /// Per-basis-state probabilities |a_i|^2.
    std::vector<double> probabilities() const;

    /// Sum of probabilities; 1 for a valid state.
    double norm_squared() const;

    std::span<const Amplitude> live() const noexcept { return buffers_[parity_]; }
    std::span<const Amplitude> scratch() const noexcept { return buffers_[parity_ ^ 1]; }

    /// Mutable access for gate kernels. Callers must leave scratch zeroed
    /// (or call `swap_buffers` after filling it and zeroing the old live one).
    std::span<Amplitude> live_mut() noexcept { return buffers_[parity_]; }
    std::span<Amplitude> scratch_mut() noexcept { return buffers_[parity_ ^ 1]; }

    /// Toggles which buffer is live.
    void swap_buffers() noexcept { parity_ ^= 1; }

    /// Scales the live buffer so that it has unit norm.
    void renormalize();

private:
    std::size_t num_qubits_;
    std::vector<Amplitude> buffers_[2];
    int parity_ = 0;
};

}  // namespace qacc
