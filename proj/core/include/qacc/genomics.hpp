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
#include <string>
#include <string_view>
#include <vector>

#include "qacc/gates.hpp"
#include "qacc/program.hpp"

namespace qacc::genomics {

/// Which qubits the inversion-about-the-mean step reflects.
enum class DiffusionScope { kIndexAndData, kIndexOnly };

struct AlignmentInstance {
    /// Binary strings; nucleotide input is converted by `make_instance`.
    std::string reference;
    std::string read;
    /// Bits per symbol: 1 for binary input, 2 for nucleotides.
    std::size_t symbol_bits = 1;
    std::size_t iterations = 1;
    DiffusionScope diffusion = DiffusionScope::kIndexAndData;
    /// The oracle marks data patterns with at most this many set bits.
    std::size_t max_mismatches = 0;
    /// Index qubits added on top of the minimum (more sentinel slots).
    std::size_t extra_index_qubits = 0;
};

/// Builds an instance from "01" strings or "ACGT" strings (C=00, A=01,
/// G=10, T=11). Throws std::invalid_argument for mixed or unknown alphabets.
AlignmentInstance make_instance(std::string_view reference, std::string_view read,
                                std::size_t iterations = 1);

struct Slice {
    std::size_t position = 0;  // in symbols
    std::string bits;
    bool sentinel = false;
};

/// Reference windows of the read's length at every symbol offset, padded with
/// sentinel slices (the complement of the read) up to a power of two.
std::vector<Slice> encode_reference(const AlignmentInstance& instance);

struct AlignmentLayout {
    std::size_t positions = 0;      // real (non-sentinel) slices
    std::size_t index_qubits = 0;   // qubits [0, index_qubits)
    std::size_t data_qubits = 0;    // qubits [index_qubits, index_qubits + data_qubits)
    std::size_t ancilla_qubits = 0; // the rest

    std::size_t total_qubits() const noexcept { return index_qubits + data_qubits + ancilla_qubits; }
    std::size_t data_begin() const noexcept { return index_qubits; }
    std::size_t ancilla_begin() const noexcept { return index_qubits + data_qubits; }
};

/// Throws std::invalid_argument for an invalid instance and CapacityError
/// when the register would exceed the engine limit.
AlignmentLayout layout_for(const AlignmentInstance& instance);

/// The alignment circuit, one kernel per step: "superpose", "encode",
/// "distance" and (when iterations > 0) "grover".
Program build_alignment_circuit(const AlignmentInstance& instance);

struct RankedPosition {
    std::size_t position = 0;
    double probability = 0.0;
    /// Classical bit mismatch count between the read and this window.
    std::size_t mismatches = 0;
};

struct AlignmentResult {
    /// Real positions by descending index-register probability, ties by position.
    std::vector<RankedPosition> ranking;
    /// Instance actually run (mismatch threshold and padding chosen by align).
    AlignmentInstance instance;
    AlignmentLayout layout;
    Program circuit;
    /// Sampled index-register outcomes (positions, including sentinels).
    std::vector<std::size_t> sampled_positions;
};

/// Runs the alignment circuit. The oracle threshold starts at zero mismatches
/// and rises until some window is marked; sentinel slots are added while the
/// marked windows fail to stand out. Then `shots` index samples are drawn.
AlignmentResult align(const AlignmentInstance& instance, std::size_t shots, Rng& rng);

/// Probability of each index value (summing out data and ancilla qubits).
std::vector<double> index_marginals(const StateVector& state, const AlignmentLayout& layout);

}  // namespace qacc::genomics
