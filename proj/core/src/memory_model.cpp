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

#include "qacc/memory_model.hpp"

#include <stdexcept>
#include <string>

namespace qacc {

namespace {

void validate(const MemoryParams& p) {
    if (p.num_qubits < 1) {
        throw std::invalid_argument("memory model needs at least one qubit");
    }
    if (p.scalar_bytes != 4 && p.scalar_bytes != 8 && p.scalar_bytes != 16) {
        throw std::invalid_argument("scalar size must be 4, 8 or 16 bytes, got " +
                                    std::to_string(p.scalar_bytes));
    }
}

// scalar_bytes * 2^exponent, or overflow_error when it does not fit 64 bits.
std::uint64_t scaled_power_of_two(std::size_t scalar_bytes, std::size_t exponent) {
    // scalar_bytes is 4, 8 or 16, i.e. 2^2..2^4.
    const std::size_t scalar_log2 = scalar_bytes == 4 ? 2 : scalar_bytes == 8 ? 3 : 4;
    if (exponent + scalar_log2 > 63) {
        throw std::overflow_error("byte count 2^" + std::to_string(exponent + scalar_log2) +
                                  " does not fit in 64 bits");
    }
    return std::uint64_t{1} << (exponent + scalar_log2);
}

}  // namespace

std::uint64_t estimate_vector_memory(const MemoryParams& params) {
    validate(params);
    return scaled_power_of_two(params.scalar_bytes, params.num_qubits + 1);
}

std::uint64_t estimate_total_memory(const MemoryParams& params) {
    validate(params);
    return scaled_power_of_two(params.scalar_bytes, params.num_qubits + 2);
}

std::uint64_t estimate_matrix_memory(const MemoryParams& params) {
    validate(params);
    return scaled_power_of_two(params.scalar_bytes, 2 * params.num_qubits + 1);
}

}  // namespace qacc
