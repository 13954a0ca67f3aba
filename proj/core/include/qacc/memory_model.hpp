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

namespace qacc {

/// Inputs to the memory cost model.
struct MemoryParams {
    std::size_t num_qubits = 1;
    /// Bytes per real scalar (one half of a complex amplitude): 4, 8 or 16.
    std::size_t scalar_bytes = 8;
};

/// Bytes for one state vector: 2 * s_T * 2^n.
std::uint64_t estimate_vector_memory(const MemoryParams& params);

/// Bytes for the double-buffered engine: s_T * 2^(n+2).
std::uint64_t estimate_total_memory(const MemoryParams& params);

/// Bytes for a dense 2^n x 2^n gate matrix: 2 * s_T * 2^(2n).
std::uint64_t estimate_matrix_memory(const MemoryParams& params);

}  // namespace qacc
