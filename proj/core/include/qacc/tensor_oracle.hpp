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
#include <initializer_list>
#include <vector>

#include "qacc/gate.hpp"
#include "qacc/program.hpp"
#include "qacc/state.hpp"

// Dense reference simulator. Everything here is deliberately naive: gates
// become full 2^n x 2^n matrices built from Kronecker products and states
// evolve by plain matrix-vector multiplication. It exists to check the
// mapping-function engine and is limited to small registers.
namespace qacc::oracle {

/// Largest register the dense oracle accepts.
inline constexpr std::size_t kMaxOracleQubits = 12;

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    /// Row-major initializer; throws std::invalid_argument on size mismatch.
    DenseMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Amplitude> entries);

    static DenseMatrix identity(std::size_t dim);
    /// Single column holding `entries`.
    static DenseMatrix column(std::vector<Amplitude> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Amplitude& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Amplitude& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Amplitude>& entries() const noexcept { return entries_; }

    DenseMatrix adjoint() const;

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Amplitude> entries_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
std::vector<Amplitude> operator*(const DenseMatrix& m, const std::vector<Amplitude>& v);

/// Largest absolute entry-wise difference; infinity on shape mismatch.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_diff(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b);

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
/// Throws CapacityError when either result dimension exceeds 2^12.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// The 2x2, 4x4 or 8x8 matrix of a unitary gate kind. The first operand is
/// the most significant local index bit (textbook |control, target> order).
DenseMatrix base_matrix(const Gate& gate);

/// Full 2^n x 2^n operator for `gate` acting on an n-qubit register
/// (qubit 0 least significant). Single-qubit gates are built as a Kronecker
/// chain of identities; multi-qubit gates by permuting basis indices.
DenseMatrix gate_matrix(const Gate& gate, std::size_t num_qubits);

/// Embeds a single-qubit gate through explicit basis-index permutation; used
/// to cross-check the Kronecker chain.
DenseMatrix embed_by_permutation(const Gate& gate, std::size_t num_qubits);

/// Matrix-vector simulation of a measurement-free program from |0...0>.
std::vector<Amplitude> dense_simulate(const Program& program);

/// Predicted amplitudes of H^{(x)n}|a>: (1/sqrt(2^n)) (-1)^{a.b} for every b.
std::vector<Amplitude> hadamard_tensor_check(std::size_t num_qubits, std::uint64_t a);

}  // namespace qacc::oracle
