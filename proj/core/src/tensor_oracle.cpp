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

#include "qacc/tensor_oracle.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qacc/errors.hpp"

namespace qacc::oracle {

namespace {

constexpr std::size_t kMaxDim = std::size_t{1} << kMaxOracleQubits;

void check_register(std::size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxOracleQubits) {
        throw CapacityError("dense oracle supports 1.." + std::to_string(kMaxOracleQubits) +
                            " qubits, got " + std::to_string(num_qubits));
    }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Amplitude> entries)
    : rows_(rows), cols_(cols), entries_(entries) {
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument("matrix initializer has " + std::to_string(entries_.size()) +
                                    " entries, expected " + std::to_string(rows * cols));
    }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::column(std::vector<Amplitude> entries) {
    DenseMatrix m;
    m.rows_ = entries.size();
    m.cols_ = 1;
    m.entries_ = std::move(entries);
    return m;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product shape mismatch");
    }
    DenseMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Amplitude x = a(r, k);
            if (x == Amplitude{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

std::vector<Amplitude> operator*(const DenseMatrix& m, const std::vector<Amplitude>& v) {
    if (m.cols() != v.size()) {
        throw std::invalid_argument("matrix-vector shape mismatch");
    }
    std::vector<Amplitude> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Amplitude acc{};
        for (std::size_t c = 0; c < m.cols(); ++c) {
            acc += m(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    return max_abs_diff(a.entries(), b.entries());
}

double max_abs_diff(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("kron of an empty matrix");
    }
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > kMaxDim || cols > kMaxDim) {
        throw CapacityError("Kronecker product of " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " exceeds the dense oracle limit");
    }
    DenseMatrix out(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Amplitude aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

DenseMatrix base_matrix(const Gate& gate) {
    constexpr Amplitude i{0.0, 1.0};
    const double h = 1.0 / std::numbers::sqrt2;
    const double theta = gate.angle.value_or(0.0);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    switch (gate.kind) {
        case GateKind::kX:
            return DenseMatrix(2, 2, {0.0, 1.0, 1.0, 0.0});
        case GateKind::kY:
            return DenseMatrix(2, 2, {0.0, -i, i, 0.0});
        case GateKind::kZ:
            return DenseMatrix(2, 2, {1.0, 0.0, 0.0, -1.0});
        case GateKind::kH:
            return DenseMatrix(2, 2, {h, h, h, -h});
        case GateKind::kRX:
            return DenseMatrix(2, 2, {c, -i * s, -i * s, c});
        case GateKind::kRY:
            return DenseMatrix(2, 2, {c, -s, s, c});
        case GateKind::kRZ:
            return DenseMatrix(2, 2, {std::exp(-i * (theta / 2.0)), 0.0, 0.0, std::exp(i * (theta / 2.0))});
        case GateKind::kCNOT:
            return DenseMatrix(4, 4, {1, 0, 0, 0,  //
                                      0, 1, 0, 0,  //
                                      0, 0, 0, 1,  //
                                      0, 0, 1, 0});
        case GateKind::kCPhase:
            return DenseMatrix(4, 4, {1, 0, 0, 0,  //
                                      0, 1, 0, 0,  //
                                      0, 0, 1, 0,  //
                                      0, 0, 0, -1});
        case GateKind::kSwap:
            return DenseMatrix(4, 4, {1, 0, 0, 0,  //
                                      0, 0, 1, 0,  //
                                      0, 1, 0, 0,  //
                                      0, 0, 0, 1});
        case GateKind::kToffoli: {
            DenseMatrix m = DenseMatrix::identity(8);
            m(6, 6) = 0.0;
            m(7, 7) = 0.0;
            m(6, 7) = 1.0;
            m(7, 6) = 1.0;
            return m;
        }
        case GateKind::kPrepZ:
        case GateKind::kMeasure:
            break;
    }
    throw std::invalid_argument(std::string(mnemonic(gate.kind)) + " has no unitary matrix");
}

DenseMatrix embed_by_permutation(const Gate& gate, std::size_t num_qubits) {
    check_register(num_qubits);
    validate_gate(gate, num_qubits);
    const DenseMatrix local = base_matrix(gate);
    const std::size_t k = gate.qubits.size();
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::uint64_t operand_mask = 0;
    for (std::size_t q : gate.qubits) {
        operand_mask |= std::uint64_t{1} << q;
    }
    // Local index bit (k-1-j) is operand j.
    auto local_index = [&](std::uint64_t global) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < k; ++j) {
            idx |= ((global >> gate.qubits[j]) & 1U) << (k - 1 - j);
        }
        return idx;
    };
    auto with_local = [&](std::uint64_t global, std::size_t local_idx) {
        std::uint64_t out = global & ~operand_mask;
        for (std::size_t j = 0; j < k; ++j) {
            out |= static_cast<std::uint64_t>((local_idx >> (k - 1 - j)) & 1U) << gate.qubits[j];
        }
        return out;
    };
    DenseMatrix full(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        const std::size_t lc = local_index(col);
        for (std::size_t lr = 0; lr < local.rows(); ++lr) {
            full(with_local(col, lr), col) = local(lr, lc);
        }
    }
    return full;
}

DenseMatrix gate_matrix(const Gate& gate, std::size_t num_qubits) {
    check_register(num_qubits);
    validate_gate(gate, num_qubits);
    if (gate.qubits.size() > 1) {
        return embed_by_permutation(gate, num_qubits);
    }
    // Leftmost factor acts on the most significant qubit.
    const DenseMatrix local = base_matrix(gate);
    const DenseMatrix id2 = DenseMatrix::identity(2);
    DenseMatrix full = gate.qubits[0] == num_qubits - 1 ? local : id2;
    for (std::size_t q = num_qubits - 1; q-- > 0;) {
        full = kron(full, q == gate.qubits[0] ? local : id2);
    }
    return full;
}

std::vector<Amplitude> dense_simulate(const Program& program) {
    check_register(program.num_qubits);
    validate(program);
    std::vector<Amplitude> state(std::size_t{1} << program.num_qubits);
    state[0] = 1.0;
    for (const auto& gate : program.instructions()) {
        if (!is_unitary(gate.kind)) {
            throw std::invalid_argument("dense oracle cannot simulate " + to_string(gate));
        }
        state = gate_matrix(gate, program.num_qubits) * state;
    }
    return state;
}

std::vector<Amplitude> hadamard_tensor_check(std::size_t num_qubits, std::uint64_t a) {
    check_register(num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (a >= dim) {
        throw std::out_of_range("basis index a out of range");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Amplitude> out(dim);
    for (std::uint64_t b = 0; b < dim; ++b) {
        out[b] = (std::popcount(a & b) % 2 == 0) ? scale : -scale;
    }
    return out;
}

}  // namespace qacc::oracle
