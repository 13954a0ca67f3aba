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

#include "qacc/state.hpp"

#include <bit>
#include <cmath>
#include <new>
#include <stdexcept>
#include <string>

#include "qacc/errors.hpp"
#include "qacc/memory_model.hpp"

namespace qacc {

namespace {

std::string capacity_message(std::size_t n) {
    std::string msg = "cannot allocate a " + std::to_string(n) + "-qubit state";
    if (n >= 1 && n <= 58) {
        msg += " (requires " + std::to_string(estimate_total_memory({n, 8})) + " bytes)";
    } else {
        msg += " (requires 2^" + std::to_string(n + 2) + " * 8 bytes)";
    }
    msg += "; supported range is 1.." + std::to_string(kMaxQubits) + " qubits";
    return msg;
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw CapacityError(capacity_message(num_qubits));
    }
    try {
        buffers_[0].assign(dimension(), Amplitude{});
        buffers_[1].assign(dimension(), Amplitude{});
    } catch (const std::bad_alloc&) {
        throw CapacityError(capacity_message(num_qubits));
    }
    buffers_[0][0] = Amplitude{1.0, 0.0};
}

StateVector StateVector::from_amplitudes(std::span<const Amplitude> amplitudes) {
    if (amplitudes.size() < 2 || !std::has_single_bit(amplitudes.size())) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    StateVector state(static_cast<std::size_t>(std::countr_zero(amplitudes.size())));
    std::copy(amplitudes.begin(), amplitudes.end(), state.buffers_[0].begin());
    return state;
}

Amplitude StateVector::amplitude(std::uint64_t index) const {
    if (index >= dimension()) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range for " +
                                std::to_string(num_qubits_) + " qubits");
    }
    return live()[index];
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> probs;
    probs.reserve(dimension());
    for (const auto& a : live()) {
        probs.push_back(std::norm(a));
    }
    return probs;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto& a : live()) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::renormalize() {
    const double norm = std::sqrt(norm_squared());
    if (norm == 0.0) {
        throw std::logic_error("cannot renormalize an all-zero state");
    }
    for (auto& a : buffers_[parity_]) {
        a /= norm;
    }
}

}  // namespace qacc
