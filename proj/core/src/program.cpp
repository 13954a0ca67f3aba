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

#include "qacc/program.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace qacc {

std::vector<Gate> Program::instructions() const {
    std::vector<Gate> all;
    all.reserve(instruction_count());
    for (const auto& kernel : kernels) {
        all.insert(all.end(), kernel.instructions.begin(), kernel.instructions.end());
    }
    return all;
}

std::size_t Program::instruction_count() const {
    std::size_t count = 0;
    for (const auto& kernel : kernels) {
        count += kernel.instructions.size();
    }
    return count;
}

void Program::append(Gate gate) {
    if (kernels.empty()) {
        kernels.push_back(Kernel{});
    }
    kernels.back().instructions.push_back(std::move(gate));
}

Kernel& Program::add_kernel(std::string name) {
    kernels.push_back(Kernel{std::move(name), {}});
    return kernels.back();
}

bool is_valid_kernel_name(std::string_view name) {
    if (name.empty()) {
        return false;
    }
    auto head = static_cast<unsigned char>(name.front());
    if (!(std::isalpha(head) || head == '_')) {
        return false;
    }
    for (char c : name) {
        auto u = static_cast<unsigned char>(c);
        if (!(std::isalnum(u) || u == '_')) {
            return false;
        }
    }
    return true;
}

void validate(const Program& program) {
    if (program.num_qubits == 0) {
        throw std::invalid_argument("program must declare at least one qubit");
    }
    std::set<std::string> names;
    for (std::size_t k = 0; k < program.kernels.size(); ++k) {
        const auto& kernel = program.kernels[k];
        if (kernel.name.empty()) {
            if (k != 0) {
                throw std::invalid_argument("only the first kernel may be anonymous");
            }
        } else {
            if (!is_valid_kernel_name(kernel.name)) {
                throw std::invalid_argument("invalid kernel name '" + kernel.name + "'");
            }
            if (!names.insert(kernel.name).second) {
                throw std::invalid_argument("duplicate kernel name '" + kernel.name + "'");
            }
        }
        for (const auto& gate : kernel.instructions) {
            validate_gate(gate, program.num_qubits);
        }
    }
}

Program make_program(std::size_t num_qubits, std::vector<Gate> gates) {
    Program program;
    program.num_qubits = num_qubits;
    if (!gates.empty()) {
        program.kernels.push_back(Kernel{"", std::move(gates)});
    }
    return program;
}

}  // namespace qacc
