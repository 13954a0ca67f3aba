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

#include "qacc/execute.hpp"

#include <stdexcept>

namespace qacc {

ExecutionResult execute(const Program& program, Rng& rng, const ExecutionOptions& options) {
    validate(program);
    ExecutionResult result{StateVector(program.num_qubits), {}, {}};
    std::size_t index = 0;
    for (const auto& kernel : program.kernels) {
        for (const auto& gate : kernel.instructions) {
            switch (gate.kind) {
                case GateKind::kMeasure: {
                    const int bit = measure(result.state, gate.qubits[0], rng);
                    result.measurements.push_back({index, gate.qubits[0], bit});
                    break;
                }
                case GateKind::kPrepZ:
                    prep_z(result.state, gate.qubits[0], rng, options.apply);
                    break;
                default:
                    if (options.noise) {
                        auto events = apply_depolarizing(result.state, gate, *options.noise, rng,
                                                         options.apply);
                        result.noise_events.insert(result.noise_events.end(), events.begin(),
                                                   events.end());
                    } else {
                        apply_gate(result.state, gate, options.apply);
                    }
                    break;
            }
            ++index;
        }
    }
    return result;
}

void apply_all(StateVector& state, const std::vector<Gate>& gates, const ApplyOptions& options) {
    for (const auto& gate : gates) {
        apply_gate(state, gate, options);
    }
}

StateVector simulate(const Program& program, const ApplyOptions& options) {
    validate(program);
    StateVector state(program.num_qubits);
    for (const auto& kernel : program.kernels) {
        for (const auto& gate : kernel.instructions) {
            if (!is_unitary(gate.kind)) {
                throw std::invalid_argument("simulate() needs a measurement-free program; found " +
                                            to_string(gate));
            }
            apply_gate(state, gate, options);
        }
    }
    return state;
}

bool has_only_terminal_measurements(const Program& program) {
    bool measuring = false;
    for (const auto& gate : program.instructions()) {
        if (gate.kind == GateKind::kPrepZ) {
            return false;
        }
        if (gate.kind == GateKind::kMeasure) {
            measuring = true;
        } else if (measuring) {
            return false;
        }
    }
    return true;
}

}  // namespace qacc
