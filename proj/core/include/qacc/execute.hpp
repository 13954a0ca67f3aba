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
#include <optional>
#include <utility>
#include <vector>

#include "qacc/gates.hpp"
#include "qacc/program.hpp"
#include "qacc/state.hpp"

namespace qacc {

struct ExecutionOptions {
    ApplyOptions apply;
    std::optional<NoiseConfig> noise;
};

struct MeasurementRecord {
    std::size_t instruction = 0;
    std::size_t qubit = 0;
    int bit = 0;

    bool operator==(const MeasurementRecord&) const = default;
};

struct ExecutionResult {
    StateVector state;
    std::vector<MeasurementRecord> measurements;
    std::vector<NoiseEvent> noise_events;
};

/// Runs every instruction in order from the ground state. MEASURE collapses,
/// PREP_Z resets; noise (if configured) follows each unitary gate.
ExecutionResult execute(const Program& program, Rng& rng, const ExecutionOptions& options = {});

/// Noiseless run of a measurement-free program.
/// Throws std::invalid_argument if the program measures or resets.
StateVector simulate(const Program& program, const ApplyOptions& options = {});

/// Applies each unitary gate in `gates` to `state`, in order.
void apply_all(StateVector& state, const std::vector<Gate>& gates, const ApplyOptions& options = {});

/// True when no MEASURE/PREP_Z appears, or all MEASUREs are trailing (nothing
/// but further measurements follows the first one) and there is no PREP_Z.
bool has_only_terminal_measurements(const Program& program);

}  // namespace qacc
