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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qacc/gates.hpp"
#include "qacc/mapper.hpp"
#include "qacc/metrics.hpp"
#include "qacc/program.hpp"

namespace qacc {

struct RunConfig {
    std::size_t shots = 1000;
    std::uint64_t seed = 0;
    double noise_p = 0.0;
    /// e.g. "line:4"; empty means no mapping.
    std::string topology;
    PlacementStrategy placement = PlacementStrategy::kIdentity;
    std::size_t top_k = 16;
    bool zero_skip = true;
    /// Correct-answer bitstrings; empty means the ideal state's support.
    std::set<std::string> success_set;

    bool operator==(const RunConfig&) const = default;
};

struct FinalState {
    std::string bitstring;
    Amplitude amplitude;
    double probability = 0.0;

    bool operator==(const FinalState&) const = default;
};

/// One execution: identity, configuration, metrics and resulting final states.
struct RunRecord {
    std::string run_id;
    /// ISO-8601 UTC with milliseconds, e.g. "2026-10-19T08:15:30.123Z".
    std::string timestamp;
    /// SHA-256 (hex) of the canonical cQASM of the input program.
    std::string circuit_hash;
    std::size_t num_qubits = 0;
    RunConfig config;
    MetricSet metrics;
    /// "dense_oracle" or "engine" (noiseless run, for registers too big for
    /// the oracle); empty when no ideal state exists.
    std::string fidelity_reference;
    std::set<std::string> success_set;
    std::optional<MappingReport> mapping;
    Histogram counts;
    /// Top-k by probability (descending, ties by basis index), in virtual
    /// qubit order.
    std::vector<FinalState> final_states;
    std::uint64_t wall_time_ns = 0;
    std::uint64_t peak_state_bytes = 0;

    bool operator==(const RunRecord&) const = default;
};

/// parse-free core of the `run` command: optional mapping, simulation,
/// sampling and metrics. Throws MappingError / CapacityError.
RunRecord run_program(const Program& program, const RunConfig& config);

/// Parses `path` (ParseError on failure) and calls run_program.
RunRecord run_file(const std::string& path, const RunConfig& config);

/// One JSON object on a single line (no trailing newline).
std::string serialize(const RunRecord& record);

/// Inverse of serialize. Throws std::invalid_argument on malformed input.
RunRecord deserialize(std::string_view line);

/// Hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

/// Random RFC 4122 version-4 UUID string.
std::string make_uuid();

/// Current UTC time in the RunRecord timestamp format.
std::string utc_timestamp();

}  // namespace qacc
