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

#include "qacc/run.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qacc/cqasm.hpp"
#include "qacc/errors.hpp"
#include "qacc/execute.hpp"
#include "qacc/memory_model.hpp"
#include "qacc/tensor_oracle.hpp"

namespace qacc {

namespace {

using json = nlohmann::json;

// Program without its trailing measurements, when every measurement is trailing.
std::optional<Program> strip_terminal_measurements(const Program& program) {
    if (!has_only_terminal_measurements(program)) {
        return std::nullopt;
    }
    Program body = program;
    for (auto& kernel : body.kernels) {
        std::erase_if(kernel.instructions,
                      [](const Gate& g) { return g.kind == GateKind::kMeasure; });
    }
    return body;
}

// Reorders a mapped (physical) state into virtual-qubit order. Physical nodes
// that hold no virtual qubit are |0> throughout routing.
StateVector to_virtual_order(const StateVector& physical, const LayoutMap& layout) {
    const std::size_t n = layout.num_virtual();
    std::vector<Amplitude> amps(std::size_t{1} << n);
    const auto src = physical.live();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        std::uint64_t j = 0;
        for (std::size_t v = 0; v < n; ++v) {
            j |= ((i >> v) & 1U) << layout.physical(v);
        }
        amps[i] = src[j];
    }
    return StateVector::from_amplitudes(amps);
}

std::vector<FinalState> top_states(const StateVector& state, std::size_t k) {
    std::vector<std::uint64_t> order;
    const auto amps = state.live();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (std::norm(amps[i]) > 0.0) {
            order.push_back(i);
        }
    }
    const std::size_t keep = std::min(k, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                      [&](std::uint64_t a, std::uint64_t b) {
                          const double pa = std::norm(amps[a]);
                          const double pb = std::norm(amps[b]);
                          return pa != pb ? pa > pb : a < b;
                      });
    std::vector<FinalState> out;
    for (std::size_t i = 0; i < keep; ++i) {
        const auto idx = order[i];
        out.push_back({to_bitstring(idx, state.num_qubits()), amps[idx], std::norm(amps[idx])});
    }
    return out;
}

}  // namespace

RunRecord run_program(const Program& program, const RunConfig& config) {
    validate(program);
    if (config.shots == 0) {
        throw std::invalid_argument("shots must be >= 1");
    }
    if (program.num_qubits > kMaxQubits) {
        throw CapacityError("program declares " + std::to_string(program.num_qubits) +
                            " qubits; the engine supports " + std::to_string(kMaxQubits));
    }
    RunRecord record;
    record.run_id = make_uuid();
    record.timestamp = utc_timestamp();
    record.circuit_hash = sha256_hex(emit(program));
    record.num_qubits = program.num_qubits;
    record.config = config;

    // Optional mapping onto a device topology.
    Program executed = program;
    std::optional<LayoutMap> final_layout;
    if (!config.topology.empty()) {
        Topology topology = [&] {
            try {
                return parse_topology(config.topology);
            } catch (const std::invalid_argument& e) {
                throw MappingError(e.what());
            }
        }();
        const LayoutMap layout = initial_placement(program, topology, config.placement);
        RoutedProgram routed = route(program, topology, layout);
        record.mapping = routed.report;
        final_layout = routed.final_layout;
        executed = std::move(routed.program);
    }
    if (executed.num_qubits > kMaxQubits) {
        throw CapacityError("mapped register of " + std::to_string(executed.num_qubits) +
                            " qubits exceeds the engine limit");
    }

    const ApplyOptions apply{config.zero_skip};
    const auto body = strip_terminal_measurements(executed);
    const bool noisy = config.noise_p > 0.0;
    Rng rng(config.seed);
    auto restore = [&](const StateVector& s) {
        return final_layout ? to_virtual_order(s, *final_layout) : s;
    };

    // Ideal reference state, in virtual order.
    std::optional<std::vector<Amplitude>> ideal;
    if (const auto ideal_body = strip_terminal_measurements(program)) {
        if (program.num_qubits <= oracle::kMaxOracleQubits) {
            ideal = oracle::dense_simulate(*ideal_body);
            record.fidelity_reference = "dense_oracle";
        } else {
            const StateVector s = simulate(*ideal_body);
            ideal = std::vector<Amplitude>(s.live().begin(), s.live().end());
            record.fidelity_reference = "engine";
        }
    }

    const auto start = std::chrono::steady_clock::now();
    std::optional<StateVector> final_state;
    double fidelity_sum = 0.0;
    if (body && !noisy) {
        final_state = restore(simulate(*body, apply));
        record.counts = sample(*final_state, config.shots, rng);
        if (ideal) {
            fidelity_sum = fidelity(*ideal, final_state->live()) * static_cast<double>(config.shots);
        }
    } else {
        const Program& per_shot = body ? *body : executed;
        ExecutionOptions options{apply, std::nullopt};
        if (noisy) {
            options.noise = NoiseConfig{config.noise_p, config.seed};
        }
        for (std::size_t shot = 0; shot < config.shots; ++shot) {
            ExecutionResult result = execute(per_shot, rng, options);
            StateVector state = restore(result.state);
            for (const auto& [bits, count] : sample(state, 1, rng)) {
                record.counts[bits] += count;
            }
            if (ideal) {
                fidelity_sum += fidelity(*ideal, state.live());
            }
            if (!final_state) {
                final_state = std::move(state);
            }
        }
    }
    record.wall_time_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)
            .count());

    record.metrics.gates = gate_count(executed);
    record.metrics.depth = schedule_asap(executed).depth;
    if (record.metrics.depth <= 62) {
        record.metrics.quantum_volume = quantum_volume(record.metrics.depth);
    }
    if (ideal) {
        record.metrics.fidelity = fidelity_sum / static_cast<double>(config.shots);
    }
    record.success_set = config.success_set;
    if (record.success_set.empty() && ideal) {
        for (std::uint64_t i = 0; i < ideal->size(); ++i) {
            if (std::norm((*ideal)[i]) > kTolerance) {
                record.success_set.insert(to_bitstring(i, program.num_qubits));
            }
        }
    }
    if (!record.success_set.empty()) {
        record.metrics.success_probability = success_probability(record.counts, record.success_set);
    }
    record.final_states = top_states(*final_state, config.top_k);
    record.peak_state_bytes = estimate_total_memory({executed.num_qubits, 8});
    return record;
}

RunRecord run_file(const std::string& path, const RunConfig& config) {
    return run_program(parse_file(path), config);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string placement_name(PlacementStrategy s) {
    return s == PlacementStrategy::kGreedy ? "greedy" : "identity";
}

PlacementStrategy placement_from(const std::string& s) {
    if (s == "greedy") return PlacementStrategy::kGreedy;
    if (s == "identity") return PlacementStrategy::kIdentity;
    throw std::invalid_argument("unknown placement '" + s + "'");
}

template <class T>
json optional_json(const std::optional<T>& value) {
    return value ? json(*value) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j) {
    if (j.is_null()) {
        return std::nullopt;
    }
    return j.get<T>();
}

}  // namespace

std::string serialize(const RunRecord& r) {
    json config = {
        {"shots", r.config.shots},
        {"seed", r.config.seed},
        {"noise_p", r.config.noise_p},
        {"topology", r.config.topology},
        {"placement", placement_name(r.config.placement)},
        {"top_k", r.config.top_k},
        {"zero_skip", r.config.zero_skip},
        {"success_set", r.config.success_set},
    };
    json gates = {
        {"per_kind", r.metrics.gates.per_kind},
        {"unitary_total", r.metrics.gates.unitary_total},
        {"measurements", r.metrics.gates.measurements},
        {"preparations", r.metrics.gates.preparations},
    };
    json metrics = {
        {"gates", gates},
        {"depth", r.metrics.depth},
        {"fidelity", optional_json(r.metrics.fidelity)},
        {"success_probability", optional_json(r.metrics.success_probability)},
        {"quantum_volume", optional_json(r.metrics.quantum_volume)},
    };
    json mapping = nullptr;
    if (r.mapping) {
        mapping = {
            {"gates_before", r.mapping->gates_before},
            {"gates_after", r.mapping->gates_after},
            {"added_swaps", r.mapping->added_swaps},
            {"depth_before", r.mapping->depth_before},
            {"depth_after", r.mapping->depth_after},
        };
    }
    json finals = json::array();
    for (const auto& f : r.final_states) {
        finals.push_back({{"bitstring", f.bitstring},
                          {"re", f.amplitude.real()},
                          {"im", f.amplitude.imag()},
                          {"probability", f.probability}});
    }
    json j = {
        {"run_id", r.run_id},
        {"timestamp", r.timestamp},
        {"circuit_hash", r.circuit_hash},
        {"num_qubits", r.num_qubits},
        {"config", config},
        {"metrics", metrics},
        {"fidelity_reference", r.fidelity_reference},
        {"success_set", r.success_set},
        {"mapping", mapping},
        {"counts", r.counts},
        {"final_states", finals},
        {"wall_time_ns", r.wall_time_ns},
        {"peak_state_bytes", r.peak_state_bytes},
    };
    return j.dump();
}

RunRecord deserialize(std::string_view line) {
    try {
        const json j = json::parse(line);
        RunRecord r;
        r.run_id = j.at("run_id").get<std::string>();
        r.timestamp = j.at("timestamp").get<std::string>();
        r.circuit_hash = j.at("circuit_hash").get<std::string>();
        r.num_qubits = j.at("num_qubits").get<std::size_t>();

        const json& c = j.at("config");
        r.config.shots = c.at("shots").get<std::size_t>();
        r.config.seed = c.at("seed").get<std::uint64_t>();
        r.config.noise_p = c.at("noise_p").get<double>();
        r.config.topology = c.at("topology").get<std::string>();
        r.config.placement = placement_from(c.at("placement").get<std::string>());
        r.config.top_k = c.at("top_k").get<std::size_t>();
        r.config.zero_skip = c.at("zero_skip").get<bool>();
        r.config.success_set = c.at("success_set").get<std::set<std::string>>();

        const json& m = j.at("metrics");
        const json& g = m.at("gates");
        r.metrics.gates.per_kind = g.at("per_kind").get<std::map<std::string, std::size_t>>();
        r.metrics.gates.unitary_total = g.at("unitary_total").get<std::size_t>();
        r.metrics.gates.measurements = g.at("measurements").get<std::size_t>();
        r.metrics.gates.preparations = g.at("preparations").get<std::size_t>();
        r.metrics.depth = m.at("depth").get<std::size_t>();
        r.metrics.fidelity = optional_from<double>(m.at("fidelity"));
        r.metrics.success_probability = optional_from<double>(m.at("success_probability"));
        r.metrics.quantum_volume = optional_from<std::uint64_t>(m.at("quantum_volume"));

        r.fidelity_reference = j.at("fidelity_reference").get<std::string>();
        r.success_set = j.at("success_set").get<std::set<std::string>>();
        if (const json& mp = j.at("mapping"); !mp.is_null()) {
            r.mapping = MappingReport{
                mp.at("gates_before").get<std::size_t>(), mp.at("gates_after").get<std::size_t>(),
                mp.at("added_swaps").get<std::size_t>(), mp.at("depth_before").get<std::size_t>(),
                mp.at("depth_after").get<std::size_t>()};
        }
        r.counts = j.at("counts").get<Histogram>();
        for (const json& f : j.at("final_states")) {
            r.final_states.push_back({f.at("bitstring").get<std::string>(),
                                      Amplitude{f.at("re").get<double>(), f.at("im").get<double>()},
                                      f.at("probability").get<double>()});
        }
        r.wall_time_ns = j.at("wall_time_ns").get<std::uint64_t>();
        r.peak_state_bytes = j.at("peak_state_bytes").get<std::uint64_t>();
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed run record: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Identity helpers

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    std::ostringstream hex;
    hex << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < length; ++i) {
        hex << std::setw(2) << static_cast<int>(digest[i]);
    }
    return hex.str();
}

std::string make_uuid() {
    static thread_local std::mt19937_64 gen{std::random_device{}()};
    std::uint64_t hi = gen();
    std::uint64_t lo = gen();
    hi = (hi & 0xFFFFFFFFFFFF0FFFULL) | 0x0000000000004000ULL;  // version 4
    lo = (lo & 0x3FFFFFFFFFFFFFFFULL) | 0x8000000000000000ULL;  // RFC 4122 variant
    char buf[37];
    std::snprintf(buf, sizeof(buf), "%08x-%04x-%04x-%04x-%012llx",
                  static_cast<unsigned>(hi >> 32), static_cast<unsigned>((hi >> 16) & 0xFFFF),
                  static_cast<unsigned>(hi & 0xFFFF), static_cast<unsigned>(lo >> 48),
                  static_cast<unsigned long long>(lo & 0xFFFFFFFFFFFFULL));
    return buf;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t seconds = std::chrono::system_clock::to_time_t(now);
    const auto millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
    std::tm tm{};
    gmtime_r(&seconds, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%S", &tm);
    char out[40];
    std::snprintf(out, sizeof(out), "%s.%03dZ", buf, static_cast<int>(millis));
    return out;
}

}  // namespace qacc
