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


// qacc command line: run, map, align, bench, metrics.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qacc/bench.hpp"
#include "qacc/cqasm.hpp"
#include "qacc/errors.hpp"
#include "qacc/genomics.hpp"
#include "qacc/mapper.hpp"
#include "qacc/run.hpp"
#include "qacc/store.hpp"

namespace {

enum ExitCode : int { kOk = 0, kParse = 1, kMapping = 2, kCapacity = 3 };

qacc::PlacementStrategy placement_from(const std::string& name) {
    return name == "greedy" ? qacc::PlacementStrategy::kGreedy : qacc::PlacementStrategy::kIdentity;
}

qacc::Topology topology_from(const std::string& text) {
    try {
        return qacc::parse_topology(text);
    } catch (const std::invalid_argument& e) {
        throw qacc::MappingError(e.what());
    }
}

std::string format_optional(const std::optional<double>& v) {
    if (!v) {
        return "n/a";
    }
    std::ostringstream out;
    out << qacc::round_to(*v, 6);
    return out.str();
}

void print_summary(const qacc::RunRecord& r, std::ostream& out) {
    out << "run_id      " << r.run_id << '\n'
        << "timestamp   " << r.timestamp << '\n'
        << "circuit     " << r.circuit_hash << '\n'
        << "qubits      " << r.num_qubits << '\n'
        << "shots       " << r.config.shots << "  seed " << r.config.seed << "  noise "
        << r.config.noise_p << '\n'
        << "gates       " << r.metrics.gates.total() << "  depth " << r.metrics.depth << '\n'
        << "fidelity    " << format_optional(r.metrics.fidelity);
    if (!r.fidelity_reference.empty()) {
        out << " (" << r.fidelity_reference << ')';
    }
    out << '\n' << "success     " << format_optional(r.metrics.success_probability) << '\n';
    if (r.metrics.quantum_volume) {
        out << "qv          " << *r.metrics.quantum_volume << '\n';
    }
    if (r.mapping) {
        out << "mapping     " << r.config.topology << "  swaps " << r.mapping->added_swaps
            << "  gates " << r.mapping->gates_before << " -> " << r.mapping->gates_after
            << "  depth " << r.mapping->depth_before << " -> " << r.mapping->depth_after << '\n';
    }
    out << "wall_ns     " << r.wall_time_ns << "  peak_bytes " << r.peak_state_bytes << '\n';
    out << "final states\n";
    for (const auto& s : r.final_states) {
        char line[160];
        std::snprintf(line, sizeof line, "  |%s>  %+.6f%+.6fi  p=%.6f\n", s.bitstring.c_str(),
                      s.amplitude.real(), s.amplitude.imag(), s.probability);
        out << line;
    }
}

void print_fits(const qacc::bench::BenchResult& result) {
    for (const auto& s : result.series) {
        if (!s.fit) {
            continue;
        }
        std::fprintf(stderr, "# %s %s slope=%.6g intercept=%.6g r2=%.4f\n",
                     s.label.empty() ? result.suite.c_str() : s.label.c_str(), s.model.c_str(),
                     s.fit->slope, s.fit->intercept, s.fit->r_squared);
    }
}

int report(const char* kind, const std::exception& e, int code) {
    std::cerr << "qacc: " << kind << ": " << e.what() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qacc: quantum accelerator toolchain"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Simulate a cQASM file and store the run record");
    std::string run_file;
    qacc::RunConfig config;
    std::string placement = "identity";
    std::vector<std::string> success;
    std::optional<std::string> store_path;
    bool no_skip = false;
    bool run_json = false;
    run->add_option("file", run_file, "cQASM input")->required();
    run->add_option("--shots", config.shots, "Measurement shots")->capture_default_str();
    run->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    run->add_option("--noise-p", config.noise_p, "Depolarizing probability per operand")
        ->check(CLI::Range(0.0, 1.0));
    run->add_option("--topology", config.topology, "line:N, ring:N, grid:RxC or full:N");
    run->add_option("--placement", placement, "Initial placement")
        ->check(CLI::IsMember({"identity", "greedy"}));
    run->add_option("--top-k", config.top_k, "Final states kept")->capture_default_str();
    run->add_option("--success", success, "Correct-answer bitstrings")->delimiter(',');
    run->add_option("--store", store_path, "Run store (default $QACC_STORE or qacc_runs.jsonl)");
    run->add_flag("--no-zero-skip", no_skip, "Visit every amplitude");
    run->add_flag("--json", run_json, "Print the record as JSON");

    // map
    auto* map = app.add_subcommand("map", "Place, route and schedule a cQASM file");
    std::string map_file;
    std::string map_topology;
    std::string map_placement = "identity";
    map->add_option("file", map_file, "cQASM input")->required();
    map->add_option("--topology", map_topology, "line:N, ring:N, grid:RxC or full:N")->required();
    map->add_option("--placement", map_placement, "Initial placement")
        ->check(CLI::IsMember({"identity", "greedy"}));

    // align
    auto* align = app.add_subcommand("align", "Grover search for a read in a reference");
    std::string reference;
    std::string read;
    std::size_t iterations = 1;
    std::string diffusion = "joint";
    std::size_t align_shots = 100;
    std::uint64_t align_seed = 0;
    bool emit_qasm = false;
    align->add_option("reference", reference, "Binary or ACGT reference")->required();
    align->add_option("read", read, "Binary or ACGT read")->required();
    align->add_option("--iterations", iterations, "Grover iterations")->capture_default_str();
    align->add_option("--diffusion", diffusion, "joint (index and data) or index")
        ->check(CLI::IsMember({"joint", "index"}));
    align->add_option("--shots", align_shots, "Index samples")->capture_default_str();
    align->add_option("--seed", align_seed, "RNG seed")->capture_default_str();
    align->add_flag("--emit-qasm", emit_qasm, "Print the circuit instead of the ranking");

    // bench
    auto* bench = app.add_subcommand("bench", "Timing suites, CSV on stdout");
    bench->require_subcommand(1);
    auto* bench_gates = bench->add_subcommand("gates", "Per-gate mean times");
    std::size_t reps = 100000;
    bench_gates->add_option("--reps", reps, "Repetitions per gate")->capture_default_str();
    auto* bench_qubits = bench->add_subcommand("qubits", "EPR circuits over n, skip on and off");
    std::size_t n_min = 10;
    std::size_t n_max = 22;
    bench_qubits->add_option("--n-min", n_min)->capture_default_str();
    bench_qubits->add_option("--n-max", n_max)->capture_default_str();
    auto* bench_depth = bench->add_subcommand("depth", "Repeated X, H and CNOT on two qubits");
    std::vector<std::size_t> counts{100, 1000, 2000, 3000, 4000, 5000, 6000, 7000, 8000, 9000, 10000};
    bench_depth->add_option("--counts", counts, "Gate counts")->delimiter(',');

    // metrics
    auto* metrics = app.add_subcommand("metrics", "Run store access");
    metrics->require_subcommand(1);
    auto* query = metrics->add_subcommand("query", "Print matching records as JSON lines");
    qacc::RunFilter filter;
    std::optional<std::string> query_store;
    query->add_option("--run-id", filter.run_id);
    query->add_option("--hash", filter.circuit_hash);
    query->add_option("--since", filter.since, "ISO-8601 lower bound (inclusive)");
    query->add_option("--until", filter.until, "ISO-8601 upper bound (inclusive)");
    query->add_option("--store", query_store);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*run) {
            config.placement = placement_from(placement);
            config.zero_skip = !no_skip;
            config.success_set = {success.begin(), success.end()};
            if (!config.topology.empty()) {
                topology_from(config.topology);
            }
            const qacc::RunRecord record = qacc::run_file(run_file, config);
            qacc::RunStore store(qacc::resolve_store_path(store_path));
            store.append(record);
            if (run_json) {
                std::cout << qacc::serialize(record) << '\n';
            } else {
                print_summary(record, std::cout);
                std::cout << "stored in   " << store.path().string() << '\n';
            }
        } else if (*map) {
            const qacc::Program program = qacc::parse_file(map_file);
            const qacc::Topology topology = topology_from(map_topology);
            const qacc::MappedCircuit mapped =
                qacc::map_circuit(program, topology, placement_from(map_placement));
            std::cout << mapped.cqasm;
            const auto& rep = mapped.routed.report;
            std::cerr << "# topology " << topology.describe() << "  swaps " << rep.added_swaps
                      << "  gates " << rep.gates_before << " -> " << rep.gates_after << "  depth "
                      << rep.depth_before << " -> " << rep.depth_after << '\n';
        } else if (*align) {
            auto instance = qacc::genomics::make_instance(reference, read, iterations);
            instance.diffusion = diffusion == "index" ? qacc::genomics::DiffusionScope::kIndexOnly
                                                      : qacc::genomics::DiffusionScope::kIndexAndData;
            qacc::Rng rng(align_seed);
            const auto result = qacc::genomics::align(instance, align_shots, rng);
            if (emit_qasm) {
                std::cout << qacc::emit(result.circuit);
            } else {
                std::cout << "position,probability,mismatches\n";
                for (const auto& p : result.ranking) {
                    char line[96];
                    std::snprintf(line, sizeof line, "%zu,%.6f,%zu\n", p.position, p.probability,
                                  p.mismatches);
                    std::cout << line;
                }
                std::cerr << "# qubits " << result.layout.total_qubits() << " (index "
                          << result.layout.index_qubits << ", data " << result.layout.data_qubits
                          << ", ancilla " << result.layout.ancilla_qubits << ")\n";
            }
        } else if (*bench_gates) {
            const auto result = qacc::bench::bench_gates(reps);
            std::cout << result.to_csv();
        } else if (*bench_qubits) {
            const auto result = qacc::bench::bench_zero_skip(n_min, n_max);
            std::cout << result.to_csv();
            print_fits(result);
        } else if (*bench_depth) {
            const auto result = qacc::bench::bench_depth_scaling(counts);
            std::cout << result.to_csv();
            print_fits(result);
        } else if (*query) {
            const qacc::RunStore store(qacc::resolve_store_path(query_store));
            const auto found = store.query(filter);
            for (const auto& record : found.records) {
                std::cout << qacc::serialize(record) << '\n';
            }
            if (found.skipped_lines > 0) {
                std::cerr << "qacc: warning: skipped " << found.skipped_lines
                          << " unreadable line(s) in " << store.path().string() << '\n';
            }
        }
    } catch (const qacc::ParseError& e) {
        return report("parse error", e, kParse);
    } catch (const qacc::MappingError& e) {
        return report("mapping error", e, kMapping);
    } catch (const qacc::CapacityError& e) {
        return report("capacity error", e, kCapacity);
    } catch (const std::exception& e) {
        return report("error", e, kParse);
    }
    return kOk;
}
