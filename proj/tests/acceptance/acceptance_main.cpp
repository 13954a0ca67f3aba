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


// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qacc/bench.hpp"
#include "qacc/cqasm.hpp"
#include "qacc/execute.hpp"
#include "qacc/genomics.hpp"
#include "qacc/mapper.hpp"
#include "qacc/memory_model.hpp"
#include "qacc/metrics.hpp"
#include "qacc/run.hpp"
#include "qacc/tensor_oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace qacc;
using testing::max_deviation;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// 1. Memory table.
Outcome memory_table() {
    // Values as printed: n = 2..13 in KiB, n = 14..25 in MiB.
    const double kib[] = {0.125, 0.25, 0.5, 1, 2, 4, 8, 16, 32, 64, 128, 256};
    const double mib[] = {0.5, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
    Outcome out;
    std::size_t matched = 0;
    for (std::size_t n = 2; n <= 25; ++n) {
        const double expected = n <= 13 ? kib[n - 2] * 1024.0 : mib[n - 14] * 1024.0 * 1024.0;
        const auto got = estimate_total_memory({n, 8});
        if (static_cast<double>(got) != expected) {
            out.pass = false;
            out.detail += " n=" + std::to_string(n) + " got " + std::to_string(got);
        } else {
            ++matched;
        }
    }
    out.detail = std::to_string(matched) + "/24 rows exact" + out.detail;
    return out;
}

// 2. Kronecker product of X and Y.
Outcome kronecker_check() {
    using oracle::DenseMatrix;
    const Amplitude i{0.0, 1.0};
    const DenseMatrix x(2, 2, {0.0, 1.0, 1.0, 0.0});
    const DenseMatrix y(2, 2, {0.0, -i, i, 0.0});
    const DenseMatrix expected(4, 4, {0.0, 0.0, 0.0, -i,
                                      0.0, 0.0, i, 0.0,
                                      0.0, -i, 0.0, 0.0,
                                      i, 0.0, 0.0, 0.0});
    const bool exact = oracle::kron(x, y) == expected;
    return {exact, exact ? "16/16 entries exact" : "mismatch"};
}

// 3. Hadamard tensor identity.
Outcome hadamard_identity() {
    double worst = 0.0;
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
            std::vector<Gate> gates;
            for (std::size_t q = 0; q < n; ++q) {
                if ((a >> q) & 1) gates.push_back(make_gate(GateKind::kX, {q}));
            }
            for (std::size_t q = 0; q < n; ++q) {
                gates.push_back(make_gate(GateKind::kH, {q}));
            }
            const auto dense = oracle::dense_simulate(make_program(n, gates));
            worst = std::max(worst, max_deviation(dense, oracle::hadamard_tensor_check(n, a)));
            ++cases;
        }
    }
    return {worst <= 1e-12, std::to_string(cases) + " cases, max deviation " + fmt("%.3e", worst)};
}

// 4. Engine versus dense oracle, and zero-skip neutrality.
Outcome oracle_equivalence() {
    Rng rng(20261019);
    std::uniform_int_distribution<std::size_t> qubits(1, 6);
    std::uniform_int_distribution<std::size_t> length(1, 20);
    double worst = 0.0;
    std::size_t identical = 0;
    std::set<GateKind> kinds;
    for (int c = 0; c < 1000; ++c) {
        const std::size_t n = qubits(rng);
        const auto program = testing::random_program(n, length(rng), rng);
        for (const Gate& g : program.instructions()) kinds.insert(g.kind);
        const auto on = simulate(program, {true});
        const auto off = simulate(program, {false});
        worst = std::max(worst, max_deviation(on.amplitudes(), oracle::dense_simulate(program)));
        if (std::memcmp(on.amplitudes().data(), off.amplitudes().data(), on.dimension() * sizeof(Amplitude)) == 0) {
            ++identical;
        }
    }
    const bool pass = worst <= 1e-9 && identical == 1000 && kinds.size() == 11;
    return {pass, "1000 circuits over " + std::to_string(kinds.size()) + " gate kinds, max deviation " +
                      fmt("%.3e", worst) + ", skip on/off bit-identical " + std::to_string(identical) + "/1000"};
}

// 5. Amdahl examples.
Outcome speedups() {
    const double single = amdahl(0.3, 2.0);
    const std::vector<std::pair<double, double>> parts{{0.11, 1.0}, {0.18, 5.0}, {0.23, 20.0}, {0.48, 1.6}};
    const double multi = amdahl(parts);
    const bool pass = std::abs(single - 1.18) <= 0.005 && std::abs(multi - 2.19) <= 0.005;
    return {pass, "amdahl(0.3,2)=" + fmt("%.5f", single) + " four-component=" + fmt("%.5f", multi)};
}

// 6. Quantum volume.
Outcome quantum_volume_check() {
    for (std::size_t d = 0; d <= 20; ++d) {
        if (quantum_volume(d) != (std::uint64_t{1} << d)) {
            return {false, "D=" + std::to_string(d)};
        }
    }
    return {true, "D=0..20 exact"};
}

// 7. Mapping semantics.
std::vector<Amplitude> virtual_state(const StateVector& physical, const LayoutMap& layout) {
    std::vector<Amplitude> out(std::size_t{1} << layout.num_virtual());
    for (std::uint64_t b = 0; b < out.size(); ++b) {
        std::uint64_t p = 0;
        for (std::size_t v = 0; v < layout.num_virtual(); ++v) {
            if ((b >> v) & 1) p |= std::uint64_t{1} << layout.physical(v);
        }
        out[b] = physical.amplitude(p);
    }
    return out;
}

std::string grid_for(std::size_t n) {
    return n <= 2 ? "grid:1x" + std::to_string(n) : n == 3 ? "grid:2x2" : n == 4 ? "grid:2x2" : "grid:2x3";
}

Outcome mapping_semantics() {
    Rng rng(7);
    std::uniform_int_distribution<std::size_t> qubits(2, 5);
    std::uniform_int_distribution<std::size_t> length(1, 20);
    double worst = 0.0;
    std::size_t invalid = 0;
    std::size_t full_swaps = 0;
    std::size_t mapped = 0;
    std::size_t swaps = 0;
    for (int c = 0; c < 200; ++c) {
        const std::size_t n = qubits(rng);
        const auto program = testing::random_program(n, length(rng), rng);
        const auto expected = oracle::dense_simulate(program);
        const std::string topologies[] = {"line:" + std::to_string(n), "ring:" + std::to_string(n), grid_for(n)};
        for (const auto& name : topologies) {
            const auto topology = parse_topology(name);
            const auto strategy = c % 2 ? PlacementStrategy::kGreedy : PlacementStrategy::kIdentity;
            const auto m = map_circuit(program, topology, strategy);
            if (!adjacency_valid(m.routed.program, topology)) ++invalid;
            const auto physical = simulate(m.routed.program);
            worst = std::max(worst, max_deviation(virtual_state(physical, m.routed.final_layout), expected));
            swaps += m.routed.report.added_swaps;
            ++mapped;
        }
        const auto full = map_circuit(program, parse_topology("full:" + std::to_string(n)), PlacementStrategy::kGreedy);
        full_swaps += full.routed.report.added_swaps;
    }
    const bool pass = worst <= 1e-9 && invalid == 0 && full_swaps == 0;
    return {pass, std::to_string(mapped) + " mappings (" + std::to_string(swaps) + " swaps), max deviation " +
                      fmt("%.3e", worst) + ", adjacency violations " + std::to_string(invalid) +
                      ", full-topology swaps " + std::to_string(full_swaps)};
}

// 8. Genomics ranking and the toy amplitude.
std::string bits_of(std::uint64_t v, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t j = 0; j < width; ++j) {
        if ((v >> (width - 1 - j)) & 1) s[j] = '1';
    }
    return s;
}

// Closed-form index marginals after one joint-diffusion Grover round: the
// state before the oracle is an equal superposition over (slot, distance)
// pairs.
std::vector<double> closed_form_marginals(const genomics::AlignmentInstance& inst,
                                          const genomics::AlignmentLayout& layout) {
    const auto slices = genomics::encode_reference(inst);
    const double slots = static_cast<double>(slices.size());
    const double dim = std::ldexp(1.0, static_cast<int>(layout.index_qubits + layout.data_qubits));
    std::vector<bool> marked;
    double signed_sum = 0.0;
    for (const auto& s : slices) {
        std::size_t d = 0;
        for (std::size_t j = 0; j < s.bits.size(); ++j) d += s.bits[j] != inst.read[j];
        marked.push_back(d <= inst.max_mismatches);
        signed_sum += marked.back() ? -1.0 : 1.0;
    }
    const double amp = 1.0 / std::sqrt(slots);
    const double background = 2.0 * signed_sum * amp / dim;
    const double others = std::ldexp(1.0, static_cast<int>(layout.data_qubits)) - 1.0;
    std::vector<double> out;
    for (std::size_t i = 0; i < slices.size(); ++i) {
        const double on = background - (marked[i] ? -amp : amp);
        out.push_back(on * on + others * background * background);
    }
    return out;
}

Outcome genomics_ranking() {
    Rng rng(8);
    std::size_t instances = 0;
    std::size_t ranked_first = 0;
    std::size_t dense_checked = 0;
    double worst_closed = 0.0;
    double worst_dense = 0.0;
    Rng pick(88);
    for (std::size_t R = 1; R <= 8; ++R) {
        for (std::size_t r = 1; r <= std::min<std::size_t>(3, R); ++r) {
            for (std::uint64_t ref = 0; ref < (std::uint64_t{1} << R); ++ref) {
                for (std::uint64_t read = 0; read < (std::uint64_t{1} << r); ++read) {
                    const std::string rs = bits_of(ref, R);
                    const std::string ds = bits_of(read, r);
                    std::vector<std::size_t> matches;
                    for (std::size_t p = 0; p + r <= R; ++p) {
                        if (rs.compare(p, r, ds) == 0) matches.push_back(p);
                    }
                    if (matches.size() != 1) continue;
                    ++instances;
                    const auto result = genomics::align(genomics::make_instance(rs, ds), 0, rng);
                    const auto& top = result.ranking;
                    if (top[0].position == matches[0] && (top.size() == 1 || top[0].probability > top[1].probability)) {
                        ++ranked_first;
                    }
                    // Independent checks of the marginals the ranking came from.
                    std::vector<double> engine(top.size());
                    for (const auto& e : top) engine[e.position] = e.probability;
                    const auto closed = closed_form_marginals(result.instance, result.layout);
                    for (std::size_t p = 0; p < engine.size(); ++p) {
                        worst_closed = std::max(worst_closed, std::abs(engine[p] - closed[p]));
                    }
                    const bool dense = R <= 5 || std::uniform_int_distribution<int>(0, 39)(pick) == 0;
                    if (dense && result.layout.total_qubits() <= oracle::kMaxOracleQubits) {
                        const auto amps = oracle::dense_simulate(result.circuit);
                        const auto marg = genomics::index_marginals(StateVector::from_amplitudes(amps), result.layout);
                        for (std::size_t p = 0; p < engine.size(); ++p) {
                            worst_dense = std::max(worst_dense, std::abs(engine[p] - marg[p]));
                        }
                        ++dense_checked;
                    }
                }
            }
        }
    }
    // Toy: reference of length 4, read of length 2 matching only the first window.
    const auto toy = oracle::dense_simulate(genomics::build_alignment_circuit(genomics::make_instance("0110", "01")));
    const double toy_amp = toy[0].real();
    const bool pass = ranked_first == instances && worst_closed <= 1e-9 && worst_dense <= 1e-9 &&
                      std::abs(toy_amp - 0.625) <= 0.005 && std::abs(toy[0].imag()) <= 0.005;
    return {pass, std::to_string(ranked_first) + "/" + std::to_string(instances) +
                      " unique-match instances ranked first; closed-form deviation " + fmt("%.2e", worst_closed) +
                      "; dense-verified " + std::to_string(dense_checked) + " (max deviation " +
                      fmt("%.2e", worst_dense) + "); toy |00000> amplitude " + fmt("%.6f", toy_amp)};
}

// 9. Performance shape.
Outcome performance_shape() {
    std::vector<std::size_t> counts{100};
    for (std::size_t g = 1000; g <= 10000; g += 1000) counts.push_back(g);
    const auto depth = bench::bench_depth_scaling(counts);
    double worst_depth = 1.0;
    std::string detail = "depth R2";
    for (const auto& s : depth.series) {
        worst_depth = std::min(worst_depth, s.fit->r_squared);
        detail += " " + s.label + "=" + fmt("%.4f", s.fit->r_squared);
    }
    const auto qubits = bench::bench_zero_skip(10, 22);
    const double log_r2 = qubits.series[0].fit->r_squared;
    double worst_ratio = 0.0;
    for (double ratio : qubits.series[2].times_ns) worst_ratio = std::max(worst_ratio, ratio);
    detail += "; log-time R2 " + fmt("%.4f", log_r2) + " (slope " + fmt("%.3f", qubits.series[0].fit->slope) +
              "); worst skip/no-skip ratio " + fmt("%.3f", worst_ratio);
    return {worst_depth >= 0.98 && log_r2 >= 0.95 && worst_ratio <= 1.10, detail};
}

// 10. Toolchain round trip and reproducible run records.
Outcome toolchain_round_trip() {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(QACC_TEST_DATA_DIR)) {
        if (e.path().extension() == ".qasm") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    std::set<GateKind> kinds;
    std::size_t round_trips = 0;
    std::size_t reproducible = 0;
    for (const auto& f : files) {
        const auto first = parse_file(f.string());
        for (const Gate& g : first.instructions()) kinds.insert(g.kind);
        if (parse(emit(first)) == first) ++round_trips;
        RunConfig cfg;
        cfg.seed = 1234;
        cfg.shots = 200;
        cfg.noise_p = 0.01;
        auto a = run_file(f.string(), cfg);
        auto b = run_file(f.string(), cfg);
        for (auto* r : {&a, &b}) {
            r->run_id.clear();
            r->timestamp.clear();
            r->wall_time_ns = 0;
        }
        if (a == b && deserialize(serialize(a)) == a) ++reproducible;
    }
    const bool pass = files.size() >= 20 && kinds.size() == std::size(kAllGateKinds) &&
                      round_trips == files.size() && reproducible == files.size();
    return {pass, std::to_string(round_trips) + "/" + std::to_string(files.size()) + " programs round-trip, " +
                      std::to_string(kinds.size()) + "/13 mnemonics, " + std::to_string(reproducible) +
                      " reproducible run records"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "memory table", 1.0, memory_table},
        {2, "kronecker X (x) Y", 1.0, kronecker_check},
        {3, "hadamard tensor identity", 10.0, hadamard_identity},
        {4, "oracle equivalence", 60.0, oracle_equivalence},
        {5, "speedup formulas", 1.0, speedups},
        {6, "quantum volume", 1.0, quantum_volume_check},
        {7, "mapping semantics", 60.0, mapping_semantics},
        {8, "genomics ranking", 60.0, genomics_ranking},
        {9, "performance shape", 300.0, performance_shape},
        {10, "toolchain round trip", 10.0, toolchain_round_trip},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budget_s) {
            out.pass = false;
            out.detail += "; over runtime budget";
        }
        failures += out.pass ? 0 : 1;
        std::printf("criterion %2d %-26s %s  %s [%.2fs]\n", c.id, c.title, out.pass ? "PASS" : "FAIL",
                    out.detail.c_str(), seconds);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
