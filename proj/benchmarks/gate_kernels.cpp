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


// Gate kernels under google-benchmark, at 1..3 qubits and on wider registers.

#include <benchmark/benchmark.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qacc/gate.hpp"
#include "qacc/gates.hpp"
#include "qacc/state.hpp"
#include "qacc/tensor_oracle.hpp"

namespace {

qacc::Gate gate_for(qacc::GateKind kind) {
    using qacc::GateKind;
    switch (kind) {
        case GateKind::kRX:
        case GateKind::kRY:
        case GateKind::kRZ:
            return qacc::make_gate(kind, {0}, 0.3);
        case GateKind::kCNOT:
        case GateKind::kCPhase:
        case GateKind::kSwap:
            return qacc::make_gate(kind, {0, 1});
        case GateKind::kToffoli:
            return qacc::make_gate(kind, {0, 1, 2});
        default:
            return qacc::make_gate(kind, {0});
    }
}

// Register just wide enough for the gate, spread by H so no amplitude is zero.
void BM_Gate(benchmark::State& st) {
    const auto kind = static_cast<qacc::GateKind>(st.range(0));
    const qacc::Gate gate = gate_for(kind);
    qacc::StateVector state(gate.qubits.size());
    for (std::size_t q = 0; q < gate.qubits.size(); ++q) {
        qacc::apply_gate(state, qacc::make_gate(qacc::GateKind::kH, {q}));
    }
    for (auto _ : st) {
        qacc::apply_gate(state, gate);
        benchmark::ClobberMemory();
    }
    st.SetLabel(std::string(qacc::mnemonic(kind)));
}
BENCHMARK(BM_Gate)->DenseRange(0, static_cast<int>(qacc::GateKind::kSwap));

// H on qubit 0 of an n-qubit register, from |0...0> (mostly zeros) with and
// without skipping.
void BM_SparseH(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const qacc::ApplyOptions options{st.range(1) != 0};
    qacc::StateVector state(n);
    const qacc::Gate h = qacc::make_gate(qacc::GateKind::kH, {0});
    for (auto _ : st) {
        qacc::apply_gate(state, h, options);
        benchmark::ClobberMemory();
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(std::size_t{1} << n));
}
BENCHMARK(BM_SparseH)->ArgsProduct({{10, 14, 18, 22}, {0, 1}});

// Dense embedding of H on qubit 0 through the Kronecker chain.
void BM_DenseEmbed(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const qacc::Gate h = qacc::make_gate(qacc::GateKind::kH, {0});
    for (auto _ : st) {
        benchmark::DoNotOptimize(qacc::oracle::gate_matrix(h, n));
    }
}
BENCHMARK(BM_DenseEmbed)->DenseRange(1, 8);

}  // namespace

BENCHMARK_MAIN();
