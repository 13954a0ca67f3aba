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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qacc/cqasm.hpp"
#include "qacc/execute.hpp"
#include "qacc/mapper.hpp"
#include "qacc/metrics.hpp"
#include "qacc/tensor_oracle.hpp"
#include "test_support.hpp"

namespace qacc {
namespace {

TEST(GateCount, Bell) {
    const auto c = gate_count(parse("version 1.0\nqubits 2\nh q[0]\ncnot q[0],q[1]\nmeasure q[0]"));
    EXPECT_EQ(c.per_kind, (std::map<std::string, std::size_t>{{"cnot", 1}, {"h", 1}, {"measure", 1}}));
    EXPECT_EQ(c.unitary_total, 2u);
    EXPECT_EQ(c.measurements, 1u);
    EXPECT_EQ(c.total(), 3u);
}

TEST(GateCount, Empty) {
    const auto c = gate_count(Program{"1.0", 1, {}});
    EXPECT_TRUE(c.per_kind.empty());
    EXPECT_EQ(c.total(), 0u);
}

TEST(GateCount, TenX) {
    const auto c = gate_count(make_program(1, std::vector<Gate>(10, make_gate(GateKind::kX, {0}))));
    EXPECT_EQ(c.per_kind.at("x"), 10u);
    EXPECT_EQ(c.unitary_total, 10u);
}

TEST(GateCount, PreparationsSeparate) {
    const auto c = gate_count(make_program(1, {make_gate(GateKind::kPrepZ, {0}), make_gate(GateKind::kH, {0})}));
    EXPECT_EQ(c.preparations, 1u);
    EXPECT_EQ(c.unitary_total, 1u);
}

TEST(Fidelity, Examples) {
    const std::vector<Amplitude> zero{1.0, 0.0};
    const std::vector<Amplitude> one{0.0, 1.0};
    const double r = 1.0 / std::numbers::sqrt2;
    const std::vector<Amplitude> plus{r, r};
    EXPECT_NEAR(fidelity(zero, zero), 1.0, 1e-15);
    EXPECT_EQ(fidelity(zero, one), 0.0);
    // |<0|+>|^2 computed directly.
    const double overlap = std::norm(std::conj(zero[0]) * plus[0] + std::conj(zero[1]) * plus[1]);
    EXPECT_NEAR(fidelity(zero, plus), overlap, 1e-15);
    EXPECT_NEAR(fidelity(zero, plus), 0.5, 1e-15);
    EXPECT_THROW(fidelity(zero, std::vector<Amplitude>(4)), std::invalid_argument);
}

TEST(Fidelity, SymmetricAndPhaseInvariant) {
    Rng rng(4);
    std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
    for (int i = 0; i < 100; ++i) {
        const auto a = testing::random_state(3, rng);
        const auto b = testing::random_state(3, rng);
        const double f = fidelity(a.amplitudes(), b.amplitudes());
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0);
        EXPECT_NEAR(f, fidelity(b.amplitudes(), a.amplitudes()), 1e-12);
        const Amplitude u = std::polar(1.0, phase(rng));
        std::vector<Amplitude> rotated(a.amplitudes().begin(), a.amplitudes().end());
        for (auto& x : rotated) {
            x *= u;
        }
        EXPECT_NEAR(f, fidelity(rotated, b.amplitudes()), 1e-12);
    }
}

TEST(SuccessProbability, Examples) {
    EXPECT_EQ(success_probability({{"00", 1000}}, {"00"}), 1.0);
    EXPECT_EQ(success_probability({{"00", 493}, {"11", 507}}, {"00", "11"}), 1.0);
    EXPECT_NEAR(success_probability({{"00", 250}, {"01", 250}, {"10", 250}, {"11", 250}}, {"10"}), 0.25, 1e-15);
    EXPECT_THROW(success_probability({}, {"0"}), std::invalid_argument);
}

TEST(QuantumVolume, Examples) {
    EXPECT_EQ(quantum_volume(0), 1u);
    EXPECT_EQ(quantum_volume(5), 32u);
    const auto bell = parse("version 1.0\nqubits 2\nh q[0]\ncnot q[0],q[1]\nmeasure q[0]");
    EXPECT_EQ(quantum_volume(schedule_asap(bell).depth), 8u);
    EXPECT_THROW(quantum_volume(63), std::overflow_error);
    EXPECT_EQ(quantum_volume(62), std::uint64_t{1} << 62);
}

TEST(QuantumVolume, DoublesPerUnitDepth) {
    for (std::size_t d = 0; d < 62; ++d) {
        EXPECT_EQ(quantum_volume(d + 1), 2 * quantum_volume(d));
    }
}

TEST(Amdahl, Examples) {
    EXPECT_NEAR(amdahl(0.3, 2.0), 1.0 / 0.85, 1e-12);
    EXPECT_NEAR(round_to(amdahl(0.3, 2.0), 2), 1.18, 1e-12);
    const std::vector<std::pair<double, double>> parts{{0.11, 1.0}, {0.18, 5.0}, {0.23, 20.0}, {0.48, 1.6}};
    EXPECT_NEAR(amdahl(parts), 1.0 / (0.11 + 0.036 + 0.0115 + 0.3), 1e-12);
    EXPECT_NEAR(round_to(amdahl(parts), 2), 2.19, 1e-12);
    EXPECT_EQ(amdahl(0.0, 17.0), 1.0);
}

TEST(Amdahl, RejectsBadInput) {
    EXPECT_THROW(amdahl(0.5, 0.0), std::invalid_argument);
    EXPECT_THROW(amdahl(1.5, 2.0), std::invalid_argument);
    EXPECT_THROW(amdahl(-0.1, 2.0), std::invalid_argument);
    const std::vector<std::pair<double, double>> bad_sum{{0.5, 1.0}, {0.4, 2.0}};
    EXPECT_THROW(amdahl(bad_sum), std::invalid_argument);
    const std::vector<std::pair<double, double>> bad_speed{{0.5, 1.0}, {0.5, -2.0}};
    EXPECT_THROW(amdahl(bad_speed), std::invalid_argument);
}

TEST(Amdahl, BoundedAndMonotone) {
    for (double p = 0.0; p <= 1.0; p += 0.05) {
        double previous = 0.0;
        for (double s = 0.25; s <= 64.0; s *= 1.5) {
            const double v = amdahl(p, s);
            EXPECT_GE(v, previous);
            const double cap = p < 1.0 ? std::min(s, 1.0 / (1.0 - p)) : s;
            EXPECT_LE(v, std::max(cap, 1.0) + 1e-12);
            if (s >= 1.0) {
                EXPECT_LE(v, cap + 1e-12);
            }
            previous = v;
        }
    }
}

TEST(Gustafson, Examples) {
    EXPECT_EQ(gustafson(1.0, 0.37), 1.0);
    EXPECT_EQ(gustafson(64.0, 0.0), 64.0);
    EXPECT_EQ(gustafson(64.0, 1.0), 1.0);
    EXPECT_THROW(gustafson(0.5, 0.1), std::invalid_argument);
    EXPECT_THROW(gustafson(4.0, 1.1), std::invalid_argument);
}

TEST(Gustafson, MonotoneAndBounded) {
    for (double s = 0.0; s <= 1.0; s += 0.1) {
        double previous = 0.0;
        for (double p = 1.0; p <= 128.0; p += 3.0) {
            const double v = gustafson(p, s);
            EXPECT_GE(v, previous);
            EXPECT_GE(v, 1.0 - 1e-12);
            EXPECT_LE(v, p + 1e-12);
            EXPECT_LE(gustafson(p, std::min(1.0, s + 0.1)), v + 1e-12);
            previous = v;
        }
    }
}

TEST(Metrics, NoiselessFidelityIsOneAgainstOracle) {
    Rng rng(6);
    for (int i = 0; i < 100; ++i) {
        const auto p = testing::random_program(1 + i % 6, i % 20, rng);
        const auto engine = simulate(p);
        const auto dense = oracle::dense_simulate(p);
        EXPECT_NEAR(fidelity(dense, engine.amplitudes()), 1.0, kTolerance);
    }
}

TEST(RoundTo, TwoDecimals) {
    EXPECT_DOUBLE_EQ(round_to(2.18579, 2), 2.19);
    EXPECT_DOUBLE_EQ(round_to(1.17647, 2), 1.18);
}

}  // namespace
}  // namespace qacc
