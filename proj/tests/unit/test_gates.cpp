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
#include <cstring>
#include <numbers>
#include <stdexcept>

#include "qacc/execute.hpp"
#include "qacc/gates.hpp"
#include "qacc/metrics.hpp"
#include "qacc/tensor_oracle.hpp"
#include "test_support.hpp"

namespace qacc {
namespace {

using testing::max_deviation;
using testing::random_state;

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

StateVector copy_of(const StateVector& s) {
    return StateVector::from_amplitudes(s.amplitudes());
}

TEST(Gate, Arity) {
    EXPECT_EQ(arity(GateKind::kX), 1u);
    EXPECT_EQ(arity(GateKind::kRZ), 1u);
    EXPECT_EQ(arity(GateKind::kCNOT), 2u);
    EXPECT_EQ(arity(GateKind::kCPhase), 2u);
    EXPECT_EQ(arity(GateKind::kSwap), 2u);
    EXPECT_EQ(arity(GateKind::kToffoli), 3u);
    EXPECT_EQ(arity(GateKind::kMeasure), 1u);
}

TEST(Gate, MnemonicsRoundTrip) {
    for (GateKind k : kAllGateKinds) {
        EXPECT_EQ(kind_from_mnemonic(mnemonic(k)), k);
    }
    EXPECT_EQ(mnemonic(GateKind::kCPhase), "cz");
    EXPECT_EQ(kind_from_mnemonic("CNOT"), GateKind::kCNOT);
    EXPECT_FALSE(kind_from_mnemonic("cphase").has_value());
}

TEST(Gate, MakeGateChecksShape) {
    EXPECT_THROW(make_gate(GateKind::kCNOT, {0}), std::invalid_argument);
    EXPECT_THROW(make_gate(GateKind::kCNOT, {1, 1}), std::invalid_argument);
    EXPECT_THROW(make_gate(GateKind::kRX, {0}), std::invalid_argument);
    EXPECT_THROW(make_gate(GateKind::kX, {0}, 1.0), std::invalid_argument);
    EXPECT_NO_THROW(make_gate(GateKind::kToffoli, {2, 0, 1}));
}

TEST(Gate, ValidateChecksRange) {
    EXPECT_THROW(validate_gate(make_gate(GateKind::kH, {2}), 2), std::out_of_range);
    EXPECT_NO_THROW(validate_gate(make_gate(GateKind::kH, {1}), 2));
}

TEST(Gate, ToString) {
    EXPECT_EQ(to_string(make_gate(GateKind::kCNOT, {0, 1})), "cnot q[0], q[1]");
    EXPECT_EQ(to_string(make_gate(GateKind::kRX, {0}, std::numbers::pi / 2)),
              "rx q[0], 1.5707963267948966");
}

TEST(ApplyGate, XFlipsZeroToOne) {
    StateVector s(1);
    apply_gate(s, make_gate(GateKind::kX, {0}));
    EXPECT_EQ(s.amplitude(0), Amplitude(0.0));
    EXPECT_EQ(s.amplitude(1), Amplitude(1.0));
}

TEST(ApplyGate, HadamardOnZero) {
    StateVector s(1);
    apply_gate(s, make_gate(GateKind::kH, {0}));
    EXPECT_NEAR(std::abs(s.amplitude(0) - kInvSqrt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude(1) - kInvSqrt2), 0.0, 1e-15);
}

TEST(ApplyGate, HadamardUndoesSuperposition) {
    // (|00> + |10>)/sqrt2 with the superposed qubit being qubit 1.
    std::vector<Amplitude> amps{kInvSqrt2, 0.0, kInvSqrt2, 0.0};
    auto s = StateVector::from_amplitudes(amps);
    apply_gate(s, make_gate(GateKind::kH, {1}));
    EXPECT_NEAR(std::abs(s.amplitude(0) - 1.0), 0.0, 1e-15);
    for (int i = 1; i < 4; ++i) {
        EXPECT_NEAR(std::abs(s.amplitude(i)), 0.0, 1e-15);
    }
}

TEST(ApplyGate, YOnZeroIsIOne) {
    StateVector s(1);
    apply_gate(s, make_gate(GateKind::kY, {0}));
    EXPECT_EQ(s.amplitude(0), Amplitude(0.0));
    EXPECT_EQ(s.amplitude(1), Amplitude(0.0, 1.0));
}

TEST(ApplyGate, BellFromHadamardCnot) {
    StateVector s(2);
    apply_gate(s, make_gate(GateKind::kH, {0}));
    apply_gate(s, make_gate(GateKind::kCNOT, {0, 1}));
    const std::vector<Amplitude> expected{kInvSqrt2, 0.0, 0.0, kInvSqrt2};
    EXPECT_LE(max_deviation(s.amplitudes(), expected), 1e-15);
}

TEST(ApplyGate, CnotControlIsFirstOperand) {
    // |01> (qubit 0 set) -> |11>
    std::vector<Amplitude> amps{0.0, 1.0, 0.0, 0.0};
    auto s = StateVector::from_amplitudes(amps);
    apply_gate(s, make_gate(GateKind::kCNOT, {0, 1}));
    EXPECT_EQ(s.amplitude(3), Amplitude(1.0));
}

TEST(ApplyGate, ToffoliNeedsBothControls) {
    for (std::uint64_t in = 0; in < 8; ++in) {
        std::vector<Amplitude> amps(8, 0.0);
        amps[in] = 1.0;
        auto s = StateVector::from_amplitudes(amps);
        apply_gate(s, make_gate(GateKind::kToffoli, {0, 1, 2}));
        const std::uint64_t out = (in & 3) == 3 ? in ^ 4 : in;
        EXPECT_EQ(s.amplitude(out), Amplitude(1.0)) << in;
    }
}

TEST(ApplyGate, RejectsNonUnitaryAndBadOperands) {
    StateVector s(2);
    EXPECT_THROW(apply_gate(s, make_gate(GateKind::kMeasure, {0})), std::invalid_argument);
    EXPECT_THROW(apply_gate(s, make_gate(GateKind::kPrepZ, {0})), std::invalid_argument);
    EXPECT_THROW(apply_gate(s, make_gate(GateKind::kX, {2})), std::out_of_range);
    Gate bad{GateKind::kCNOT, {0}, std::nullopt};
    EXPECT_THROW(apply_gate(s, bad), std::invalid_argument);
}

TEST(ApplyGate, EveryKindPreservesNorm) {
    Rng rng(3);
    for (GateKind k : testing::unitary_kinds(3)) {
        for (int trial = 0; trial < 20; ++trial) {
            auto s = random_state(4, rng);
            std::vector<std::size_t> qs{2, 0, 3};
            qs.resize(arity(k));
            std::optional<double> angle;
            if (takes_angle(k)) {
                angle = 0.37 * (trial + 1);
            }
            apply_gate(s, make_gate(k, qs, angle));
            EXPECT_NEAR(s.norm_squared(), 1.0, kTolerance) << mnemonic(k);
        }
    }
}

TEST(ApplyGate, InvolutionsActAsIdentity) {
    Rng rng(5);
    const GateKind involutions[] = {GateKind::kX,    GateKind::kY,       GateKind::kZ,  GateKind::kH,
                                    GateKind::kCNOT, GateKind::kToffoli, GateKind::kSwap, GateKind::kCPhase};
    for (GateKind k : involutions) {
        for (int trial = 0; trial < 20; ++trial) {
            auto s = random_state(4, rng);
            const auto before = copy_of(s);
            std::vector<std::size_t> qs{3, 1, 0};
            qs.resize(arity(k));
            const Gate g = make_gate(k, qs);
            apply_gate(s, g);
            apply_gate(s, g);
            EXPECT_LE(max_deviation(s.amplitudes(), before.amplitudes()), kTolerance) << mnemonic(k);
        }
    }
}

TEST(ApplyGate, RotationsCompose) {
    Rng rng(7);
    std::uniform_real_distribution<double> angle(-7.0, 7.0);
    for (GateKind k : {GateKind::kRX, GateKind::kRY, GateKind::kRZ}) {
        for (int trial = 0; trial < 50; ++trial) {
            const double a = angle(rng);
            const double b = angle(rng);
            auto s1 = random_state(3, rng);
            auto s2 = copy_of(s1);
            apply_gate(s1, make_gate(k, {1}, a));
            apply_gate(s1, make_gate(k, {1}, b));
            apply_gate(s2, make_gate(k, {1}, a + b));
            EXPECT_LE(max_deviation(s1.amplitudes(), s2.amplitudes()), kTolerance) << mnemonic(k);
        }
    }
}

TEST(ApplyGate, RzTwoPiIsMinusIdentity) {
    Rng rng(9);
    auto s = random_state(2, rng);
    const auto before = copy_of(s);
    apply_gate(s, make_gate(GateKind::kRZ, {0}, 2.0 * std::numbers::pi));
    for (std::uint64_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(std::abs(s.amplitude(i) + before.amplitude(i)), 0.0, 1e-15);
    }
}

TEST(ApplyGate, ZeroSkipIsBitIdentical) {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto program = testing::random_program(5, 25, rng);
        const auto on = simulate(program, ApplyOptions{true});
        const auto off = simulate(program, ApplyOptions{false});
        ASSERT_EQ(std::memcmp(on.amplitudes().data(), off.amplitudes().data(),
                              on.dimension() * sizeof(Amplitude)),
                  0);
    }
}

TEST(Measure, DeterministicOnBasisState) {
    Rng rng(1);
    for (int shot = 0; shot < 20; ++shot) {
        StateVector s(1);
        apply_gate(s, make_gate(GateKind::kX, {0}));
        EXPECT_EQ(measure(s, 0, rng), 1);
        EXPECT_EQ(s.amplitude(1), Amplitude(1.0));
    }
}

TEST(Measure, EqualSuperpositionIsFair) {
    Rng rng(2024);
    int ones = 0;
    for (int shot = 0; shot < 10000; ++shot) {
        StateVector s(1);
        apply_gate(s, make_gate(GateKind::kH, {0}));
        ones += measure(s, 0, rng);
    }
    EXPECT_NEAR(ones / 10000.0, 0.5, 0.02);
}

TEST(Measure, BellOutcomesAgree) {
    Rng rng(77);
    int zeros = 0;
    for (int shot = 0; shot < 500; ++shot) {
        StateVector s(2);
        apply_gate(s, make_gate(GateKind::kH, {0}));
        apply_gate(s, make_gate(GateKind::kCNOT, {0, 1}));
        const int b0 = measure(s, 0, rng);
        EXPECT_NEAR(s.norm_squared(), 1.0, kTolerance);
        EXPECT_TRUE(testing::scratch_is_zero(s));
        const int b1 = measure(s, 1, rng);
        EXPECT_EQ(b0, b1);
        zeros += b0 == 0;
    }
    EXPECT_GT(zeros, 0);
    EXPECT_LT(zeros, 500);
}

TEST(Measure, QubitRangeChecked) {
    Rng rng(1);
    StateVector s(2);
    EXPECT_THROW(measure(s, 2, rng), std::out_of_range);
}

TEST(Measure, SeededTranscriptIsDeterministic) {
    Rng source(99);
    const auto program = testing::random_program(4, 15, source);
    auto with_measure = program;
    for (std::size_t q = 0; q < 4; ++q) {
        with_measure.append(make_gate(GateKind::kMeasure, {q}));
    }
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Rng a(seed);
        Rng b(seed);
        EXPECT_EQ(execute(with_measure, a).measurements, execute(with_measure, b).measurements);
    }
}

TEST(PrepZ, ResetsQubit) {
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = random_state(3, rng);
        prep_z(s, 1, rng);
        for (std::uint64_t i = 0; i < 8; ++i) {
            if (i & 2) {
                EXPECT_EQ(s.amplitude(i), Amplitude(0.0));
            }
        }
        EXPECT_NEAR(s.norm_squared(), 1.0, kTolerance);
    }
}

TEST(Sample, GroundState) {
    Rng rng(1);
    const auto h = sample(StateVector(2), 100, rng);
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h.at("00"), 100u);
}

TEST(Sample, BellState) {
    Rng rng(8);
    StateVector s(2);
    apply_gate(s, make_gate(GateKind::kH, {0}));
    apply_gate(s, make_gate(GateKind::kCNOT, {0, 1}));
    const auto before = copy_of(s);
    const auto h = sample(s, 1000, rng);
    EXPECT_EQ(max_deviation(s.amplitudes(), before.amplitudes()), 0.0);
    ASSERT_EQ(h.size(), 2u);
    EXPECT_NEAR(static_cast<double>(h.at("00")), 500.0, 50.0);
    EXPECT_NEAR(static_cast<double>(h.at("11")), 500.0, 50.0);
}

TEST(Sample, UniformOverFour) {
    Rng rng(15);
    StateVector s(2);
    apply_gate(s, make_gate(GateKind::kH, {0}));
    apply_gate(s, make_gate(GateKind::kH, {1}));
    const auto h = sample(s, 4000, rng);
    ASSERT_EQ(h.size(), 4u);
    for (const auto& [bits, count] : h) {
        EXPECT_NEAR(static_cast<double>(count), 1000.0, 100.0) << bits;
    }
}

TEST(Bitstring, QubitZeroIsRightmost) {
    EXPECT_EQ(to_bitstring(1, 2), "01");
    EXPECT_EQ(to_bitstring(6, 3), "110");
    EXPECT_EQ(from_bitstring("110"), 6u);
    EXPECT_THROW(from_bitstring("1a"), std::invalid_argument);
}

TEST(Depolarizing, ZeroProbabilityMatchesIdealGate) {
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const Gate g = testing::random_gate(3, rng);
        auto noisy = random_state(3, rng);
        auto ideal = copy_of(noisy);
        const auto events = apply_depolarizing(noisy, g, {0.0, 0}, rng);
        apply_gate(ideal, g);
        EXPECT_TRUE(events.empty());
        EXPECT_EQ(max_deviation(noisy.amplitudes(), ideal.amplitudes()), 0.0);
    }
}

TEST(Depolarizing, CertainXErrorUndoesX) {
    // Search seeds until the single drawn Pauli is X; then X.X = I.
    bool found = false;
    for (std::uint64_t seed = 0; seed < 64 && !found; ++seed) {
        Rng rng(seed);
        StateVector s(1);
        const auto events = apply_depolarizing(s, make_gate(GateKind::kX, {0}), {1.0, seed}, rng);
        ASSERT_EQ(events.size(), 1u);
        if (events[0].pauli == GateKind::kX) {
            found = true;
            EXPECT_EQ(s.amplitude(0), Amplitude(1.0));
        }
    }
    EXPECT_TRUE(found);
}

TEST(Depolarizing, CertainNoiseHitsEveryOperand) {
    Rng rng(3);
    StateVector s(3);
    const auto events = apply_depolarizing(s, make_gate(GateKind::kToffoli, {2, 0, 1}), {1.0, 0}, rng);
    ASSERT_EQ(events.size(), 3u);
    EXPECT_EQ(events[0].qubit, 2u);
    EXPECT_EQ(events[1].qubit, 0u);
    EXPECT_EQ(events[2].qubit, 1u);
}

TEST(Depolarizing, NoiseLowersMeanFidelity) {
    Rng source(31);
    const auto program = testing::random_program(3, 10, source);
    const auto ideal = simulate(program);
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng rng(seed);
        ExecutionOptions opts;
        opts.noise = NoiseConfig{0.01, seed};
        const auto result = execute(program, rng, opts);
        total += fidelity(ideal.amplitudes(), result.state.amplitudes());
    }
    const double mean = total / 1000.0;
    EXPECT_LT(mean, 1.0);
    EXPECT_GT(mean, 0.5);
}

TEST(Execute, MatchesDenseOracle) {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const auto program = testing::random_program(n, 1 + trial % 20, rng);
        const auto engine = simulate(program);
        const auto dense = oracle::dense_simulate(program);
        EXPECT_LE(max_deviation(engine.amplitudes(), dense), kTolerance);
    }
}

TEST(Execute, SimulateRejectsMeasurement) {
    auto program = make_program(1, {make_gate(GateKind::kH, {0}), make_gate(GateKind::kMeasure, {0})});
    EXPECT_THROW(simulate(program), std::invalid_argument);
}

TEST(Execute, TerminalMeasurementDetection) {
    const auto h = make_gate(GateKind::kH, {0});
    const auto m = make_gate(GateKind::kMeasure, {0});
    EXPECT_TRUE(has_only_terminal_measurements(make_program(1, {h, m, m})));
    EXPECT_FALSE(has_only_terminal_measurements(make_program(1, {m, h})));
    EXPECT_FALSE(has_only_terminal_measurements(make_program(1, {make_gate(GateKind::kPrepZ, {0}), h})));
}

}  // namespace
}  // namespace qacc
