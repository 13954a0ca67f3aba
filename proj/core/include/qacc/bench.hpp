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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qacc/gate.hpp"

namespace qacc::bench {

/// Ordinary least squares y = slope * x + intercept.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double slope_stderr = 0.0;
    double intercept_stderr = 0.0;
};

/// Needs at least three points with distinct x values.
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

struct BenchSeries {
    std::string label;
    /// Independent variable (gate index, qubit count, gate count).
    std::vector<double> values;
    /// Only used by the per-gate suite.
    std::vector<std::string> names;
    std::vector<double> times_ns;
    /// "linear" (time vs value) or "log2-linear" (log2 time vs value).
    std::string model;
    std::optional<LinearFit> fit;
};

struct BenchResult {
    std::string suite;
    std::vector<BenchSeries> series;

    /// Header "variable,time_ns". With several series the variable column
    /// reads "label:value".
    std::string to_csv() const;
};

struct TimingConfig {
    std::size_t warmup = 1;
    std::size_t samples = 5;
    /// Each sample repeats the body until at least this much time was timed.
    double min_sample_ns = 2e7;
};

/// Median over `samples` of the mean time per call of `timed`; `reset` runs
/// between calls and is not timed.
double time_median_ns(const std::function<void()>& timed, const std::function<void()>& reset,
                      const TimingConfig& config = {});

struct TimedBody {
    std::function<void()> timed;
    std::function<void()> reset;
};

/// Like time_median_ns for several bodies at once, with calls interleaved
/// one at a time across bodies.
std::vector<double> time_medians_ns(const std::vector<TimedBody>& bodies,
                                    const TimingConfig& config = {});

/// Mean per-application time of each gate of the timing table, on 1, 2 or 3
/// qubits according to the gate's arity.
BenchResult bench_gates(std::size_t repetitions = 100000);

/// EPR/GHZ preparation (H then a CNOT chain) for n = n_min..n_max, fitted as
/// log2(time) against n. Throws std::invalid_argument if n_min > n_max and
/// CapacityError beyond the engine limit.
BenchResult bench_qubit_scaling(std::size_t n_min, std::size_t n_max, bool zero_skip,
                                const TimingConfig& config = {});

/// Both skip modes plus the per-n ratio skip_on / skip_off (third series).
BenchResult bench_zero_skip(std::size_t n_min, std::size_t n_max, const TimingConfig& config = {});

/// Circuits of g repeated gates on two qubits for X, H and CNOT, each fitted
/// linearly against g.
BenchResult bench_depth_scaling(const std::vector<std::size_t>& gate_counts,
                                const TimingConfig& config = {});

}  // namespace qacc::bench
