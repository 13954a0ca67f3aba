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

#include "qacc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qacc/errors.hpp"
#include "qacc/execute.hpp"
#include "qacc/gates.hpp"

namespace qacc::bench {

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 3) {
        throw std::invalid_argument("linear fit needs at least three (x, y) pairs");
    }
    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("linear fit needs distinct x values");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ssr = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.slope * x[i] + fit.intercept);
        ssr += r * r;
    }
    fit.r_squared = syy == 0.0 ? 1.0 : 1.0 - ssr / syy;
    const double s2 = ssr / (n - 2.0);
    fit.slope_stderr = std::sqrt(s2 / sxx);
    fit.intercept_stderr = std::sqrt(s2 * (1.0 / n + mx * mx / sxx));
    return fit;
}

std::string BenchResult::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "variable,time_ns\n";
    const bool labelled = series.size() > 1;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.times_ns.size(); ++i) {
            if (labelled) {
                out << s.label << ':';
            }
            if (!s.names.empty()) {
                out << s.names[i];
            } else {
                out << s.values[i];
            }
            out << ',' << s.times_ns[i] << '\n';
        }
    }
    return out.str();
}

namespace {

double median_of(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    return samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

double call_ns(const TimedBody& body) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    body.timed();
    const auto t1 = clock::now();
    if (body.reset) {
        body.reset();
    }
    return std::chrono::duration<double, std::nano>(t1 - t0).count();
}

}  // namespace

std::vector<double> time_medians_ns(const std::vector<TimedBody>& bodies,
                                    const TimingConfig& config) {
    std::vector<std::vector<double>> samples(bodies.size());
    std::vector<double> elapsed(bodies.size());
    std::vector<std::size_t> calls(bodies.size());
    for (std::size_t s = 0; s < config.warmup + config.samples; ++s) {
        std::fill(elapsed.begin(), elapsed.end(), 0.0);
        std::fill(calls.begin(), calls.end(), 0);
        // One call per unfinished body per pass until every body has its budget.
        bool pending = true;
        while (pending) {
            pending = false;
            for (std::size_t b = 0; b < bodies.size(); ++b) {
                if (calls[b] > 0 && elapsed[b] >= config.min_sample_ns) {
                    continue;
                }
                elapsed[b] += call_ns(bodies[b]);
                ++calls[b];
                pending = pending || elapsed[b] < config.min_sample_ns;
            }
        }
        if (s >= config.warmup) {
            for (std::size_t b = 0; b < bodies.size(); ++b) {
                samples[b].push_back(elapsed[b] / static_cast<double>(calls[b]));
            }
        }
    }
    std::vector<double> medians;
    medians.reserve(bodies.size());
    for (auto& per_body : samples) {
        medians.push_back(per_body.empty() ? 0.0 : median_of(std::move(per_body)));
    }
    return medians;
}

double time_median_ns(const std::function<void()>& timed, const std::function<void()>& reset,
                      const TimingConfig& config) {
    return time_medians_ns({TimedBody{timed, reset}}, config).front();
}

namespace {

std::vector<Gate> epr_circuit(std::size_t n) {
    std::vector<Gate> gates{make_gate(GateKind::kH, {0})};
    for (std::size_t q = 0; q + 1 < n; ++q) {
        gates.push_back(make_gate(GateKind::kCNOT, {q, q + 1}));
    }
    return gates;
}

void attach_fit(BenchSeries& series, bool log_time) {
    if (series.values.size() < 3) {
        return;
    }
    std::vector<double> y = series.times_ns;
    if (log_time) {
        for (double& t : y) {
            t = std::log2(t);
        }
    }
    series.model = log_time ? "log2-linear" : "linear";
    series.fit = fit_linear(series.values, y);
}

}  // namespace

BenchResult bench_gates(std::size_t repetitions) {
    if (repetitions == 0) {
        throw std::invalid_argument("repetitions must be >= 1");
    }
    const double angle = std::numbers::pi / 3.0;
    const std::vector<Gate> table = {
        make_gate(GateKind::kX, {0}),
        make_gate(GateKind::kY, {0}),
        make_gate(GateKind::kZ, {0}),
        make_gate(GateKind::kH, {0}),
        make_gate(GateKind::kRX, {0}, angle),
        make_gate(GateKind::kRY, {0}, angle),
        make_gate(GateKind::kRZ, {0}, angle),
        make_gate(GateKind::kCNOT, {0, 1}),
        make_gate(GateKind::kCPhase, {0, 1}),
        make_gate(GateKind::kToffoli, {0, 1, 2}),
    };
    BenchResult result;
    result.suite = "gates";
    BenchSeries series;
    series.label = "gates";
    series.model = "none";
    TimingConfig config;
    config.min_sample_ns = 0.0;  // one batch of `repetitions` per sample
    for (std::size_t k = 0; k < table.size(); ++k) {
        const Gate& gate = table[k];
        StateVector state(gate.qubits.size());
        // Spread amplitude over every basis state so no work is skipped.
        for (std::size_t q = 0; q < gate.qubits.size(); ++q) {
            apply_gate(state, make_gate(GateKind::kH, {q}));
        }
        const double batch = time_median_ns(
            [&] {
                for (std::size_t r = 0; r < repetitions; ++r) {
                    apply_gate(state, gate);
                }
            },
            {}, config);
        series.values.push_back(static_cast<double>(k));
        series.names.push_back(std::string(mnemonic(gate.kind)));
        series.times_ns.push_back(batch / static_cast<double>(repetitions));
    }
    result.series.push_back(std::move(series));
    return result;
}

namespace {

void check_qubit_range(std::size_t n_min, std::size_t n_max) {
    if (n_min > n_max) {
        throw std::invalid_argument("n_min must not exceed n_max");
    }
    if (n_min < 2) {
        throw std::invalid_argument("EPR circuits need at least two qubits");
    }
    if (n_max > kMaxQubits) {
        throw CapacityError("n_max exceeds the engine limit of " + std::to_string(kMaxQubits));
    }
}

// One series per skip mode, all points sampled round robin.
std::vector<BenchSeries> epr_series(std::size_t n_min, std::size_t n_max,
                                    const std::vector<bool>& modes, const TimingConfig& config) {
    struct Point {
        std::vector<Gate> circuit;
        std::vector<Gate> inverse;
        StateVector state;
        ApplyOptions options;
    };
    std::vector<Point> points;
    for (bool skip : modes) {
        for (std::size_t n = n_min; n <= n_max; ++n) {
            auto circuit = epr_circuit(n);
            std::vector<Gate> inverse(circuit.rbegin(), circuit.rend());
            points.push_back({std::move(circuit), std::move(inverse), StateVector(n), {skip}});
        }
    }
    std::vector<TimedBody> bodies;
    for (Point& p : points) {
        bodies.push_back({[&p] { apply_all(p.state, p.circuit, p.options); },
                          [&p] { apply_all(p.state, p.inverse, p.options); }});
    }
    const std::vector<double> times = time_medians_ns(bodies, config);
    std::vector<BenchSeries> out;
    std::size_t next = 0;
    for (bool skip : modes) {
        BenchSeries series;
        series.label = skip ? "skip_on" : "skip_off";
        for (std::size_t n = n_min; n <= n_max; ++n) {
            series.values.push_back(static_cast<double>(n));
            series.times_ns.push_back(times[next++]);
        }
        attach_fit(series, true);
        out.push_back(std::move(series));
    }
    return out;
}

}  // namespace

BenchResult bench_qubit_scaling(std::size_t n_min, std::size_t n_max, bool zero_skip,
                                const TimingConfig& config) {
    check_qubit_range(n_min, n_max);
    BenchResult result;
    result.suite = "qubits";
    result.series = epr_series(n_min, n_max, {zero_skip}, config);
    return result;
}

BenchResult bench_zero_skip(std::size_t n_min, std::size_t n_max, const TimingConfig& config) {
    check_qubit_range(n_min, n_max);
    BenchResult result;
    result.suite = "qubits";
    result.series = epr_series(n_min, n_max, {true, false}, config);
    BenchSeries ratio;
    ratio.label = "ratio";
    ratio.model = "none";
    const BenchSeries& on = result.series[0];
    const BenchSeries& off = result.series[1];
    for (std::size_t i = 0; i < on.values.size(); ++i) {
        ratio.values.push_back(on.values[i]);
        ratio.times_ns.push_back(on.times_ns[i] / off.times_ns[i]);
    }
    result.series.push_back(std::move(ratio));
    return result;
}

BenchResult bench_depth_scaling(const std::vector<std::size_t>& gate_counts,
                                const TimingConfig& config) {
    BenchResult result;
    result.suite = "depth";
    const std::vector<Gate> kinds = {
        make_gate(GateKind::kX, {0}),
        make_gate(GateKind::kH, {0}),
        make_gate(GateKind::kCNOT, {0, 1}),
    };
    std::vector<std::vector<Gate>> circuits;
    std::vector<StateVector> states;
    for (const Gate& gate : kinds) {
        for (std::size_t g : gate_counts) {
            circuits.emplace_back(g, gate);
            states.emplace_back(2);
        }
    }
    std::vector<TimedBody> bodies;
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        bodies.push_back({[&, i] { apply_all(states[i], circuits[i]); }, {}});
    }
    const std::vector<double> times = time_medians_ns(bodies, config);
    std::size_t next = 0;
    for (const Gate& gate : kinds) {
        BenchSeries series;
        series.label = std::string(mnemonic(gate.kind));
        for (std::size_t g : gate_counts) {
            series.values.push_back(static_cast<double>(g));
            series.times_ns.push_back(times[next++]);
        }
        attach_fit(series, false);
        result.series.push_back(std::move(series));
    }
    return result;
}

}  // namespace qacc::bench
