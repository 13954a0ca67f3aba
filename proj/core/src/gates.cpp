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

#include "qacc/gates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <numbers>
#include <stdexcept>

namespace qacc {

namespace {

using Index = std::uint64_t;

inline Amplitude mul(Amplitude c, Amplitude a) {
    return {c.real() * a.real() - c.imag() * a.imag(), c.real() * a.imag() + c.imag() * a.real()};
}

// i * a
inline Amplitude times_i(Amplitude a) { return {-a.imag(), a.real()}; }

inline bool is_zero(Amplitude a) { return a.real() == 0.0 && a.imag() == 0.0; }

/**
 * Drives one gate application: visits every input basis state (or only the
 * non-zero ones when skipping), lets `map` accumulate its images into the
 * output buffer, then clears the input and toggles parity.
 *
 * Contributions are always accumulated with +=. The output starts at +0 and
 * adding a signed zero never changes a value, so skipping is bit-neutral.
 */
template <class Map>
void apply_mapping(StateVector& state, bool zero_skip, Map&& map) {
    auto in = state.live_mut();
    auto out = state.scratch_mut();
    const Index dim = in.size();
    if (zero_skip) {
        // All-zero blocks of 16 amplitudes are passed over with one test.
        constexpr Index kBlock = 16;
        for (Index base = 0; base < dim; base += kBlock) {
            const Index end = std::min(dim, base + kBlock);
            if (end - base == kBlock) {
                std::uint64_t words[2 * kBlock];
                std::memcpy(words, &in[base], sizeof words);
                std::uint64_t bits = 0;
                for (std::uint64_t w : words) {
                    bits |= w << 1;  // drop the sign so -0.0 counts as zero
                }
                if (bits == 0) {
                    continue;
                }
            }
            for (Index i = base; i < end; ++i) {
                const Amplitude a = in[i];
                if (is_zero(a)) {
                    continue;
                }
                in[i] = Amplitude{};
                map(i, a, out);
            }
        }
    } else {
        for (Index i = 0; i < dim; ++i) {
            map(i, in[i], out);
        }
        std::fill(in.begin(), in.end(), Amplitude{});
    }
    state.swap_buffers();
}

}  // namespace

void apply_gate(StateVector& state, const Gate& gate, const ApplyOptions& options) {
    validate_gate(gate, state.num_qubits());
    const bool skip = options.zero_skip;
    const Index m0 = Index{1} << gate.qubits[0];

    switch (gate.kind) {
        case GateKind::kX:
            apply_mapping(state, skip, [m0](Index i, Amplitude a, auto out) { out[i ^ m0] += a; });
            break;
        case GateKind::kY:
            // |0> -> i|1>, |1> -> -i|0>
            apply_mapping(state, skip, [m0](Index i, Amplitude a, auto out) {
                out[i ^ m0] += (i & m0) ? -times_i(a) : times_i(a);
            });
            break;
        case GateKind::kZ:
            apply_mapping(state, skip,
                          [m0](Index i, Amplitude a, auto out) { out[i] += (i & m0) ? -a : a; });
            break;
        case GateKind::kH: {
            const double s = 1.0 / std::numbers::sqrt2;
            apply_mapping(state, skip, [m0, s](Index i, Amplitude a, auto out) {
                const Amplitude scaled = a * s;
                out[i & ~m0] += scaled;
                out[i | m0] += (i & m0) ? -scaled : scaled;
            });
            break;
        }
        case GateKind::kRX: {
            const double c = std::cos(*gate.angle / 2.0);
            const double s = std::sin(*gate.angle / 2.0);
            // |b> -> cos|b> - i sin|~b>
            apply_mapping(state, skip, [m0, c, s](Index i, Amplitude a, auto out) {
                out[i] += a * c;
                out[i ^ m0] += -times_i(a * s);
            });
            break;
        }
        case GateKind::kRY: {
            const double c = std::cos(*gate.angle / 2.0);
            const double s = std::sin(*gate.angle / 2.0);
            // |0> -> cos|0> + sin|1>, |1> -> -sin|0> + cos|1>
            apply_mapping(state, skip, [m0, c, s](Index i, Amplitude a, auto out) {
                out[i] += a * c;
                out[i ^ m0] += (i & m0) ? -(a * s) : a * s;
            });
            break;
        }
        case GateKind::kRZ: {
            const double half = *gate.angle / 2.0;
            const Amplitude phase0{std::cos(half), -std::sin(half)};
            const Amplitude phase1{std::cos(half), std::sin(half)};
            apply_mapping(state, skip, [m0, phase0, phase1](Index i, Amplitude a, auto out) {
                out[i] += mul((i & m0) ? phase1 : phase0, a);
            });
            break;
        }
        case GateKind::kCNOT: {
            const Index mt = Index{1} << gate.qubits[1];
            apply_mapping(state, skip, [m0, mt](Index i, Amplitude a, auto out) {
                out[(i & m0) ? i ^ mt : i] += a;
            });
            break;
        }
        case GateKind::kCPhase: {
            const Index both = m0 | (Index{1} << gate.qubits[1]);
            apply_mapping(state, skip, [both](Index i, Amplitude a, auto out) {
                out[i] += (i & both) == both ? -a : a;
            });
            break;
        }
        case GateKind::kToffoli: {
            const Index controls = m0 | (Index{1} << gate.qubits[1]);
            const Index mt = Index{1} << gate.qubits[2];
            apply_mapping(state, skip, [controls, mt](Index i, Amplitude a, auto out) {
                out[(i & controls) == controls ? i ^ mt : i] += a;
            });
            break;
        }
        case GateKind::kSwap: {
            const Index m1 = Index{1} << gate.qubits[1];
            apply_mapping(state, skip, [m0, m1](Index i, Amplitude a, auto out) {
                const bool b0 = (i & m0) != 0;
                const bool b1 = (i & m1) != 0;
                out[b0 == b1 ? i : i ^ (m0 | m1)] += a;
            });
            break;
        }
        case GateKind::kPrepZ:
        case GateKind::kMeasure:
            throw std::invalid_argument(std::string(mnemonic(gate.kind)) +
                                        " is not a unitary gate");
    }
}

int measure(StateVector& state, std::size_t qubit, Rng& rng) {
    if (qubit >= state.num_qubits()) {
        throw std::out_of_range("qubit q[" + std::to_string(qubit) + "] out of range for " +
                                std::to_string(state.num_qubits()) + " qubits");
    }
    const Index mask = Index{1} << qubit;
    auto amps = state.live_mut();
    double p_one = 0.0;
    double total = 0.0;
    for (Index i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        total += p;
        if (i & mask) {
            p_one += p;
        }
    }
    if (total == 0.0) {
        throw std::logic_error("cannot measure an all-zero state");
    }
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const int bit = uniform(rng) * total < p_one ? 1 : 0;
    const double kept = bit ? p_one : total - p_one;
    const double scale = 1.0 / std::sqrt(kept);
    for (Index i = 0; i < amps.size(); ++i) {
        if (((i & mask) != 0) == (bit == 1)) {
            amps[i] *= scale;
        } else {
            amps[i] = Amplitude{};
        }
    }
    return bit;
}

void prep_z(StateVector& state, std::size_t qubit, Rng& rng, const ApplyOptions& options) {
    if (measure(state, qubit, rng) == 1) {
        apply_gate(state, make_gate(GateKind::kX, {qubit}), options);
    }
}

std::string to_bitstring(std::uint64_t index, std::size_t num_qubits) {
    std::string bits(num_qubits, '0');
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if ((index >> q) & 1U) {
            bits[num_qubits - 1 - q] = '1';
        }
    }
    return bits;
}

std::uint64_t from_bitstring(const std::string& bits) {
    if (bits.empty() || bits.size() > 64) {
        throw std::invalid_argument("bitstring must have 1..64 characters");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may only contain 0 and 1: " + bits);
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return index;
}

Histogram sample(const StateVector& state, std::size_t shots, Rng& rng) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be >= 1");
    }
    const auto amps = state.live();
    std::vector<double> cumulative(amps.size());
    double running = 0.0;
    Index last_nonzero = 0;
    for (Index i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        running += p;
        cumulative[i] = running;
        if (p > 0.0) {
            last_nonzero = i;
        }
    }
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<std::uint64_t> counts(amps.size(), 0);
    for (std::size_t shot = 0; shot < shots; ++shot) {
        const double r = uniform(rng) * running;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
        const Index index = it == cumulative.end() ? last_nonzero : static_cast<Index>(it - cumulative.begin());
        ++counts[index];
    }
    Histogram histogram;
    for (Index i = 0; i < counts.size(); ++i) {
        if (counts[i] != 0) {
            histogram.emplace(to_bitstring(i, state.num_qubits()), counts[i]);
        }
    }
    return histogram;
}

std::vector<NoiseEvent> apply_depolarizing(StateVector& state, const Gate& gate,
                                           const NoiseConfig& config, Rng& rng,
                                           const ApplyOptions& options) {
    if (!(config.probability >= 0.0 && config.probability <= 1.0)) {
        throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
    }
    apply_gate(state, gate, options);
    std::vector<NoiseEvent> events;
    if (config.probability == 0.0) {
        return events;
    }
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, 2);
    constexpr GateKind kPaulis[] = {GateKind::kX, GateKind::kY, GateKind::kZ};
    for (std::size_t q : gate.qubits) {
        if (uniform(rng) < config.probability) {
            const GateKind pauli = kPaulis[pick(rng)];
            apply_gate(state, make_gate(pauli, {q}), options);
            events.push_back({q, pauli});
        }
    }
    return events;
}

}  // namespace qacc
