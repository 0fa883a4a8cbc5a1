// Copyright 2026 The qic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Non-identity verifier protocol for a circuit U on n inputs, m ancillas.
//
// Register order (3n + 2m qubits):
//   [0, n)          reference copy of x
//   [n, 2n)         first U input, receives |x>
//   [2n, 3n)        second U input, receives |x_+> = H^n |x>
//   [3n, 3n+m)      ancillas of the first U
//   [3n+m, 3n+2m)   ancillas of the second U
//
// The prepared input is 2^{-n/2} sum_x |x>|x>|x_+>, U is applied to both
// copies, the first 2n qubits are measured in the computational basis and the
// third register in the |x_+> basis. The verifier accepts on any outcome
// other than (x, x, x). It accepts with probability 0 iff U implements a
// multiple of the identity.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qic/acceptance.hpp"
#include "qic/amplitude.hpp"
#include "qic/circuit.hpp"
#include "qic/simulator.hpp"

namespace qic {

inline constexpr const char* kSamplerRng = "mt19937_64/inverse-cdf-53bit";

struct VerifierReport {
    enum class Mode { Exact, Sampled };

    double acceptance_probability = 0.0;
    Mode mode = Mode::Exact;
    std::size_t n_inputs = 0;
    std::size_t shots = 0;        // sampled mode
    std::uint64_t seed = 0;       // sampled mode
    std::string rng;              // sampled mode
    std::size_t accepted = 0;     // sampled mode
    /// Exact mode: Pr over the 3n measured bits, indexed (x, y, z) with x most significant.
    std::vector<double> distribution;
    /// Sampled mode: bitstring over the 3n measured qubits -> count.
    std::map<std::string, std::size_t> outcome_counts;
};

/// Gate sequence preparing 2^{-n/2} sum_x |x>|x>|x_+> from |0..0> on 3n qubits.
inline Circuit verifier_input_circuit(std::size_t n) {
    std::vector<Gate> gates;
    for (std::size_t i = 0; i < n; ++i) gates.emplace_back(GateKind::H, std::vector<Qubit>{i});
    for (std::size_t i = 0; i < n; ++i) {
        gates.emplace_back(GateKind::CX, std::vector<Qubit>{i, n + i});
        gates.emplace_back(GateKind::CX, std::vector<Qubit>{i, 2 * n + i});
    }
    for (std::size_t i = 0; i < n; ++i) gates.emplace_back(GateKind::H, std::vector<Qubit>{2 * n + i});
    return Circuit("verifier_input", 3 * n, 0, std::move(gates));
}

template <Amplitude T = Complex>
StateVector<T> prepare_verifier_input(std::size_t n, const DimensionLimits& limits = {}) {
    checked_dim(3 * n, limits.max_state_dim, "verifier input");
    return apply_circuit(basis_state<T>(3 * n, 0), verifier_input_circuit(n));
}

/// Input preparation followed by U on both copies, on 3n + 2m qubits. The
/// |x_+>-basis rotation of the third register is left to the measurement.
inline Circuit verifier_protocol_circuit(const Circuit& u) {
    const std::size_t n = u.n_inputs();
    const std::size_t m = u.n_ancillas();
    std::map<Qubit, Qubit> first;
    std::map<Qubit, Qubit> second;
    for (std::size_t i = 0; i < n; ++i) {
        first[i] = n + i;
        second[i] = 2 * n + i;
    }
    for (std::size_t j = 0; j < m; ++j) {
        first[n + j] = 3 * n + j;
        second[n + j] = 3 * n + m + j;
    }
    std::vector<Gate> gates;
    auto append = [&](const Circuit& c) { gates.insert(gates.end(), c.gates().begin(), c.gates().end()); };
    const Circuit prep = verifier_input_circuit(n);
    for (const Gate& g : prep.gates()) gates.push_back(g);
    append(remap_qubits(u, first, 3 * n, 2 * m));
    append(remap_qubits(u, second, 3 * n, 2 * m));
    return Circuit("verifier_" + u.name(), 3 * n, 2 * m, std::move(gates));
}

namespace detail {

inline std::size_t diagonal_index(std::size_t x, std::size_t n) {
    return (x << (2 * n)) | (x << n) | x;
}

inline std::string bitstring(std::size_t value, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t b = 0; b < width; ++b) {
        if (value & (std::size_t{1} << (width - 1 - b))) s[b] = '1';
    }
    return s;
}

}  // namespace detail

/// Joint distribution Pr(x, y, z) of the 3n measured qubits.
template <Amplitude T = Complex>
std::vector<double> verifier_outcome_distribution(const Circuit& u, const DimensionLimits& limits = {}) {
    const std::size_t n = u.n_inputs();
    const Circuit protocol = verifier_protocol_circuit(u);
    checked_dim(protocol.num_qubits(), limits.max_state_dim, "verifier state");
    auto state = apply_circuit(basis_state<T>(protocol.num_qubits(), 0), protocol);
    std::set<Qubit> mask;
    for (std::size_t i = 0; i < n; ++i) mask.insert(2 * n + i);
    return marginal_leading(measurement_distribution(state, mask), protocol.num_qubits(), 3 * n);
}

template <Amplitude T = Complex>
VerifierReport acceptance_probability_exact(const Circuit& u, const DimensionLimits& limits = {}) {
    const std::size_t n = u.n_inputs();
    VerifierReport report;
    report.mode = VerifierReport::Mode::Exact;
    report.n_inputs = n;
    report.distribution = verifier_outcome_distribution<T>(u, limits);
    double diagonal = 0.0;
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
        diagonal += report.distribution[detail::diagonal_index(x, n)];
    }
    report.acceptance_probability = std::clamp(1.0 - diagonal, 0.0, 1.0);
    return report;
}

template <Amplitude T = Complex>
VerifierReport acceptance_probability_exact(const VerifierSpec& v, const DimensionLimits& limits = {}) {
    return acceptance_probability_exact<T>(v.circuit(), limits);
}

/// Monte Carlo run of the protocol. Deterministic in (u, shots, seed): a
/// mt19937_64 stream supplies 53-bit uniforms that are mapped through the
/// cumulative outcome distribution.
template <Amplitude T = Complex>
VerifierReport sample_verifier(const Circuit& u, std::size_t shots, std::uint64_t seed,
                               const DimensionLimits& limits = {}) {
    if (shots < 1) throw Error(ErrorKind::InvalidArgument, "shots must be at least 1");
    const std::size_t n = u.n_inputs();
    const auto dist = verifier_outcome_distribution<T>(u, limits);
    std::vector<double> cumulative(dist.size());
    double acc = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += dist[i];
        cumulative[i] = acc;
        if (dist[i] > 0.0) last_nonzero = i;
    }

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> counts(dist.size(), 0);
    for (std::size_t s = 0; s < shots; ++s) {
        const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
        std::size_t k = it == cumulative.end() ? last_nonzero
                                               : static_cast<std::size_t>(it - cumulative.begin());
        ++counts[k];
    }

    VerifierReport report;
    report.mode = VerifierReport::Mode::Sampled;
    report.n_inputs = n;
    report.shots = shots;
    report.seed = seed;
    report.rng = kSamplerRng;
    std::size_t not_accepted = 0;
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) not_accepted += counts[detail::diagonal_index(x, n)];
    report.accepted = shots - not_accepted;
    report.acceptance_probability = static_cast<double>(report.accepted) / static_cast<double>(shots);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] != 0) report.outcome_counts[detail::bitstring(k, 3 * n)] = counts[k];
    }
    return report;
}

template <Amplitude T = Complex>
VerifierReport sample_verifier(const VerifierSpec& v, std::size_t shots, std::uint64_t seed,
                               const DimensionLimits& limits = {}) {
    return sample_verifier<T>(v.circuit(), shots, seed, limits);
}

}  // namespace qic
