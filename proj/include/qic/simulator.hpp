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

#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qic/amplitude.hpp"
#include "qic/circuit.hpp"
#include "qic/gates.hpp"
#include "qic/matrix.hpp"

namespace qic {

namespace detail {

/// A gate lowered to basis-index offsets and the nonzero entries of its
/// local matrix, so repeated applications skip matrix construction.
template <Amplitude T>
struct LoweredGate {
    std::size_t mask = 0;                // union of the gate's bits in the basis index
    std::vector<std::size_t> offsets;    // local index -> basis-index offset
    std::vector<std::vector<std::pair<std::size_t, T>>> rows;  // nonzeros per output row
};

template <Amplitude T>
LoweredGate<T> lower_gate(const Gate& g, std::size_t num_qubits) {
    for (Qubit q : g.qubits()) {
        if (q >= num_qubits) {
            throw Error(ErrorKind::QubitOutOfRange,
                        "gate qubit " + std::to_string(q) + " on a " + std::to_string(num_qubits) +
                            "-qubit state");
        }
    }
    const auto m = gate_matrix<T>(g);
    const std::size_t k = g.qubits().size();
    LoweredGate<T> out;
    out.offsets.assign(std::size_t{1} << k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t bit = std::size_t{1} << (num_qubits - 1 - g.qubits()[j]);
        out.mask |= bit;
        for (std::size_t l = 0; l < out.offsets.size(); ++l) {
            if (l & (std::size_t{1} << (k - 1 - j))) out.offsets[l] |= bit;
        }
    }
    out.rows.resize(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!AmplitudeTraits<T>::is_zero(m(r, c))) out.rows[r].emplace_back(c, m(r, c));
        }
    }
    return out;
}

template <Amplitude T>
void apply_lowered(std::span<T> amps, const LoweredGate<T>& g) {
    const std::size_t local_dim = g.offsets.size();
    std::vector<T> local(local_dim);
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if (base & g.mask) continue;
        bool any = false;
        for (std::size_t l = 0; l < local_dim; ++l) {
            local[l] = amps[base | g.offsets[l]];
            any = any || !AmplitudeTraits<T>::is_zero(local[l]);
        }
        if (!any) continue;
        for (std::size_t r = 0; r < local_dim; ++r) {
            T acc = AmplitudeTraits<T>::zero();
            for (const auto& [c, v] : g.rows[r]) {
                if (!AmplitudeTraits<T>::is_zero(local[c])) acc += v * local[c];
            }
            amps[base | g.offsets[r]] = std::move(acc);
        }
    }
}

template <Amplitude T>
std::vector<LoweredGate<T>> lower_circuit(const Circuit& c) {
    std::vector<LoweredGate<T>> out;
    out.reserve(c.size());
    for (const Gate& g : c.gates()) out.push_back(lower_gate<T>(g, c.num_qubits()));
    return out;
}

}  // namespace detail

template <Amplitude T>
StateVector<T> basis_state(std::size_t num_qubits, std::size_t index) {
    if (num_qubits >= 48 || index >= (std::size_t{1} << num_qubits)) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "basis index " + std::to_string(index) + " on " + std::to_string(num_qubits) +
                        " qubits");
    }
    std::vector<T> amps(std::size_t{1} << num_qubits, AmplitudeTraits<T>::zero());
    amps[index] = AmplitudeTraits<T>::one();
    return {num_qubits, std::move(amps)};
}

template <Amplitude T>
StateVector<T> apply_gate(StateVector<T> s, const Gate& g) {
    auto lowered = detail::lower_gate<T>(g, s.num_qubits());
    detail::apply_lowered<T>(std::span<T>(s.amplitudes()), lowered);
    return s;
}

/// Applies the gates in list order.
template <Amplitude T>
StateVector<T> apply_circuit(StateVector<T> s, const Circuit& c) {
    if (s.num_qubits() != c.num_qubits()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "circuit acts on " + std::to_string(c.num_qubits()) + " qubits, state has " +
                        std::to_string(s.num_qubits()));
    }
    for (const auto& g : detail::lower_circuit<T>(c)) {
        detail::apply_lowered<T>(std::span<T>(s.amplitudes()), g);
    }
    return s;
}

/// Columns U|i>|0..0> for each basis state i of the first `kept` qubits.
/// The result has 2^q rows and 2^kept columns.
template <Amplitude T>
DenseMatrix<T> restricted_columns(const Circuit& c, std::size_t kept,
                                  const DimensionLimits& limits = {}) {
    const std::size_t q = c.num_qubits();
    if (kept > q) {
        throw Error(ErrorKind::KeptExceedsTotal,
                    "kept register of " + std::to_string(kept) + " qubits on a " +
                        std::to_string(q) + "-qubit circuit");
    }
    const std::size_t dim = checked_dim(q, limits.max_state_dim, "state");
    const std::size_t cols = checked_dim(kept, limits.max_unitary_dim, "restricted unitary");
    const auto lowered = detail::lower_circuit<T>(c);
    DenseMatrix<T> out(dim, cols);
    for (std::size_t i = 0; i < cols; ++i) {
        auto col = out.column(i);
        col[i << (q - kept)] = AmplitudeTraits<T>::one();
        for (const auto& g : lowered) detail::apply_lowered<T>(col, g);
    }
    return out;
}

template <Amplitude T>
DenseMatrix<T> restricted_columns(const Circuit& c, const DimensionLimits& limits = {}) {
    return restricted_columns<T>(c, c.n_inputs(), limits);
}

template <Amplitude T>
UnitaryMatrix<T> circuit_unitary(const Circuit& c, const DimensionLimits& limits = {}) {
    checked_dim(c.num_qubits(), limits.max_unitary_dim, "unitary");
    return restricted_columns<T>(c, c.num_qubits(), limits);
}

/// Outcome probabilities after applying H to each qubit in `hadamard_mask`.
template <Amplitude T>
std::vector<double> measurement_distribution(const StateVector<T>& s,
                                             const std::set<Qubit>& hadamard_mask = {}) {
    StateVector<T> rotated = s;
    for (Qubit q : hadamard_mask) {
        if (q >= s.num_qubits()) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "measurement qubit " + std::to_string(q) + " on a " +
                            std::to_string(s.num_qubits()) + "-qubit state");
        }
        rotated = apply_gate(std::move(rotated), Gate(GateKind::H, {q}));
    }
    std::vector<double> probs;
    probs.reserve(rotated.dim());
    for (const T& a : rotated.amplitudes()) {
        probs.push_back(std::norm(AmplitudeTraits<T>::to_complex(a)));
    }
    return probs;
}

/// Sums a distribution over all qubits outside the leading `kept` qubits.
inline std::vector<double> marginal_leading(const std::vector<double>& probs, std::size_t num_qubits,
                                            std::size_t kept) {
    std::vector<double> out(std::size_t{1} << kept, 0.0);
    const std::size_t shift = num_qubits - kept;
    for (std::size_t i = 0; i < probs.size(); ++i) out[i >> shift] += probs[i];
    return out;
}

}  // namespace qic
