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

// Builders for the derived circuits used by the checker:
//
//   doubling     U on (in, a) followed by U^dag on (in', a); implements U (x) U^dag
//   equivalence  doubling(uy)^dag on (in, in', a') followed by doubling(ux) on (in, in', a)
//   reduction    (X (x) U^dag) V (I (x) U) with V a zero-controlled X onto a fresh
//                "ext" qubit, controlled by the verifier's accept qubit
//
// Constructed circuits are emitted verbatim, with no gate cancellation.

#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qic/acceptance.hpp"
#include "qic/circuit.hpp"
#include "qic/layout.hpp"

namespace qic {

struct Construction {
    Circuit circuit;
    RegisterLayout layout;
};

struct ReductionConstruction {
    Circuit circuit;
    RegisterLayout layout;
    ReductionReport report;
};

namespace detail {

inline void append_gates(std::vector<Gate>& out, const Circuit& c) {
    out.insert(out.end(), c.gates().begin(), c.gates().end());
}

}  // namespace detail

/// Z_x for u on n inputs and m ancillas: 2n inputs (in, in') and m ancillas.
inline Construction build_doubling(const Circuit& u) {
    const std::size_t n = u.n_inputs();
    const std::size_t m = u.n_ancillas();
    std::map<Qubit, Qubit> forward;
    std::map<Qubit, Qubit> backward;
    for (std::size_t i = 0; i < n; ++i) {
        forward[i] = i;
        backward[i] = n + i;
    }
    for (std::size_t j = 0; j < m; ++j) {
        forward[n + j] = 2 * n + j;
        backward[n + j] = 2 * n + j;
    }
    std::vector<Gate> gates;
    gates.reserve(2 * u.size());
    detail::append_gates(gates, remap_qubits(u, forward, 2 * n, m));
    detail::append_gates(gates, remap_qubits(dagger(u), backward, 2 * n, m));
    return {Circuit("doubling_" + u.name(), 2 * n, m, std::move(gates)),
            RegisterLayout({{"in", 0, n}, {"in'", n, n}, {"a", 2 * n, m}})};
}

/// Z_{x,y}: registers in (n), in' (n), a (m_x), a' (m_y). Applies the adjoint
/// of uy's doubling first, then ux's doubling.
inline Construction build_equivalence(const Circuit& ux, const Circuit& uy) {
    if (ux.n_inputs() != uy.n_inputs()) {
        throw Error(ErrorKind::InputSizeMismatch,
                    ux.name() + " has " + std::to_string(ux.n_inputs()) + " inputs, " + uy.name() +
                        " has " + std::to_string(uy.n_inputs()));
    }
    const std::size_t n = ux.n_inputs();
    const std::size_t mx = ux.n_ancillas();
    const std::size_t my = uy.n_ancillas();
    const Circuit zx = build_doubling(ux).circuit;
    const Circuit zy_dg = dagger(build_doubling(uy).circuit);

    std::map<Qubit, Qubit> x_map;
    std::map<Qubit, Qubit> y_map;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        x_map[i] = i;
        y_map[i] = i;
    }
    for (std::size_t j = 0; j < mx; ++j) x_map[2 * n + j] = 2 * n + j;
    for (std::size_t j = 0; j < my; ++j) y_map[2 * n + j] = 2 * n + mx + j;

    std::vector<Gate> gates;
    gates.reserve(zx.size() + zy_dg.size());
    detail::append_gates(gates, remap_qubits(zy_dg, y_map, 2 * n, mx + my));
    detail::append_gates(gates, remap_qubits(zx, x_map, 2 * n, mx + my));
    return {Circuit("equiv_" + ux.name() + "_" + uy.name(), 2 * n, mx + my, std::move(gates)),
            RegisterLayout({{"in", 0, n}, {"in'", n, n}, {"a", 2 * n, mx}, {"a'", 2 * n + mx, my}})};
}

/// Reduction circuit Z on ext (qubit 0), the verifier's inputs (1..n) and its
/// ancillas (n+1..n+m). The kept register for the identity question is
/// ext + inputs, i.e. the 1+n inputs of the returned circuit.
inline Construction build_reduction_circuit(const VerifierSpec& v) {
    const Circuit& u = v.circuit();
    const std::size_t n = u.n_inputs();
    const std::size_t m = u.n_ancillas();
    std::map<Qubit, Qubit> shift;
    for (std::size_t q = 0; q < u.num_qubits(); ++q) shift[q] = q + 1;
    const Qubit accept = v.accept_qubit() + 1;

    std::vector<Gate> gates;
    gates.reserve(2 * u.size() + 4);
    detail::append_gates(gates, remap_qubits(u, shift, n + 1, m));
    // Zero-controlled X onto ext.
    gates.emplace_back(GateKind::X, std::vector<Qubit>{accept});
    gates.emplace_back(GateKind::CX, std::vector<Qubit>{accept, 0});
    gates.emplace_back(GateKind::X, std::vector<Qubit>{accept});
    detail::append_gates(gates, remap_qubits(dagger(u), shift, n + 1, m));
    gates.emplace_back(GateKind::X, std::vector<Qubit>{0});
    return {Circuit("reduction_" + u.name(), n + 1, m, std::move(gates)),
            RegisterLayout({{"ext", 0, 1}, {"inputs", 1, n}, {"ancillas", n + 1, m}})};
}

/// Reduction circuit together with the verifier's maximal acceptance
/// probability (the epsilon that decides whether Z implements the identity).
template <Amplitude T = Complex>
ReductionConstruction build_reduction(const VerifierSpec& v, const DimensionLimits& limits = {}) {
    auto built = build_reduction_circuit(v);
    return {std::move(built.circuit), std::move(built.layout),
            max_acceptance_probability<T>(v, limits)};
}

}  // namespace qic
