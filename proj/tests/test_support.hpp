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

// Shared helpers for the test binaries: corpus access and random circuits.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qic/qic.hpp"

namespace qic::testutil {

inline std::string corpus_path(const std::string& name) {
    return std::string(QIC_CORPUS_DIR) + "/" + name + ".qcir";
}

inline Circuit corpus(const std::string& name) { return load_circuit(corpus_path(name)); }

/// Every fixture shipped in corpus/ that uses no parameterized gates.
inline const std::vector<std::string>& corpus_names() {
    static const std::vector<std::string> names{
        "empty",         "hh",          "t8",           "ssdg",         "cx2",
        "xzxz",          "x",           "t",            "cz",           "swap",
        "cx_into_ancilla", "x_on_ancilla", "cx_uncompute", "swap_verifier", "identity_verifier",
        "h_verifier",    "half_verifier", "hht",        "s",            "tt"};
    return names;
}

inline const std::vector<GateKind>& clifford_t_kinds() {
    static const std::vector<GateKind> kinds{GateKind::H,   GateKind::S,  GateKind::SDG, GateKind::T,
                                             GateKind::TDG, GateKind::X,  GateKind::Y,   GateKind::Z,
                                             GateKind::CX,  GateKind::CZ, GateKind::SWAP};
    return kinds;
}

inline Gate random_gate(std::mt19937_64& rng, const std::vector<GateKind>& kinds, std::size_t q) {
    while (true) {
        const GateKind kind = kinds[rng() % kinds.size()];
        const std::size_t k = arity(kind);
        if (k > q) continue;
        std::vector<Qubit> qubits;
        while (qubits.size() < k) {
            const Qubit c = rng() % q;
            if (std::find(qubits.begin(), qubits.end(), c) == qubits.end()) qubits.push_back(c);
        }
        return Gate(kind, std::move(qubits));
    }
}

/// Gates drawn uniformly from `kinds` on uniformly chosen distinct qubits.
inline Circuit random_circuit(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t depth,
                              const std::vector<GateKind>& kinds = clifford_t_kinds(),
                              const std::string& name = "rand") {
    std::vector<Gate> gates;
    for (std::size_t i = 0; i < depth; ++i) gates.push_back(random_gate(rng, kinds, n + m));
    return Circuit(name, n, m, std::move(gates));
}

/// Local matrix of a Clifford+T gate written out by hand, first qubit most
/// significant. Used as an oracle for the library's own gate tables.
inline Eigen::MatrixXcd reference_gate(GateKind kind) {
    using C = std::complex<double>;
    const double h = 1.0 / std::sqrt(2.0);
    const C i{0.0, 1.0};
    const C w = std::exp(i * M_PI / 4.0);
    Eigen::MatrixXcd m;
    switch (kind) {
        case GateKind::I1: m = Eigen::MatrixXcd::Identity(2, 2); break;
        case GateKind::X: m.resize(2, 2); m << 0, 1, 1, 0; break;
        case GateKind::Y: m.resize(2, 2); m << 0, -i, i, 0; break;
        case GateKind::Z: m.resize(2, 2); m << 1, 0, 0, -1; break;
        case GateKind::H: m.resize(2, 2); m << h, h, h, -h; break;
        case GateKind::S: m.resize(2, 2); m << 1, 0, 0, i; break;
        case GateKind::SDG: m.resize(2, 2); m << 1, 0, 0, -i; break;
        case GateKind::T: m.resize(2, 2); m << 1, 0, 0, w; break;
        case GateKind::TDG: m.resize(2, 2); m << 1, 0, 0, std::conj(w); break;
        case GateKind::CX:
            m.resize(4, 4);
            m << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
            break;
        case GateKind::CZ:
            m = Eigen::MatrixXcd::Identity(4, 4);
            m(3, 3) = -1;
            break;
        case GateKind::SWAP:
            m.resize(4, 4);
            m << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
            break;
        case GateKind::CCX:
            m = Eigen::MatrixXcd::Identity(8, 8);
            m(6, 6) = m(7, 7) = 0;
            m(6, 7) = m(7, 6) = 1;
            break;
        default: throw std::logic_error("no reference matrix for parameterized gates");
    }
    return m;
}

/// Full 2^q x 2^q unitary of a circuit by embedding each local matrix
/// entry-wise, then multiplying in gate order. Qubit 0 is the most
/// significant bit.
inline Eigen::MatrixXcd reference_unitary(const Circuit& c) {
    const std::size_t q = c.num_qubits();
    const std::size_t dim = std::size_t{1} << q;
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(dim, dim);
    for (const Gate& g : c.gates()) {
        const Eigen::MatrixXcd local = reference_gate(g.kind());
        const auto& qs = g.qubits();
        auto local_index = [&](std::size_t basis) {
            std::size_t idx = 0;
            for (Qubit t : qs) idx = (idx << 1) | ((basis >> (q - 1 - t)) & 1);
            return idx;
        };
        std::size_t other_mask = dim - 1;
        for (Qubit t : qs) other_mask &= ~(std::size_t{1} << (q - 1 - t));
        Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t col = 0; col < dim; ++col) {
                if ((r & other_mask) != (col & other_mask)) continue;
                full(r, col) = local(local_index(r), local_index(col));
            }
        }
        total = full * total;
    }
    return total;
}

}  // namespace qic::testutil
