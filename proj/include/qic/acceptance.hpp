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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qic/amplitude.hpp"
#include "qic/circuit.hpp"
#include "qic/matrix.hpp"
#include "qic/simulator.hpp"

namespace qic {

/// A verifier circuit together with the input qubit whose |1> outcome means
/// "accept".
class VerifierSpec {
public:
    explicit VerifierSpec(Circuit circuit, std::size_t accept_qubit = 0)
        : circuit_(std::move(circuit)), accept_qubit_(accept_qubit) {
        if (accept_qubit_ >= circuit_.n_inputs()) {
            throw Error(ErrorKind::InvalidArgument,
                        "accept qubit " + std::to_string(accept_qubit_) +
                            " is not an input qubit of " + circuit_.name());
        }
    }

    const Circuit& circuit() const noexcept { return circuit_; }
    std::size_t accept_qubit() const noexcept { return accept_qubit_; }

private:
    Circuit circuit_;
    std::size_t accept_qubit_;
};

/// Largest acceptance probability over all proofs, with a pure proof that
/// attains it.
struct ReductionReport {
    double max_acceptance = 0.0;
    StateVector<Complex> witness_state;
};

namespace detail {

/// A = P1 U (I (x) |0..0>) as a dense 2^(n+m) x 2^n matrix.
template <Amplitude T>
DenseMatrix<T> accepted_block(const VerifierSpec& v, const DimensionLimits& limits) {
    const Circuit& c = v.circuit();
    auto cols = restricted_columns<T>(c, limits);
    const std::size_t bit = std::size_t{1} << (c.num_qubits() - 1 - v.accept_qubit());
    for (std::size_t j = 0; j < cols.cols(); ++j) {
        auto col = cols.column(j);
        for (std::size_t r = 0; r < col.size(); ++r) {
            if (!(r & bit)) col[r] = AmplitudeTraits<T>::zero();
        }
    }
    return cols;
}

inline Eigen::MatrixXcd to_eigen(const DenseMatrix<Complex>& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
        }
    }
    return out;
}

/// Rotates a vector so its first entry with magnitude above `floor` is real
/// and positive.
inline void fix_phase(std::vector<Complex>& v, double floor = 1e-8) {
    for (const Complex& x : v) {
        if (std::abs(x) > floor) {
            const Complex rot = std::conj(x) / std::abs(x);
            for (Complex& y : v) y *= rot;
            return;
        }
    }
}

}  // namespace detail

/// Acceptance probability Tr[U(|psi><psi| (x) |0><0|)U^dag P1] of one proof.
template <Amplitude T = Complex>
double acceptance_of(const VerifierSpec& v, const StateVector<Complex>& proof,
                     const DimensionLimits& limits = {}) {
    const auto a = detail::accepted_block<T>(v, limits).to_complex();
    if (proof.dim() != a.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "proof dimension does not match the input register");
    }
    double total = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < a.cols(); ++c) acc += a(r, c) * proof[c];
        total += std::norm(acc);
    }
    return total;
}

/// max over proofs of the acceptance probability = largest eigenvalue of A^dag A.
/// A pure proof always attains the maximum, so the eigenvector is returned as
/// the witness.
template <Amplitude T = Complex>
ReductionReport max_acceptance_probability(const VerifierSpec& v,
                                           const DimensionLimits& limits = {}) {
    const auto a = detail::accepted_block<T>(v, limits);
    const std::size_t n = v.circuit().n_inputs();
    bool all_zero = true;
    for (std::size_t c = 0; c < a.cols() && all_zero; ++c) {
        for (const T& x : a.column(c)) {
            if (!AmplitudeTraits<T>::is_zero(x)) {
                all_zero = false;
                break;
            }
        }
    }
    if (all_zero) {
        // Perfect soundness, certified without rounding on the exact backend.
        return {0.0, basis_state<Complex>(n, 0)};
    }
    const Eigen::MatrixXcd ea = detail::to_eigen(a.to_complex());
    const Eigen::MatrixXcd gram = ea.adjoint() * ea;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::InvalidArgument, "eigendecomposition did not converge");
    }
    const Eigen::Index top = gram.rows() - 1;
    double lambda = std::clamp(solver.eigenvalues()(top), 0.0, 1.0);
    std::vector<Complex> w(static_cast<std::size_t>(gram.rows()));
    for (Eigen::Index i = 0; i < gram.rows(); ++i) w[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, top);
    detail::fix_phase(w);
    return {lambda, StateVector<Complex>(n, std::move(w))};
}

}  // namespace qic
