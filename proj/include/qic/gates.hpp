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

#include <cmath>
#include <string>

#include "qic/amplitude.hpp"
#include "qic/circuit.hpp"
#include "qic/matrix.hpp"

namespace qic {

namespace detail {

/// exp(i*pi*p/4) in the backend.
template <Amplitude T>
T omega_entry(int p) {
    if constexpr (is_exact_v<T>) {
        return RingElement::omega_pow(p);
    } else {
        constexpr double h = M_SQRT1_2;
        switch (((p % 8) + 8) % 8) {
            case 0: return {1.0, 0.0};
            case 1: return {h, h};
            case 2: return {0.0, 1.0};
            case 3: return {-h, h};
            case 4: return {-1.0, 0.0};
            case 5: return {-h, -h};
            case 6: return {0.0, -1.0};
            default: return {h, -h};
        }
    }
}

template <Amplitude T>
DenseMatrix<T> diag2(const T& d0, const T& d1) {
    DenseMatrix<T> m(2, 2);
    m(0, 0) = d0;
    m(1, 1) = d1;
    return m;
}

}  // namespace detail

/// Matrix of one gate kind in its local basis; the gate's first qubit is the
/// most significant local bit. H = (1/sqrt2)[[1,1],[1,-1]], T = diag(1, e^{i pi/4}),
/// RZ(t) = diag(e^{-it/2}, e^{it/2}), PHASE(t) = diag(1, e^{it}).
template <Amplitude T>
DenseMatrix<T> gate_matrix(GateKind kind, double angle = 0.0) {
    using Tr = AmplitudeTraits<T>;
    const T one = Tr::one();
    const T zero = Tr::zero();
    switch (kind) {
        case GateKind::I1: return DenseMatrix<T>::identity(2);
        case GateKind::X: {
            DenseMatrix<T> m(2, 2);
            m(0, 1) = one;
            m(1, 0) = one;
            return m;
        }
        case GateKind::Y: {
            DenseMatrix<T> m(2, 2);
            m(0, 1) = detail::omega_entry<T>(6);
            m(1, 0) = detail::omega_entry<T>(2);
            return m;
        }
        case GateKind::Z: return detail::diag2<T>(one, detail::omega_entry<T>(4));
        case GateKind::H: {
            DenseMatrix<T> m(2, 2);
            const T h = Tr::inv_sqrt2();
            m(0, 0) = h;
            m(0, 1) = h;
            m(1, 0) = h;
            m(1, 1) = zero - h;
            return m;
        }
        case GateKind::S: return detail::diag2<T>(one, detail::omega_entry<T>(2));
        case GateKind::SDG: return detail::diag2<T>(one, detail::omega_entry<T>(6));
        case GateKind::T: return detail::diag2<T>(one, detail::omega_entry<T>(1));
        case GateKind::TDG: return detail::diag2<T>(one, detail::omega_entry<T>(7));
        case GateKind::CX: {
            auto m = DenseMatrix<T>::identity(4);
            m(2, 2) = zero;
            m(3, 3) = zero;
            m(2, 3) = one;
            m(3, 2) = one;
            return m;
        }
        case GateKind::CZ: {
            auto m = DenseMatrix<T>::identity(4);
            m(3, 3) = detail::omega_entry<T>(4);
            return m;
        }
        case GateKind::SWAP: {
            auto m = DenseMatrix<T>::identity(4);
            m(1, 1) = zero;
            m(2, 2) = zero;
            m(1, 2) = one;
            m(2, 1) = one;
            return m;
        }
        case GateKind::CCX: {
            auto m = DenseMatrix<T>::identity(8);
            m(6, 6) = zero;
            m(7, 7) = zero;
            m(6, 7) = one;
            m(7, 6) = one;
            return m;
        }
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::PHASE: break;
    }

    if constexpr (is_exact_v<T>) {
        throw Error(ErrorKind::UnsupportedOnBackend,
                    std::string(kind_name(kind)) + " is not supported on the exact backend");
    } else {
        if (!std::isfinite(angle)) throw Error(ErrorKind::InvalidArgument, "angle must be finite");
        const double c = std::cos(angle / 2.0);
        const double s = std::sin(angle / 2.0);
        DenseMatrix<Complex> m(2, 2);
        switch (kind) {
            case GateKind::RX:
                m(0, 0) = {c, 0.0};
                m(0, 1) = {0.0, -s};
                m(1, 0) = {0.0, -s};
                m(1, 1) = {c, 0.0};
                break;
            case GateKind::RY:
                m(0, 0) = {c, 0.0};
                m(0, 1) = {-s, 0.0};
                m(1, 0) = {s, 0.0};
                m(1, 1) = {c, 0.0};
                break;
            case GateKind::RZ:
                m(0, 0) = std::polar(1.0, -angle / 2.0);
                m(1, 1) = std::polar(1.0, angle / 2.0);
                break;
            default:
                m(0, 0) = {1.0, 0.0};
                m(1, 1) = std::polar(1.0, angle);
                break;
        }
        return m;
    }
}

template <Amplitude T>
DenseMatrix<T> gate_matrix(const Gate& g) {
    return gate_matrix<T>(g.kind(), g.angle());
}

}  // namespace qic
