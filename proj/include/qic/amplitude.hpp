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
#include <complex>
#include <concepts>
#include <string>

#include "qic/error.hpp"
#include "qic/ring.hpp"

namespace qic {

using Complex = std::complex<double>;

/// Comparison threshold for the floating-point backend. The exact backend
/// ignores it.
class Tolerance {
public:
    static constexpr double kDefault = 1e-9;

    constexpr Tolerance() = default;
    explicit Tolerance(double eps) : eps_(eps) {
        if (!(eps >= 0.0) || !(eps < 1.0)) {
            throw Error(ErrorKind::InvalidArgument,
                        "tolerance must satisfy 0 <= eps < 1, got " + std::to_string(eps));
        }
    }

    constexpr double eps() const noexcept { return eps_; }

private:
    double eps_ = kDefault;
};

/// Per-backend arithmetic hooks used by the simulator and checker templates.
template <class T>
struct AmplitudeTraits;

template <>
struct AmplitudeTraits<Complex> {
    static constexpr bool exact = false;
    static constexpr const char* name = "float";

    static Complex zero() { return {0.0, 0.0}; }
    static Complex one() { return {1.0, 0.0}; }
    static bool is_zero(const Complex& x) { return x == Complex{}; }
    static Complex conj(const Complex& x) { return std::conj(x); }
    static Complex to_complex(const Complex& x) { return x; }
    static Complex inv_sqrt2() { return {M_SQRT1_2, 0.0}; }
    /// |x|^2 as a backend value (real).
    static Complex abs2(const Complex& x) { return {std::norm(x), 0.0}; }
    static bool near(const Complex& x, const Complex& y, Tolerance tol) {
        return std::abs(x - y) <= tol.eps();
    }
};

template <>
struct AmplitudeTraits<RingElement> {
    static constexpr bool exact = true;
    static constexpr const char* name = "exact";

    static RingElement zero() { return RingElement::zero(); }
    static RingElement one() { return RingElement::one(); }
    static bool is_zero(const RingElement& x) { return x.is_zero(); }
    static RingElement conj(const RingElement& x) { return x.conj(); }
    static Complex to_complex(const RingElement& x) { return x.to_complex(); }
    static RingElement inv_sqrt2() { return RingElement::inv_sqrt2(); }
    static RingElement abs2(const RingElement& x) { return x * x.conj(); }
    static bool near(const RingElement& x, const RingElement& y, Tolerance) { return x == y; }
};

template <class T>
concept Amplitude = requires { AmplitudeTraits<T>::exact; };

template <Amplitude T>
inline constexpr bool is_exact_v = AmplitudeTraits<T>::exact;

}  // namespace qic
