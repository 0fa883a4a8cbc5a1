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

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qic {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element of Z[w]/sqrt(2)^k with w = exp(i*pi/4), stored as
/// (a + b*w + c*w^2 + d*w^3) / sqrt(2)^k.
///
/// Every Clifford+T gate entry lies in this ring, so states and unitaries of
/// Clifford+T circuits can be computed with no rounding at all. Values are
/// kept canonical: either k == 0, or the numerator is not divisible by
/// sqrt(2), which happens exactly when a+c and b+d are both even. Canonical
/// forms are unique, so equality is plain componentwise comparison.
class RingElement {
public:
    RingElement() = default;

    explicit RingElement(BigInt a, BigInt b = 0, BigInt c = 0, BigInt d = 0, std::uint32_t k = 0)
        : coeffs_{std::move(a), std::move(b), std::move(c), std::move(d)}, k_(k) {
        canonicalize();
    }

    static RingElement zero() { return RingElement(); }
    static RingElement one() { return RingElement(1); }
    /// w^p for any integer p (w^8 = 1).
    static RingElement omega_pow(int p) {
        int r = ((p % 8) + 8) % 8;
        BigInt sign = r >= 4 ? -1 : 1;
        std::array<BigInt, 4> c{0, 0, 0, 0};
        c[r % 4] = sign;
        return RingElement(c[0], c[1], c[2], c[3]);
    }
    /// 1/sqrt(2)
    static RingElement inv_sqrt2() { return RingElement(1, 0, 0, 0, 1); }
    /// sqrt(2) = w - w^3
    static RingElement sqrt2() { return RingElement(0, 1, 0, -1); }

    const BigInt& a() const noexcept { return coeffs_[0]; }
    const BigInt& b() const noexcept { return coeffs_[1]; }
    const BigInt& c() const noexcept { return coeffs_[2]; }
    const BigInt& d() const noexcept { return coeffs_[3]; }
    std::uint32_t k() const noexcept { return k_; }

    bool is_zero() const noexcept {
        return coeffs_[0].is_zero() && coeffs_[1].is_zero() && coeffs_[2].is_zero() &&
               coeffs_[3].is_zero();
    }

    friend bool operator==(const RingElement& x, const RingElement& y) {
        return x.k_ == y.k_ && x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const RingElement& x, const RingElement& y) { return !(x == y); }

    RingElement operator-() const {
        RingElement r = *this;
        for (auto& v : r.coeffs_) v = -v;
        return r;
    }

    friend RingElement operator+(const RingElement& x, const RingElement& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        RingElement r;
        if (x.k_ >= y.k_) {
            auto ys = scaled_numerator(y.coeffs_, x.k_ - y.k_);
            for (int i = 0; i < 4; ++i) r.coeffs_[i] = x.coeffs_[i] + ys[i];
            r.k_ = x.k_;
        } else {
            auto xs = scaled_numerator(x.coeffs_, y.k_ - x.k_);
            for (int i = 0; i < 4; ++i) r.coeffs_[i] = xs[i] + y.coeffs_[i];
            r.k_ = y.k_;
        }
        r.canonicalize();
        return r;
    }

    friend RingElement operator-(const RingElement& x, const RingElement& y) { return x + (-y); }

    friend RingElement operator*(const RingElement& x, const RingElement& y) {
        if (x.is_zero() || y.is_zero()) return RingElement();
        RingElement r;
        // Negacyclic convolution: w^4 = -1.
        for (int i = 0; i < 4; ++i) {
            if (x.coeffs_[i].is_zero()) continue;
            for (int j = 0; j < 4; ++j) {
                if (y.coeffs_[j].is_zero()) continue;
                int p = i + j;
                if (p < 4) {
                    r.coeffs_[p] += x.coeffs_[i] * y.coeffs_[j];
                } else {
                    r.coeffs_[p - 4] -= x.coeffs_[i] * y.coeffs_[j];
                }
            }
        }
        r.k_ = x.k_ + y.k_;
        r.canonicalize();
        return r;
    }

    RingElement& operator+=(const RingElement& y) { return *this = *this + y; }
    RingElement& operator-=(const RingElement& y) { return *this = *this - y; }
    RingElement& operator*=(const RingElement& y) { return *this = *this * y; }

    /// Complex conjugate: w -> w^-1 = -w^3.
    RingElement conj() const {
        return RingElement(coeffs_[0], -coeffs_[3], -coeffs_[2], -coeffs_[1], k_);
    }

    /// Double-precision value with w = (1+i)/sqrt(2).
    std::complex<double> to_complex() const {
        constexpr double h = 0.70710678118654752440;
        const double a = coeffs_[0].convert_to<double>();
        const double b = coeffs_[1].convert_to<double>();
        const double c = coeffs_[2].convert_to<double>();
        const double d = coeffs_[3].convert_to<double>();
        // w = h(1+i), w^2 = i, w^3 = h(-1+i)
        double re = a + h * (b - d);
        double im = c + h * (b + d);
        double scale = std::ldexp(1.0, -static_cast<int>(k_ / 2));
        if (k_ % 2 == 1) scale *= h;
        return {re * scale, im * scale};
    }

    std::string to_string() const {
        return "(" + a().str() + "," + b().str() + "," + c().str() + "," + d().str() +
               ";k=" + std::to_string(k_) + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RingElement& x) {
        return os << x.to_string();
    }

private:
    // Numerator multiplied by sqrt(2)^times, using x*sqrt(2) = (b-d, a+c, b+d, c-a).
    static std::array<BigInt, 4> scaled_numerator(const std::array<BigInt, 4>& c,
                                                  std::uint32_t times) {
        std::array<BigInt, 4> v = c;
        if (times >= 2) {
            BigInt f = BigInt(1) << (times / 2);
            for (auto& e : v) e *= f;
        }
        if (times % 2 == 1) v = times_sqrt2(v);
        return v;
    }

    static std::array<BigInt, 4> times_sqrt2(const std::array<BigInt, 4>& c) {
        return {c[1] - c[3], c[0] + c[2], c[1] + c[3], c[2] - c[0]};
    }

    void canonicalize() {
        if (is_zero()) {
            k_ = 0;
            return;
        }
        while (k_ > 0) {
            // Whole factors of 2 first, then at most one sqrt(2).
            if (k_ >= 2 && all_even()) {
                for (auto& e : coeffs_) e /= 2;
                k_ -= 2;
                continue;
            }
            if (is_odd(coeffs_[0] + coeffs_[2]) || is_odd(coeffs_[1] + coeffs_[3])) {
                break;
            }
            auto v = times_sqrt2(coeffs_);
            for (auto& e : v) e /= 2;
            coeffs_ = std::move(v);
            k_ -= 1;
        }
    }

    static bool is_odd(const BigInt& v) { return BigInt(v % 2) != 0; }

    bool all_even() const {
        for (const auto& e : coeffs_) {
            if (is_odd(e)) return false;
        }
        return true;
    }

    std::array<BigInt, 4> coeffs_{0, 0, 0, 0};
    std::uint32_t k_ = 0;
};

inline RingElement ring_add(const RingElement& x, const RingElement& y) { return x + y; }
inline RingElement ring_mul(const RingElement& x, const RingElement& y) { return x * y; }
inline RingElement ring_conj(const RingElement& x) { return x.conj(); }
inline std::complex<double> ring_to_approx(const RingElement& x) { return x.to_complex(); }

}  // namespace qic
