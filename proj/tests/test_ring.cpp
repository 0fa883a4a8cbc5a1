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

#include <cmath>
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "qic/ring.hpp"

namespace {

using qic::RingElement;
using C = std::complex<double>;

// Oracle: omega^p evaluated with the C library, independent of the ring code.
C omega(int p) { return std::polar(1.0, M_PI / 4.0 * p); }

void expect_close(C a, C b, double tol = 1e-12) {
    EXPECT_NEAR(a.real(), b.real(), tol);
    EXPECT_NEAR(a.imag(), b.imag(), tol);
}

RingElement random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> k(0, 5);
    return RingElement(coeff(rng), coeff(rng), coeff(rng), coeff(rng), static_cast<std::uint32_t>(k(rng)));
}

C evaluate(const RingElement& x) {
    C v = x.a().convert_to<double>() + x.b().convert_to<double>() * omega(1) +
          x.c().convert_to<double>() * omega(2) + x.d().convert_to<double>() * omega(3);
    return v / std::pow(std::sqrt(2.0), static_cast<double>(x.k()));
}

}  // namespace

TEST(Ring, OmegaPowersMatchPolarForm) {
    for (int p = -9; p <= 17; ++p) expect_close(RingElement::omega_pow(p).to_complex(), omega(p));
}

TEST(Ring, OmegaHasOrderEight) {
    EXPECT_EQ(RingElement::omega_pow(8), RingElement::one());
    EXPECT_EQ(RingElement::omega_pow(4), -RingElement::one());
    EXPECT_EQ(RingElement::omega_pow(1) * RingElement::omega_pow(7), RingElement::one());
}

TEST(Ring, SqrtTwoCancelsExactly) {
    EXPECT_EQ(RingElement::inv_sqrt2() * RingElement::sqrt2(), RingElement::one());
    EXPECT_EQ(RingElement::sqrt2() * RingElement::sqrt2(), RingElement(2));
    EXPECT_EQ(RingElement::inv_sqrt2() * RingElement::inv_sqrt2() + RingElement::inv_sqrt2() * RingElement::inv_sqrt2(),
              RingElement::one());
}

TEST(Ring, CanonicalFormIsUnique) {
    // 2/2 and (sqrt2)^2 / 2 both reduce to 1 with k = 0.
    EXPECT_EQ(RingElement(2, 0, 0, 0, 2), RingElement(1, 0, 0, 0, 0));
    const RingElement half_sqrt2 = RingElement::sqrt2() * RingElement(1, 0, 0, 0, 2);
    EXPECT_EQ(half_sqrt2, RingElement::inv_sqrt2());
    EXPECT_EQ(RingElement::inv_sqrt2().k(), 1u);
    EXPECT_EQ(RingElement(0, 0, 0, 0, 7), RingElement::zero());
    EXPECT_EQ(RingElement::zero().k(), 0u);
}

TEST(Ring, ArithmeticAgreesWithComplexEvaluation) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const RingElement x = random_element(rng);
        const RingElement y = random_element(rng);
        expect_close(x.to_complex(), evaluate(x));
        expect_close((x + y).to_complex(), evaluate(x) + evaluate(y), 1e-10);
        expect_close((x - y).to_complex(), evaluate(x) - evaluate(y), 1e-10);
        expect_close((x * y).to_complex(), evaluate(x) * evaluate(y), 1e-9);
        expect_close(x.conj().to_complex(), std::conj(evaluate(x)), 1e-10);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x - x, RingElement::zero());
        EXPECT_EQ(x.conj().conj(), x);
    }
}

TEST(Ring, NormIsRealAndNonNegative) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const RingElement x = random_element(rng);
        const C n = (x * x.conj()).to_complex();
        EXPECT_NEAR(n.imag(), 0.0, 1e-10);
        EXPECT_NEAR(n.real(), std::norm(evaluate(x)), 1e-9);
    }
}

TEST(Ring, LargeCoefficientsDoNotOverflow) {
    RingElement x = RingElement(1, 1, 0, 0);  // 1 + omega
    RingElement p = RingElement::one();
    for (int i = 0; i < 200; ++i) p *= x;
    // |1 + omega|^2 = 2 + sqrt2; |p| = |1 + omega|^200.
    const RingElement n = p * p.conj();
    const RingElement base = RingElement(2) + RingElement::sqrt2();
    RingElement expected = RingElement::one();
    for (int i = 0; i < 200; ++i) expected *= base;
    EXPECT_EQ(n, expected);
}
