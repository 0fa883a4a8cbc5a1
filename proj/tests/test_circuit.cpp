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

#include <map>

#include <gtest/gtest.h>

#include "qic/circuit.hpp"
#include "qic/error.hpp"

namespace {

using namespace qic;

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::IoError;
}

}  // namespace

TEST(Gate, ArityIsChecked) {
    EXPECT_EQ(kind_of([] { Gate(GateKind::CX, {0}); }), ErrorKind::ArityMismatch);
    EXPECT_EQ(kind_of([] { Gate(GateKind::H, {0, 1}); }), ErrorKind::ArityMismatch);
    EXPECT_EQ(kind_of([] { Gate(GateKind::CCX, {0, 1, 1}); }), ErrorKind::DuplicateQubit);
}

TEST(Gate, InversesPairUp) {
    EXPECT_EQ(Gate(GateKind::T, {0}).inverse(), Gate(GateKind::TDG, {0}));
    EXPECT_EQ(Gate(GateKind::SDG, {2}).inverse(), Gate(GateKind::S, {2}));
    EXPECT_EQ(Gate(GateKind::H, {1}).inverse(), Gate(GateKind::H, {1}));
    EXPECT_EQ(Gate(GateKind::RZ, {0}, 0.25).inverse(), Gate(GateKind::RZ, {0}, -0.25));
}

TEST(Circuit, RejectsOutOfRangeQubits) {
    EXPECT_EQ(kind_of([] { Circuit("c", 1, 1, {Gate(GateKind::X, {2})}); }), ErrorKind::QubitOutOfRange);
    EXPECT_EQ(kind_of([] { Circuit("c", 0, 1, {}); }), ErrorKind::InvalidArgument);
}

TEST(Circuit, DaggerReversesAndInverts) {
    Circuit c("c", 2, 0, {Gate(GateKind::H, {0}), Gate(GateKind::T, {1}), Gate(GateKind::CX, {0, 1})});
    Circuit d = dagger(c);
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d.gates()[0], Gate(GateKind::CX, {0, 1}));
    EXPECT_EQ(d.gates()[1], Gate(GateKind::TDG, {1}));
    EXPECT_EQ(d.gates()[2], Gate(GateKind::H, {0}));
    EXPECT_EQ(dagger(d).gates(), c.gates());
}

TEST(Circuit, RemapMovesQubits) {
    Circuit c("c", 1, 1, {Gate(GateKind::CX, {0, 1})});
    Circuit r = remap_qubits(c, {{0, 2}, {1, 0}}, 2, 1);
    EXPECT_EQ(r.gates()[0], Gate(GateKind::CX, {2, 0}));
    EXPECT_EQ(r.n_inputs(), 2u);
    EXPECT_EQ(r.n_ancillas(), 1u);
}

TEST(Circuit, RemapRejectsCollisionsAndGaps) {
    Circuit c("c", 1, 1, {Gate(GateKind::CX, {0, 1})});
    EXPECT_EQ(kind_of([&] { remap_qubits(c, {{0, 1}, {1, 1}}, 2, 0); }), ErrorKind::NonInjectiveMapping);
    EXPECT_EQ(kind_of([&] { remap_qubits(c, {{0, 0}}, 2, 0); }), ErrorKind::QubitOutOfRange);
    EXPECT_EQ(kind_of([&] { remap_qubits(c, {{0, 0}, {1, 5}}, 2, 0); }), ErrorKind::QubitOutOfRange);
}

TEST(Circuit, ConcatenateAppendsGates) {
    Circuit a("a", 1, 0, {Gate(GateKind::H, {0})});
    Circuit b("b", 1, 0, {Gate(GateKind::T, {0})});
    Circuit ab = concatenate(a, b);
    ASSERT_EQ(ab.size(), 2u);
    EXPECT_EQ(ab.gates()[1], Gate(GateKind::T, {0}));
}

TEST(GateKinds, NamesRoundTrip) {
    for (GateKind k : kAllGateKinds) EXPECT_EQ(kind_from_name(kind_name(k)), k);
    EXPECT_EQ(kind_from_name("I1"), GateKind::I1);
    EXPECT_FALSE(kind_from_name("FOO").has_value());
}
