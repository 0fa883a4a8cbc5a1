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

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "qic/format.hpp"
#include "test_support.hpp"

namespace {

using namespace qic;

Error parse_error(const std::string& text) {
    try {
        parse_circuit(text);
    } catch (const Error& e) {
        return e;
    }
    ADD_FAILURE() << "parsed without error:\n" << text;
    return Error(ErrorKind::IoError, "");
}

}  // namespace

TEST(Format, ParsesCommentsAndAngles) {
    const Circuit c = parse_circuit(
        "# leading comment\n"
        "circuit demo\n"
        "\n"
        "inputs 2   # two inputs\n"
        "ancillas 1\n"
        "gate H 0\n"
        "gate RZ(0.5) 1\n"
        "gate PHASE (-1.25) 2\n"
        "gate CCX 0 1 2\n"
        "end\n");
    EXPECT_EQ(c.name(), "demo");
    EXPECT_EQ(c.n_inputs(), 2u);
    EXPECT_EQ(c.n_ancillas(), 1u);
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c.gates()[1], Gate(GateKind::RZ, {1}, 0.5));
    EXPECT_EQ(c.gates()[2], Gate(GateKind::PHASE, {2}, -1.25));
}

TEST(Format, UnknownGateNamesTheLine) {
    const Error e = parse_error("circuit c\ninputs 1\nancillas 0\ngate FOO 0\nend\n");
    EXPECT_EQ(e.kind(), ErrorKind::UnknownGate);
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 6u);
}

TEST(Format, EmptyFileIsMissingHeader) {
    EXPECT_EQ(parse_error("").kind(), ErrorKind::MissingHeader);
    EXPECT_EQ(parse_error("# only a comment\n").kind(), ErrorKind::MissingHeader);
    EXPECT_EQ(parse_error("inputs 1\n").kind(), ErrorKind::MissingHeader);
}

TEST(Format, StructuralErrors) {
    EXPECT_EQ(parse_error("circuit c\ninputs 0\nancillas 0\nend\n").kind(), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("circuit c\ninputs 1\nancillas 0\ngate H 0\n").kind(), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("circuit c\ninputs 1\nancillas 0\nend\ngate H 0\n").kind(), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("circuit c\ninputs 1\nancillas 0\ngate RZ 0\nend\n").kind(), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("circuit c\ninputs 1\nancillas 0\ngate H(1) 0\nend\n").kind(), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("circuit c\ninputs x\nancillas 0\nend\n").kind(), ErrorKind::SyntaxError);
}

TEST(Format, QubitErrorsCarryPositions) {
    Error e = parse_error("circuit c\ninputs 1\nancillas 1\ngate X 2\nend\n");
    EXPECT_EQ(e.kind(), ErrorKind::QubitOutOfRange);
    EXPECT_EQ(e.line(), 4u);
    e = parse_error("circuit c\ninputs 2\nancillas 0\ngate CX 0\nend\n");
    EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
    EXPECT_EQ(e.line(), 4u);
    e = parse_error("circuit c\ninputs 2\nancillas 0\ngate CX 1 1\nend\n");
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateQubit);
}

TEST(Format, LayoutCommentsSurviveParsing) {
    const Circuit c("z", 2, 1, {Gate(GateKind::X, {0})});
    const RegisterLayout layout({{"in", 0, 1}, {"in'", 1, 1}, {"a", 2, 1}});
    const std::string text = serialize_circuit(c, layout);
    EXPECT_NE(text.find("# register in' 1 1\n"), std::string::npos);
    EXPECT_EQ(parse_circuit(text), c);
}

TEST(Format, CorpusFilesParse) {
    for (const auto& name : testutil::corpus_names()) {
        const Circuit c = testutil::corpus(name);
        EXPECT_EQ(c.name(), name);
    }
    EXPECT_EQ(testutil::corpus("rz").gates()[0], Gate(GateKind::RZ, {0}, 1.5));
}

TEST(Format, MissingFileIsIoError) {
    try {
        load_circuit("/nonexistent/file.qcir");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IoError);
    }
}

// Every gate kind, including parameterized ones with arbitrary doubles.
TEST(Format, RoundTripRandomCircuits) {
    std::mt19937_64 rng(2026);
    std::vector<GateKind> kinds(kAllGateKinds.begin(), kAllGateKinds.end());
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const std::size_t m = rng() % 3;
        std::vector<Gate> gates;
        const std::size_t depth = rng() % 12;
        for (std::size_t i = 0; i < depth; ++i) {
            Gate g = testutil::random_gate(rng, kinds, n + m);
            if (is_parameterized(g.kind())) g = Gate(g.kind(), g.qubits(), angle(rng));
            gates.push_back(g);
        }
        const Circuit c("rt" + std::to_string(trial), n, m, std::move(gates));
        const std::string text = serialize_circuit(c);
        const Circuit back = parse_circuit(text);
        ASSERT_EQ(back, c) << text;
        ASSERT_EQ(serialize_circuit(back), text);
    }
}
