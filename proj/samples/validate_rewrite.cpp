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

// Translation validation of a toy optimizer pass.
//
// The pass cancels adjacent gate/inverse pairs and, with --buggy, also drops
// every T gate. Each rewrite is checked against its input with exact
// arithmetic, so a miscompilation is reported together with a state on
// which the two circuits differ.
//
//   validate_rewrite FILE [--buggy]

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "qic/qic.hpp"

namespace {

qic::Circuit peephole(const qic::Circuit& c, bool buggy) {
    std::vector<qic::Gate> out;
    for (const qic::Gate& g : c.gates()) {
        if (buggy && g.kind() == qic::GateKind::T) continue;
        if (!out.empty() && out.back().inverse() == g) {
            out.pop_back();
            continue;
        }
        out.push_back(g);
    }
    return qic::Circuit(c.name() + "_opt", c.n_inputs(), c.n_ancillas(), std::move(out));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s FILE [--buggy]\n", argv[0]);
        return 2;
    }
    const bool buggy = argc > 2 && std::strcmp(argv[2], "--buggy") == 0;
    try {
        const qic::Circuit before = qic::load_circuit(argv[1]);
        const qic::Circuit after = peephole(before, buggy);
        std::printf("%zu gates -> %zu gates\n", before.size(), after.size());

        const auto verdict = qic::check_equivalence<qic::RingElement>(after, before, qic::Tolerance(0.0));
        if (verdict.is_equivalent()) {
            std::printf("rewrite verified\n");
            return 0;
        }
        std::printf("rewrite changed the circuit; fidelity %.6f on witness\n", verdict.fidelity());
        const auto w = verdict.witness().to_complex();
        for (std::size_t i = 0; i < w.dim(); ++i) {
            if (std::abs(w[i]) > 0) std::printf("  [%zu] %+.6f%+.6fi\n", i, w[i].real(), w[i].imag());
        }
        return 1;
    } catch (const qic::Error& e) {
        std::fprintf(stderr, "%s: %s\n", std::string(qic::to_string(e.kind())).c_str(), e.detail().c_str());
        return 2;
    }
}
