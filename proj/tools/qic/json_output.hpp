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

// JSON encodings of library results, shared by every qic subcommand.
// The shapes are described by schemas/verdict.json.

#pragma once

#include <string>

#include <json.hpp>

#include "qic/qic.hpp"

namespace qic::cli {

using nlohmann::json;

inline json amplitudes_json(const StateVector<Complex>& s) {
    json out = json::array();
    for (const Complex& a : s.amplitudes()) out.push_back({a.real(), a.imag()});
    return out;
}

inline json layout_json(const RegisterLayout& layout) {
    json out = json::array();
    for (const auto& r : layout.ranges()) out.push_back({{"name", r.name}, {"start", r.start}, {"size", r.size}});
    return out;
}

inline json circuit_summary_json(const Circuit& c) {
    return {{"name", c.name()}, {"inputs", c.n_inputs()}, {"ancillas", c.n_ancillas()}, {"gates", c.size()}};
}

inline json error_json(const Error& e) {
    json err{{"kind", to_string(e.kind())}, {"message", e.detail()}};
    err["line"] = e.line() ? json(e.line()) : json(nullptr);
    err["column"] = e.column() ? json(e.column()) : json(nullptr);
    return {{"error", err}};
}

inline json verifier_report_json(const VerifierReport& r) {
    json out{{"command", "verify"},
             {"acceptance_probability", r.acceptance_probability},
             {"n_inputs", r.n_inputs}};
    if (r.mode == VerifierReport::Mode::Exact) {
        out["mode"] = "exact";
        out["distribution"] = r.distribution;
    } else {
        out["mode"] = "sampled";
        out["shots"] = r.shots;
        out["seed"] = r.seed;
        out["rng"] = r.rng;
        out["accepted"] = r.accepted;
        out["outcome_counts"] = r.outcome_counts;
    }
    return out;
}

}  // namespace qic::cli
