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

// qic: exact identity and equivalence checks for quantum circuits with ancillas.
//
// Exit codes: 0 = identity / equivalent / success, 1 = non-identity /
// inequivalent, 2 = any error (parse, dimension cap, bad arguments).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "json_output.hpp"
#include "qic/qic.hpp"

namespace {

using namespace qic;
using qic::cli::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct Config {
    std::string backend = "float";
    double tol = Tolerance::kDefault;
    bool json = false;
    std::optional<std::size_t> dim_cap;
    std::uint64_t seed = 0;
    std::size_t shots = 10000;

    bool exact() const { return backend == "exact"; }

    // Exact comparisons ignore the tolerance.
    Tolerance tolerance() const { return exact() ? Tolerance(0.0) : Tolerance(tol); }

    DimensionLimits limits() const {
        return dim_cap ? DimensionLimits::with_state_cap(*dim_cap) : DimensionLimits::from_env();
    }
};

/// Runs `fn.template operator()<T>()` with T chosen by the backend flag.
template <class Fn>
int dispatch(const Config& cfg, Fn&& fn) {
    if (cfg.exact()) return fn.template operator()<RingElement>();
    return fn.template operator()<Complex>();
}

void emit(const Config& cfg, const json& j, const std::string& text) {
    if (cfg.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string bits(std::size_t value, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t b = 0; b < width; ++b) {
        if (value & (std::size_t{1} << (width - 1 - b))) s[b] = '1';
    }
    return s;
}

std::string state_text(const StateVector<Complex>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (std::abs(s[i]) < 1e-15) continue;
        out += "  |" + bits(i, s.num_qubits()) + "> " + format_double(s[i].real()) +
               (s[i].imag() < 0 ? "-" : "+") + format_double(std::abs(s[i].imag())) + "i\n";
    }
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorKind::IoError, "failed writing " + path);
}

int cmd_validate(const Config& cfg, const std::string& path) {
    const Circuit c = load_circuit(path);
    const std::string text = serialize_circuit(c);
    json j{{"command", "validate"}, {"valid", true}, {"circuit", cli::circuit_summary_json(c)}, {"text", text}};
    emit(cfg, j, text);
    return kExitOk;
}

template <class T>
json verdict_json(const char* command, const Circuit& c, bool positive, const char* yes, const char* no,
                  const StateVector<T>& witness, double fidelity, const Config& cfg) {
    json j{{"command", command}, {"backend", cfg.backend}, {"circuit", c.name()}};
    if (positive) {
        j["verdict"] = yes;
    } else {
        j["verdict"] = no;
        j["witness"] = cli::amplitudes_json(witness.to_complex());
        j["fidelity"] = fidelity;
    }
    return j;
}

template <class T>
std::string verdict_text(bool positive, const char* yes, const char* no, const StateVector<T>& witness,
                         double fidelity) {
    if (positive) return std::string(yes) + "\n";
    return std::string(no) + "\nfidelity " + format_double(fidelity) + "\nwitness\n" +
           state_text(witness.to_complex());
}

int cmd_check_identity(const Config& cfg, const std::string& path) {
    const Circuit c = load_circuit(path);
    return dispatch(cfg, [&]<class T>() {
        const auto v = check_identity<T>(c, cfg.tolerance(), cfg.limits());
        emit(cfg, verdict_json<T>("check-identity", c, v.is_identity(), "identity", "non-identity", v.witness(),
                                  v.fidelity(), cfg),
             verdict_text<T>(v.is_identity(), "identity", "non-identity", v.witness(), v.fidelity()));
        return v.is_identity() ? kExitOk : kExitNegative;
    });
}

int cmd_check_equiv(const Config& cfg, const std::string& path_a, const std::optional<std::string>& path_b,
                    bool against_identity) {
    const Circuit a = load_circuit(path_a);
    if (against_identity && path_b) {
        throw Error(ErrorKind::InvalidArgument, "--against-identity takes a single circuit");
    }
    if (!against_identity && !path_b) {
        throw Error(ErrorKind::InvalidArgument, "check-equiv needs two circuits or --against-identity");
    }
    const Circuit b = against_identity ? Circuit("identity", a.n_inputs(), 0) : load_circuit(*path_b);
    return dispatch(cfg, [&]<class T>() {
        const auto v = check_equivalence<T>(a, b, cfg.tolerance(), cfg.limits());
        json j = verdict_json<T>("check-equiv", a, v.is_equivalent(), "equivalent", "inequivalent", v.witness(),
                                 v.fidelity(), cfg);
        j["against"] = b.name();
        emit(cfg, j, verdict_text<T>(v.is_equivalent(), "equivalent", "inequivalent", v.witness(), v.fidelity()));
        return v.is_equivalent() ? kExitOk : kExitNegative;
    });
}

int cmd_build(const Config& cfg, const std::string& kind, const std::vector<std::string>& paths,
              const std::string& out_path, std::size_t accept_qubit) {
    const std::size_t want = kind == "equiv" ? 2 : 1;
    if (paths.size() != want) {
        throw Error(ErrorKind::InvalidArgument,
                    "build " + kind + " takes " + std::to_string(want) + " circuit file(s)");
    }
    std::vector<Circuit> inputs;
    for (const auto& p : paths) inputs.push_back(load_circuit(p));

    json j{{"command", "build"}, {"construction", kind}};
    std::optional<Construction> built;
    std::string extra;
    if (kind == "z") {
        built = build_doubling(inputs[0]);
    } else if (kind == "equiv") {
        built = build_equivalence(inputs[0], inputs[1]);
    } else {
        const VerifierSpec v(inputs[0], accept_qubit);
        dispatch(cfg, [&]<class T>() {
            auto r = build_reduction<T>(v, cfg.limits());
            built = Construction{std::move(r.circuit), std::move(r.layout)};
            j["max_acceptance"] = r.report.max_acceptance;
            j["witness"] = cli::amplitudes_json(r.report.witness_state);
            extra = "max_acceptance " + format_double(r.report.max_acceptance) + "\n";
            return kExitOk;
        });
    }
    const std::string text = serialize_circuit(built->circuit, built->layout);
    j["layout"] = cli::layout_json(built->layout);
    j["circuit"] = cli::circuit_summary_json(built->circuit);
    if (out_path.empty() || out_path == "-") {
        j["output"] = nullptr;
        j["text"] = text;
        emit(cfg, j, text);
    } else {
        write_text(out_path, text);
        j["output"] = out_path;
        emit(cfg, j, "wrote " + out_path + "\n" + extra);
    }
    return kExitOk;
}

int cmd_verify(const Config& cfg, const std::string& path, bool exact_mode) {
    const Circuit c = load_circuit(path);
    return dispatch(cfg, [&]<class T>() {
        const VerifierReport r = exact_mode ? acceptance_probability_exact<T>(c, cfg.limits())
                                            : sample_verifier<T>(c, cfg.shots, cfg.seed, cfg.limits());
        std::string text = "acceptance_probability " + format_double(r.acceptance_probability) + "\n";
        if (!exact_mode) {
            text += "accepted " + std::to_string(r.accepted) + " of " + std::to_string(r.shots) + " (seed " +
                    std::to_string(r.seed) + ", " + r.rng + ")\n";
        }
        emit(cfg, cli::verifier_report_json(r), text);
        return kExitOk;
    });
}

int cmd_max_accept(const Config& cfg, const std::string& path, std::size_t accept_qubit) {
    const VerifierSpec v(load_circuit(path), accept_qubit);
    return dispatch(cfg, [&]<class T>() {
        const auto r = max_acceptance_probability<T>(v, cfg.limits());
        json j{{"command", "max-accept"},
               {"accept_qubit", accept_qubit},
               {"max_acceptance", r.max_acceptance},
               {"witness", cli::amplitudes_json(r.witness_state)}};
        emit(cfg, j, "max_acceptance " + format_double(r.max_acceptance) + "\nwitness\n" + state_text(r.witness_state));
        return kExitOk;
    });
}

std::vector<GateKind> parse_gate_list(const std::string& list) {
    std::vector<GateKind> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto k = kind_from_name(item);
        if (!k) throw Error(ErrorKind::UnknownGate, "unknown gate `" + item + "` in --gates");
        out.push_back(*k);
    }
    if (out.empty()) throw Error(ErrorKind::InvalidArgument, "--gates is empty");
    return out;
}

int cmd_minimize(const Config& cfg, const std::string& path, const std::string& gates, MinimizeOptions options) {
    const Circuit c = load_circuit(path);
    const auto gate_set = parse_gate_list(gates);
    return dispatch(cfg, [&]<class T>() {
        const auto r = minimize<T>(c, gate_set, options, cfg.tolerance(), cfg.limits());
        const std::string text = serialize_circuit(r.minimal_circuit);
        json j{{"command", "minimize"},
               {"minimal_length", r.minimal_length},
               {"minimal_circuit", text},
               {"nodes_explored", r.nodes_explored},
               {"nodes_per_length", r.nodes_per_length},
               {"exhausted", r.exhausted}};
        emit(cfg, j,
             "minimal_length " + std::to_string(r.minimal_length) + "\nnodes_explored " +
                 std::to_string(r.nodes_explored) + "\n" + text);
        return kExitOk;
    });
}

void report_error(const Config& cfg, const Error& e) {
    if (cfg.json) {
        std::cout << cli::error_json(e).dump(2) << "\n";
        return;
    }
    std::cerr << "qic: " << to_string(e.kind()) << ": " << e.detail();
    if (e.line()) {
        std::cerr << " (line " << e.line();
        if (e.column()) std::cerr << ", column " << e.column();
        std::cerr << ")";
    }
    std::cerr << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"Exact identity and equivalence checks for quantum circuits with ancillas"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qic 0.1.0");

    app.add_option("--backend", cfg.backend, "Amplitude arithmetic")
        ->check(CLI::IsMember({"float", "exact"}))
        ->capture_default_str();
    app.add_option("--tol", cfg.tol, "Comparison tolerance (float backend)")->capture_default_str();
    app.add_flag("--json", cfg.json, "Machine-readable output");
    app.add_option("--dim-cap", cfg.dim_cap, "Largest state dimension (overrides QIC_DIM_CAP)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Sampler seed")->capture_default_str();
    app.add_option("--shots", cfg.shots, "Sampler shots")->capture_default_str();

    std::string file_a;
    std::optional<std::string> file_b;
    std::string out_path;
    std::size_t accept_qubit = 0;

    auto* validate = app.add_subcommand("validate", "Parse a circuit file and print its canonical form");
    validate->add_option("file", file_a)->required();

    auto* check_id = app.add_subcommand("check-identity", "Exit 0 iff the circuit implements c*I");
    check_id->add_option("file", file_a)->required();
    bool assert_identity = false;
    check_id->add_flag("--assert-identity", assert_identity, "Same contract, spelled out for CI: exit 0 iff identity");

    auto* check_eq = app.add_subcommand("check-equiv", "Exit 0 iff both circuits implement the same unitary");
    check_eq->add_option("file_a", file_a)->required();
    check_eq->add_option("file_b", file_b);
    bool against_identity = false;
    check_eq->add_flag("--against-identity", against_identity, "Compare the single circuit with the identity");

    auto* build = app.add_subcommand("build", "Emit a constructed circuit (z, equiv or reduce)");
    std::string build_kind;
    std::vector<std::string> build_files;
    build->add_option("kind", build_kind)->required()->check(CLI::IsMember({"z", "equiv", "reduce"}));
    build->add_option("files", build_files)->required();
    build->add_option("-o,--output", out_path, "Output file (default stdout)");
    build->add_option("--accept-qubit", accept_qubit, "Accept qubit for reduce")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the non-identity verifier protocol");
    verify->add_option("file", file_a)->required();
    bool exact_mode = false;
    verify->add_flag("--exact", exact_mode, "Exact acceptance probability instead of sampling");

    auto* max_accept = app.add_subcommand("max-accept", "Largest acceptance probability over all proofs");
    max_accept->add_option("file", file_a)->required();
    max_accept->add_option("--accept-qubit", accept_qubit)->capture_default_str();

    auto* minimize_cmd = app.add_subcommand("minimize", "Shortest equivalent circuit over a gate set");
    minimize_cmd->add_option("file", file_a)->required();
    std::string gate_list = "H,S,T,CX";
    MinimizeOptions min_opts;
    minimize_cmd->add_option("--gates", gate_list, "Comma-separated gate kinds")->capture_default_str();
    minimize_cmd->add_option("--max-len", min_opts.max_len)->capture_default_str();
    minimize_cmd->add_option("--node-cap", min_opts.node_cap)->capture_default_str();

    // Global flags are accepted after the subcommand as well.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        if (cfg.json) {
            report_error(cfg, Error(ErrorKind::InvalidArgument, e.what()));
        } else {
            app.exit(e);
        }
        return kExitError;
    }

    try {
        if (validate->parsed()) return cmd_validate(cfg, file_a);
        if (check_id->parsed()) return cmd_check_identity(cfg, file_a);
        if (check_eq->parsed()) return cmd_check_equiv(cfg, file_a, file_b, against_identity);
        if (build->parsed()) return cmd_build(cfg, build_kind, build_files, out_path, accept_qubit);
        if (verify->parsed()) return cmd_verify(cfg, file_a, exact_mode);
        if (max_accept->parsed()) return cmd_max_accept(cfg, file_a, accept_qubit);
        if (minimize_cmd->parsed()) return cmd_minimize(cfg, file_a, gate_list, min_opts);
    } catch (const Error& e) {
        report_error(cfg, e);
        return kExitError;
    } catch (const std::exception& e) {
        report_error(cfg, Error(ErrorKind::InvalidArgument, e.what()));
        return kExitError;
    }
    return kExitError;
}
