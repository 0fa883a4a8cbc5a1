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
#include <array>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qic/error.hpp"

namespace qic {

enum class GateKind {
    I1,
    X,
    Y,
    Z,
    H,
    S,
    SDG,
    T,
    TDG,
    CX,
    CZ,
    SWAP,
    CCX,
    RX,
    RY,
    RZ,
    PHASE,
};

inline constexpr std::array<GateKind, 17> kAllGateKinds{
    GateKind::I1, GateKind::X,   GateKind::Y,    GateKind::Z,   GateKind::H,  GateKind::S,
    GateKind::SDG, GateKind::T,  GateKind::TDG,  GateKind::CX,  GateKind::CZ, GateKind::SWAP,
    GateKind::CCX, GateKind::RX, GateKind::RY,   GateKind::RZ,  GateKind::PHASE};

inline constexpr std::size_t arity(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::SWAP: return 2;
        case GateKind::CCX: return 3;
        default: return 1;
    }
}

inline constexpr bool is_parameterized(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ ||
           kind == GateKind::PHASE;
}

/// Kinds whose qubit operands can be permuted without changing the gate.
inline constexpr bool is_symmetric(GateKind kind) {
    return kind == GateKind::CZ || kind == GateKind::SWAP;
}

inline constexpr std::string_view kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::I1: return "I";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::SDG: return "SDG";
        case GateKind::T: return "T";
        case GateKind::TDG: return "TDG";
        case GateKind::CX: return "CX";
        case GateKind::CZ: return "CZ";
        case GateKind::SWAP: return "SWAP";
        case GateKind::CCX: return "CCX";
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::PHASE: return "PHASE";
    }
    return "?";
}

/// Case-sensitive lookup; "I1" is accepted as an alias of "I".
inline std::optional<GateKind> kind_from_name(std::string_view name) {
    if (name == "I1") return GateKind::I1;
    for (GateKind k : kAllGateKinds) {
        if (kind_name(k) == name) return k;
    }
    return std::nullopt;
}

using Qubit = std::size_t;

/// One gate application. For controlled kinds the leading qubits are controls
/// and the last is the target.
class Gate {
public:
    Gate(GateKind kind, std::vector<Qubit> qubits, double angle = 0.0)
        : kind_(kind), qubits_(std::move(qubits)), angle_(angle) {
        if (qubits_.size() != arity(kind_)) {
            throw Error(ErrorKind::ArityMismatch,
                        std::string(kind_name(kind_)) + " takes " + std::to_string(arity(kind_)) +
                            " qubit(s), got " + std::to_string(qubits_.size()));
        }
        for (std::size_t i = 0; i < qubits_.size(); ++i) {
            for (std::size_t j = i + 1; j < qubits_.size(); ++j) {
                if (qubits_[i] == qubits_[j]) {
                    throw Error(ErrorKind::DuplicateQubit,
                                "qubit " + std::to_string(qubits_[i]) + " repeated in " +
                                    std::string(kind_name(kind_)));
                }
            }
        }
        if (!is_parameterized(kind_)) {
            angle_ = 0.0;
        } else if (!std::isfinite(angle_)) {
            throw Error(ErrorKind::InvalidArgument, "rotation angle must be finite");
        }
    }

    GateKind kind() const noexcept { return kind_; }
    const std::vector<Qubit>& qubits() const noexcept { return qubits_; }
    double angle() const noexcept { return angle_; }

    Gate inverse() const {
        switch (kind_) {
            case GateKind::S: return Gate(GateKind::SDG, qubits_);
            case GateKind::SDG: return Gate(GateKind::S, qubits_);
            case GateKind::T: return Gate(GateKind::TDG, qubits_);
            case GateKind::TDG: return Gate(GateKind::T, qubits_);
            case GateKind::RX:
            case GateKind::RY:
            case GateKind::RZ:
            case GateKind::PHASE: return Gate(kind_, qubits_, -angle_);
            default: return *this;
        }
    }

    friend bool operator==(const Gate&, const Gate&) = default;

private:
    GateKind kind_;
    std::vector<Qubit> qubits_;
    double angle_;
};

/// Ordered gate list over n input qubits followed by m ancilla qubits.
/// Inputs occupy indices [0, n) and ancillas [n, n+m).
class Circuit {
public:
    Circuit(std::string name, std::size_t n_inputs, std::size_t n_ancillas,
            std::vector<Gate> gates = {})
        : name_(std::move(name)),
          n_inputs_(n_inputs),
          n_ancillas_(n_ancillas),
          gates_(std::move(gates)) {
        if (name_.empty() || std::any_of(name_.begin(), name_.end(), [](char ch) {
                return ch == '#' || std::isspace(static_cast<unsigned char>(ch));
            })) {
            throw Error(ErrorKind::InvalidArgument,
                        "circuit name must be a non-empty token without spaces or '#'");
        }
        if (n_inputs_ < 1) {
            throw Error(ErrorKind::InvalidArgument, "a circuit needs at least one input qubit");
        }
        for (const Gate& g : gates_) check_in_range(g);
    }

    const std::string& name() const noexcept { return name_; }
    std::size_t n_inputs() const noexcept { return n_inputs_; }
    std::size_t n_ancillas() const noexcept { return n_ancillas_; }
    std::size_t num_qubits() const noexcept { return n_inputs_ + n_ancillas_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    bool has_parameterized_gates() const {
        return std::any_of(gates_.begin(), gates_.end(),
                           [](const Gate& g) { return is_parameterized(g.kind()); });
    }

    /// Copy with one more gate appended.
    Circuit with_gate(Gate g) const {
        Circuit out = *this;
        out.check_in_range(g);
        out.gates_.push_back(std::move(g));
        return out;
    }

    Circuit renamed(std::string name) const {
        Circuit out = *this;
        out.name_ = std::move(name);
        return out;
    }

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    void check_in_range(const Gate& g) const {
        for (Qubit q : g.qubits()) {
            if (q >= num_qubits()) {
                throw Error(ErrorKind::QubitOutOfRange,
                            "qubit " + std::to_string(q) + " not below " +
                                std::to_string(num_qubits()));
            }
        }
    }

    std::string name_;
    std::size_t n_inputs_;
    std::size_t n_ancillas_;
    std::vector<Gate> gates_;
};

/// Adjoint circuit: gates reversed and individually inverted.
inline Circuit dagger(const Circuit& c) {
    std::vector<Gate> gates;
    gates.reserve(c.size());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) gates.push_back(it->inverse());
    return Circuit(c.name() + "_dg", c.n_inputs(), c.n_ancillas(), std::move(gates));
}

/// Rewrites qubit indices through `mapping` and places the result on a
/// register of new_n inputs and new_m ancillas. The mapping must be injective
/// and must cover every qubit the circuit touches.
inline Circuit remap_qubits(const Circuit& c, const std::map<Qubit, Qubit>& mapping,
                            std::size_t new_n, std::size_t new_m) {
    std::set<Qubit> images;
    for (const auto& [from, to] : mapping) {
        if (!images.insert(to).second) {
            throw Error(ErrorKind::NonInjectiveMapping,
                        "two qubits map onto " + std::to_string(to));
        }
        if (to >= new_n + new_m) {
            throw Error(ErrorKind::QubitOutOfRange,
                        "image " + std::to_string(to) + " not below " +
                            std::to_string(new_n + new_m));
        }
    }
    std::vector<Gate> gates;
    gates.reserve(c.size());
    for (const Gate& g : c.gates()) {
        std::vector<Qubit> qs;
        qs.reserve(g.qubits().size());
        for (Qubit q : g.qubits()) {
            auto it = mapping.find(q);
            if (it == mapping.end()) {
                throw Error(ErrorKind::QubitOutOfRange,
                            "qubit " + std::to_string(q) + " has no image under the mapping");
            }
            qs.push_back(it->second);
        }
        gates.emplace_back(g.kind(), std::move(qs), g.angle());
    }
    return Circuit(c.name(), new_n, new_m, std::move(gates));
}

/// Gates of `tail` appended after those of `head`; register shape of `head`.
inline Circuit concatenate(const Circuit& head, const Circuit& tail) {
    if (head.num_qubits() < tail.num_qubits()) {
        throw Error(ErrorKind::DimensionMismatch, "tail circuit is wider than head circuit");
    }
    std::vector<Gate> gates = head.gates();
    gates.insert(gates.end(), tail.gates().begin(), tail.gates().end());
    return Circuit(head.name(), head.n_inputs(), head.n_ancillas(), std::move(gates));
}

}  // namespace qic
