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
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qic/checker.hpp"
#include "qic/circuit.hpp"
#include "qic/simulator.hpp"

namespace qic {

struct MinimizeOptions {
    std::size_t max_len = 8;
    std::size_t node_cap = 10'000'000;
    /// Skip sequences ending in a gate followed by its inverse on the same qubits.
    bool prune_inverse_pairs = true;
};

struct MinimizationResult {
    std::size_t minimal_length = 0;
    Circuit minimal_circuit;
    std::size_t nodes_explored = 0;
    /// Candidates evaluated at each length, index = length.
    std::vector<std::size_t> nodes_per_length;
    /// True when every length the search covered was enumerated completely
    /// (a hit at some length also exhausts all shorter lengths).
    bool exhausted = false;
};

/// Every gate of the given kinds on every valid qubit tuple of a q-qubit
/// register, in gate-set order and then ascending tuple order. Operands of
/// CZ/SWAP and the two controls of CCX are listed once, in increasing order.
inline std::vector<Gate> enumerate_placements(const std::vector<GateKind>& gate_set, std::size_t q) {
    std::vector<Gate> out;
    for (GateKind kind : gate_set) {
        if (is_parameterized(kind)) {
            throw Error(ErrorKind::InvalidArgument,
                        std::string(kind_name(kind)) + " is parameterized and cannot be enumerated");
        }
        const std::size_t k = arity(kind);
        if (k > q) continue;
        std::vector<Qubit> tuple(k, 0);
        // Odometer over [0, q)^k in lexicographic order.
        while (true) {
            bool distinct = true;
            for (std::size_t i = 0; i < k && distinct; ++i) {
                for (std::size_t j = i + 1; j < k; ++j) {
                    if (tuple[i] == tuple[j]) {
                        distinct = false;
                        break;
                    }
                }
            }
            bool canonical = distinct;
            if (canonical && is_symmetric(kind)) canonical = tuple[0] < tuple[1];
            if (canonical && kind == GateKind::CCX) canonical = tuple[0] < tuple[1];
            if (canonical) out.emplace_back(kind, tuple);

            std::size_t pos = k;
            while (pos > 0 && ++tuple[pos - 1] == q) {
                tuple[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    return out;
}

namespace detail {

class MinimizerSearch {
public:
    MinimizerSearch(const Circuit& target, std::vector<Gate> placements, const MinimizeOptions& options,
                    const DenseMatrix<Complex>& target_u, Tolerance tol, const DimensionLimits& limits)
        : target_(target),
          placements_(std::move(placements)),
          options_(options),
          target_u_(target_u),
          tol_(tol),
          limits_(limits) {
        for (const Gate& g : placements_) lowered_.push_back(lower_gate<Complex>(g, target.num_qubits()));
    }

    /// Enumerates all sequences of exactly `length` gates; returns the first
    /// one the confirm callback accepts.
    template <class Confirm>
    std::optional<std::vector<std::size_t>> search_length(std::size_t length, std::size_t& nodes,
                                                          std::size_t& level_nodes, Confirm&& confirm) {
        const auto start = restricted_columns<Complex>(
            Circuit(target_.name(), target_.n_inputs(), target_.n_ancillas()), limits_);
        std::vector<std::size_t> seq;
        seq.reserve(length);
        std::vector<DenseMatrix<Complex>> stack;
        stack.reserve(length + 1);
        stack.push_back(start);
        std::optional<std::vector<std::size_t>> found;
        recurse(length, seq, stack, nodes, level_nodes, confirm, found);
        return found;
    }

    const std::vector<Gate>& placements() const { return placements_; }

private:
    template <class Confirm>
    bool recurse(std::size_t length, std::vector<std::size_t>& seq,
                 std::vector<DenseMatrix<Complex>>& stack, std::size_t& nodes, std::size_t& level_nodes,
                 Confirm& confirm, std::optional<std::vector<std::size_t>>& found) {
        if (seq.size() == length) {
            if (nodes >= options_.node_cap) {
                throw Error(ErrorKind::SearchBudgetExceeded,
                            "node cap of " + std::to_string(options_.node_cap) + " reached at length " +
                                std::to_string(length));
            }
            ++nodes;
            ++level_nodes;
            if (prefilter(stack.back()) && confirm(seq)) {
                found = seq;
                return true;
            }
            return false;
        }
        for (std::size_t p = 0; p < placements_.size(); ++p) {
            if (options_.prune_inverse_pairs && !seq.empty() &&
                placements_[seq.back()].inverse() == placements_[p]) {
                continue;
            }
            DenseMatrix<Complex> next = stack.back();
            for (std::size_t col = 0; col < next.cols(); ++col) apply_lowered<Complex>(next.column(col), lowered_[p]);
            seq.push_back(p);
            stack.push_back(std::move(next));
            const bool done = recurse(length, seq, stack, nodes, level_nodes, confirm, found);
            stack.pop_back();
            seq.pop_back();
            if (done) return true;
        }
        return false;
    }

    // Necessary condition for equivalence with a target implementing U_t:
    // each column projects onto (U_t|i>) (x) r_i with |r_i| = 1 and all r_i
    // equal. Thresholds are loose; the exact decision is made by confirm().
    bool prefilter(const DenseMatrix<Complex>& cols) const {
        const std::size_t m = target_.n_ancillas();
        const std::size_t in_dim = target_u_.cols();
        const std::size_t a_dim = std::size_t{1} << m;
        const double slack = 1e-6 + 10.0 * std::sqrt(tol_.eps());
        std::vector<Complex> ref;
        for (std::size_t i = 0; i < in_dim; ++i) {
            std::vector<Complex> r(a_dim);
            double norm = 0.0;
            for (std::size_t a = 0; a < a_dim; ++a) {
                Complex acc{};
                for (std::size_t j = 0; j < in_dim; ++j) acc += std::conj(target_u_(j, i)) * cols((j << m) | a, i);
                r[a] = acc;
                norm += std::norm(acc);
            }
            if (norm < 1.0 - slack) return false;
            if (i == 0) {
                ref = std::move(r);
                continue;
            }
            for (std::size_t a = 0; a < a_dim; ++a) {
                if (std::abs(r[a] - ref[a]) > slack) return false;
            }
        }
        return true;
    }

    const Circuit& target_;
    std::vector<Gate> placements_;
    std::vector<LoweredGate<Complex>> lowered_;
    MinimizeOptions options_;
    DenseMatrix<Complex> target_u_;
    Tolerance tol_;
    DimensionLimits limits_;
};

}  // namespace detail

/// Shortest circuit over `gate_set`, on the target's register shape, that
/// check_equivalence accepts against `target`. Lengths are enumerated in
/// increasing order; within a length the first hit in enumeration order wins.
template <Amplitude T = Complex>
MinimizationResult minimize(const Circuit& target, const std::vector<GateKind>& gate_set,
                            MinimizeOptions options = {}, Tolerance tol = {},
                            const DimensionLimits& limits = {}) {
    const auto placements = enumerate_placements(gate_set, target.num_qubits());

    MinimizationResult result{0, target, 0, {}, false};
    result.minimal_length = target.size();

    // A target that implements no unitary has no equivalent description at all.
    const auto impl = implements_unitary<T>(target, tol, limits);
    if (!implements(impl)) {
        result.exhausted = true;
        return result;
    }
    const auto& target_u = std::get<ImplementsUnitary>(impl).u;

    // If the target is itself expressible over the gate set it bounds the search.
    const bool target_in_family = std::all_of(target.gates().begin(), target.gates().end(), [&](const Gate& g) {
        return std::find(gate_set.begin(), gate_set.end(), g.kind()) != gate_set.end();
    });
    std::size_t last_len = options.max_len;
    if (target_in_family && target.size() <= options.max_len + 1) {
        last_len = target.size() == 0 ? 0 : target.size() - 1;
    }

    detail::MinimizerSearch search(target, placements, options, target_u, tol, limits);
    auto build = [&](const std::vector<std::size_t>& seq) {
        std::vector<Gate> gates;
        gates.reserve(seq.size());
        for (std::size_t p : seq) gates.push_back(placements[p]);
        return Circuit(target.name() + "_min", target.n_inputs(), target.n_ancillas(), std::move(gates));
    };
    auto confirm = [&](const std::vector<std::size_t>& seq) {
        return check_equivalence<T>(build(seq), target, tol, limits).is_equivalent();
    };

    for (std::size_t len = 0; len <= last_len; ++len) {
        std::size_t level = 0;
        auto hit = search.search_length(len, result.nodes_explored, level, confirm);
        result.nodes_per_length.push_back(level);
        if (hit) {
            result.minimal_length = len;
            result.minimal_circuit = build(*hit);
            result.exhausted = true;
            return result;
        }
    }
    // Every requested length was enumerated; with the target in the family
    // nothing shorter exists, so the target itself is minimal.
    result.exhausted = true;
    return result;
}

}  // namespace qic
