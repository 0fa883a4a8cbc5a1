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

// Line-oriented circuit text format:
//
//   circuit <name>
//   inputs <n>
//   ancillas <m>
//   gate <KIND>[(<angle>)] <q0> [<q1> [<q2>]]
//   ...
//   end
//
// `#` starts a comment anywhere on a line; blank lines are ignored.

#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qic/circuit.hpp"
#include "qic/error.hpp"
#include "qic/layout.hpp"

namespace qic {

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline std::optional<std::size_t> parse_count(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

inline std::optional<double> parse_angle(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::string buf(s);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

inline std::string format_angle(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Line {
    std::size_t number;
    std::string_view text;  // comment stripped
};

}  // namespace detail

inline Circuit parse_circuit(std::string_view text) {
    using detail::Token;
    std::vector<detail::Line> lines;
    {
        std::size_t number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view raw = text.substr(pos, eol - pos);
            ++number;
            if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
            if (!detail::split_tokens(raw).empty()) lines.push_back({number, raw});
            if (eol == text.size()) break;
            pos = eol + 1;
        }
    }

    std::size_t cursor = 0;
    auto header = [&](std::string_view keyword) -> std::pair<Token, std::size_t> {
        if (cursor >= lines.size()) {
            throw Error(ErrorKind::MissingHeader, "expected `" + std::string(keyword) + "` line",
                        lines.empty() ? 1 : lines.back().number + 1);
        }
        const auto& line = lines[cursor++];
        auto toks = detail::split_tokens(line.text);
        if (toks[0].text != keyword) {
            throw Error(ErrorKind::MissingHeader,
                        "expected `" + std::string(keyword) + "`, found `" +
                            std::string(toks[0].text) + "`",
                        line.number, toks[0].column);
        }
        if (toks.size() != 2) {
            throw Error(ErrorKind::SyntaxError,
                        "`" + std::string(keyword) + "` takes exactly one argument", line.number,
                        toks[0].column);
        }
        return {toks[1], line.number};
    };

    auto [name_tok, name_line] = header("circuit");
    (void)name_line;
    auto count_header = [&](std::string_view keyword) {
        auto [tok, line_no] = header(keyword);
        auto v = detail::parse_count(tok.text);
        if (!v) {
            throw Error(ErrorKind::SyntaxError,
                        "expected a non-negative integer, found `" + std::string(tok.text) + "`",
                        line_no, tok.column);
        }
        return std::pair{*v, line_no};
    };
    auto [n, n_line] = count_header("inputs");
    if (n < 1) throw Error(ErrorKind::SyntaxError, "inputs must be at least 1", n_line);
    auto [m, m_line] = count_header("ancillas");
    (void)m_line;
    const std::size_t total = n + m;

    std::vector<Gate> gates;
    bool ended = false;
    for (; cursor < lines.size(); ++cursor) {
        const auto& line = lines[cursor];
        auto toks = detail::split_tokens(line.text);
        if (ended) {
            throw Error(ErrorKind::SyntaxError, "content after `end`", line.number, toks[0].column);
        }
        if (toks[0].text == "end") {
            if (toks.size() != 1) {
                throw Error(ErrorKind::SyntaxError, "`end` takes no arguments", line.number,
                            toks[1].column);
            }
            ended = true;
            continue;
        }
        if (toks[0].text != "gate") {
            throw Error(ErrorKind::SyntaxError,
                        "expected `gate` or `end`, found `" + std::string(toks[0].text) + "`",
                        line.number, toks[0].column);
        }
        if (toks.size() < 2) {
            throw Error(ErrorKind::SyntaxError, "`gate` needs a kind", line.number,
                        toks[0].column);
        }

        // Kind, optionally glued to or followed by "(angle)".
        std::string_view spec = toks[1].text;
        std::size_t spec_col = toks[1].column;
        std::size_t next = 2;
        std::string_view kind_text = spec;
        std::optional<std::string_view> angle_text;
        std::size_t angle_col = 0;
        if (auto paren = spec.find('('); paren != std::string_view::npos) {
            kind_text = spec.substr(0, paren);
            if (spec.back() != ')') {
                throw Error(ErrorKind::SyntaxError, "unterminated angle", line.number,
                            spec_col + paren);
            }
            angle_text = spec.substr(paren + 1, spec.size() - paren - 2);
            angle_col = spec_col + paren + 1;
        } else if (next < toks.size() && toks[next].text.front() == '(') {
            std::string_view a = toks[next].text;
            if (a.back() != ')') {
                throw Error(ErrorKind::SyntaxError, "unterminated angle", line.number,
                            toks[next].column);
            }
            angle_text = a.substr(1, a.size() - 2);
            angle_col = toks[next].column + 1;
            ++next;
        }
        auto kind = kind_from_name(kind_text);
        if (!kind) {
            throw Error(ErrorKind::UnknownGate, "unknown gate `" + std::string(kind_text) + "`",
                        line.number, spec_col);
        }
        double angle = 0.0;
        if (is_parameterized(*kind)) {
            if (!angle_text) {
                throw Error(ErrorKind::SyntaxError,
                            std::string(kind_name(*kind)) + " requires an angle", line.number,
                            spec_col);
            }
            auto v = detail::parse_angle(*angle_text);
            if (!v) {
                throw Error(ErrorKind::SyntaxError,
                            "invalid angle `" + std::string(*angle_text) + "`", line.number,
                            angle_col);
            }
            angle = *v;
        } else if (angle_text) {
            throw Error(ErrorKind::SyntaxError,
                        std::string(kind_name(*kind)) + " takes no angle", line.number, angle_col);
        }

        std::vector<Qubit> qubits;
        for (std::size_t i = next; i < toks.size(); ++i) {
            auto q = detail::parse_count(toks[i].text);
            if (!q) {
                throw Error(ErrorKind::SyntaxError,
                            "invalid qubit index `" + std::string(toks[i].text) + "`",
                            line.number, toks[i].column);
            }
            if (*q >= total) {
                throw Error(ErrorKind::QubitOutOfRange,
                            "qubit " + std::to_string(*q) + " not below " + std::to_string(total),
                            line.number, toks[i].column);
            }
            qubits.push_back(*q);
        }
        try {
            gates.emplace_back(*kind, std::move(qubits), angle);
        } catch (const Error& e) {
            throw Error(e.kind(), e.detail(), line.number, spec_col);
        }
    }
    if (!ended) {
        throw Error(ErrorKind::SyntaxError, "missing `end`",
                    lines.empty() ? 1 : lines.back().number + 1);
    }
    return Circuit(std::string(name_tok.text), n, m, std::move(gates));
}

inline std::string serialize_gate(const Gate& g) {
    std::string out = "gate ";
    out += kind_name(g.kind());
    if (is_parameterized(g.kind())) out += "(" + detail::format_angle(g.angle()) + ")";
    for (Qubit q : g.qubits()) out += " " + std::to_string(q);
    return out;
}

/// Canonical text; when a layout is given it is recorded as
/// `# register <name> <start> <size>` comment lines after the header.
inline std::string serialize_circuit(const Circuit& c,
                                     const std::optional<RegisterLayout>& layout = std::nullopt) {
    std::string out;
    out += "circuit " + c.name() + "\n";
    out += "inputs " + std::to_string(c.n_inputs()) + "\n";
    out += "ancillas " + std::to_string(c.n_ancillas()) + "\n";
    if (layout) {
        for (const auto& r : layout->ranges()) {
            out += "# register " + r.name + " " + std::to_string(r.start) + " " +
                   std::to_string(r.size) + "\n";
        }
    }
    for (const Gate& g : c.gates()) out += serialize_gate(g) + "\n";
    out += "end\n";
    return out;
}

inline Circuit load_circuit(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_circuit(ss.str());
}

}  // namespace qic
