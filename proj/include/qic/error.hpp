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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qic {

enum class ErrorKind {
    SyntaxError,
    UnknownGate,
    ArityMismatch,
    QubitOutOfRange,
    DuplicateQubit,
    MissingHeader,
    NonInjectiveMapping,
    UnsupportedOnBackend,
    IndexOutOfRange,
    DimensionCapExceeded,
    DimensionMismatch,
    InputSizeMismatch,
    KeptExceedsTotal,
    SearchBudgetExceeded,
    InvalidArgument,
    IoError,
};

inline constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownGate: return "UnknownGate";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::QubitOutOfRange: return "QubitOutOfRange";
        case ErrorKind::DuplicateQubit: return "DuplicateQubit";
        case ErrorKind::MissingHeader: return "MissingHeader";
        case ErrorKind::NonInjectiveMapping: return "NonInjectiveMapping";
        case ErrorKind::UnsupportedOnBackend: return "UnsupportedOnBackend";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InputSizeMismatch: return "InputSizeMismatch";
        case ErrorKind::KeptExceedsTotal: return "KeptExceedsTotal";
        case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

/// Every failure in the library is reported as a qic::Error carrying a kind.
/// Parse errors additionally carry a 1-based line and column (0 when unknown).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(decorate(kind, message, line, column)),
          kind_(kind),
          detail_(message),
          line_(line),
          column_(column) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string decorate(ErrorKind kind, const std::string& message, std::size_t line,
                                std::size_t column) {
        std::string out(to_string(kind));
        if (line != 0) {
            out += " at line " + std::to_string(line);
            if (column != 0) out += ", column " + std::to_string(column);
        }
        out += ": " + message;
        return out;
    }

    ErrorKind kind_;
    std::string detail_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace qic
