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
#include <string>
#include <vector>

#include "qic/error.hpp"

namespace qic {

struct RegisterRange {
    std::string name;
    std::size_t start = 0;
    std::size_t size = 0;

    friend bool operator==(const RegisterRange&, const RegisterRange&) = default;
};

/// Named contiguous qubit ranges of a constructed circuit. Ranges are
/// disjoint, appear in index order and cover [0, total) exactly; empty ranges
/// are kept so every construction reports the same register names.
class RegisterLayout {
public:
    RegisterLayout() = default;
    explicit RegisterLayout(std::vector<RegisterRange> ranges) : ranges_(std::move(ranges)) {
        std::size_t next = 0;
        for (const auto& r : ranges_) {
            if (r.start != next) {
                throw Error(ErrorKind::InvalidArgument,
                            "register " + r.name + " does not start at " + std::to_string(next));
            }
            next += r.size;
        }
        total_ = next;
    }

    const std::vector<RegisterRange>& ranges() const noexcept { return ranges_; }
    std::size_t total() const noexcept { return total_; }

    const RegisterRange& at(const std::string& name) const {
        for (const auto& r : ranges_) {
            if (r.name == name) return r;
        }
        throw Error(ErrorKind::InvalidArgument, "no register named " + name);
    }

    friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;

private:
    std::vector<RegisterRange> ranges_;
    std::size_t total_ = 0;
};

}  // namespace qic
