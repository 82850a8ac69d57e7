// Copyright 2026 The gpauli Authors
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

#ifndef GPAULI_ERRORS_HPP
#define GPAULI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpauli {

/// Invalid dimension list (empty, or a site dimension below 1).
struct ProfileError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operands built over different dimension profiles.
struct ProfileMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A configured element-count, matrix-size, or search cap was exceeded.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The dimension formula was requested for a stabilizer that fixes only the zero vector.
struct TrivialStabilizerError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An exact/floating cross-check disagreed. Indicates a bug, never user error.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Element text did not match the grammar. `column()` is 1-based.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, std::size_t column)
        : std::invalid_argument(message + " (column " + std::to_string(column) + ")"), column_(column) {
    }
    std::size_t column() const {
        return column_;
    }

   private:
    std::size_t column_;
};

/// Caps applied by every operation that enumerates elements or builds dense matrices.
struct Limits {
    std::size_t max_elements = 1'000'000;
    std::size_t max_matrix_dim = 4096;
    /// Budget for the subset search in minimal_generating_size (closures evaluated).
    std::size_t max_subset_closures = 1'000'000;
};

}  // namespace gpauli

#endif
