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

#ifndef GPAULI_VERIFY_HPP
#define GPAULI_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gpauli/errors.hpp"
#include "gpauli/profile.hpp"

namespace gpauli {

struct CheckResult {
    std::string name;
    std::string dims;
    bool passed = true;
    std::size_t cases = 0;
    /// Largest floating residual seen, for checks that have one.
    double worst_residual = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    std::vector<std::vector<Exponent>> profiles = {{2}, {3}, {2, 3}, {4, 6}};
    std::size_t homomorphism_pairs = 1000;
    std::size_t sampled_subgroups = 100;
    Limits limits;
};

/// Cross-checks the exact group law against the matrix oracle on each profile:
/// homomorphism, clock/shift relation, projector idempotence and absorption,
/// trace versus dimension formula, eigenspace intersection, stabilized basis.
std::vector<CheckResult> run_verification(const VerifyOptions &options);

}  // namespace gpauli

#endif
