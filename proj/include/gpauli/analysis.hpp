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

#ifndef GPAULI_ANALYSIS_HPP
#define GPAULI_ANALYSIS_HPP

#include <optional>
#include <span>

#include "gpauli/subgroup.hpp"

namespace gpauli {

struct StabilizerReport {
    std::uint64_t order = 0;
    bool abelian = false;
    bool nontrivial = false;
    /// (prod k)/|S|; empty for a trivial stabilizer.
    std::optional<std::uint64_t> dim_formula;
    /// Tr P_S from the matrix oracle; empty when disabled or above the matrix cap.
    std::optional<std::uint64_t> dim_oracle;
    std::size_t l_given = 0;
    std::size_t l_minimal = 0;
    bool independent_given = false;
};

struct AnalysisOptions {
    Limits limits;
    bool with_oracle = true;
};

/// Closes the generators and fills every report field. Throws ConsistencyError
/// if the oracle dimension disagrees with the formula (or is nonzero for a
/// trivial stabilizer).
StabilizerReport analyze(const Profile &profile, std::span<const PauliElement> generators,
                         const AnalysisOptions &options = {});

}  // namespace gpauli

#endif
