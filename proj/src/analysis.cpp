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

#include "gpauli/analysis.hpp"

#include "gpauli/oracle.hpp"

namespace gpauli {

StabilizerReport analyze(const Profile &profile, std::span<const PauliElement> generators,
                         const AnalysisOptions &options) {
    const Subgroup s = closure(profile, generators, options.limits);
    StabilizerReport r;
    r.order = s.order();
    r.abelian = is_abelian(s);
    r.nontrivial = is_nontrivial(s);
    if (r.nontrivial) {
        r.dim_formula = dim_formula(s);
    }
    if (options.with_oracle && profile->hilbert_dim() <= options.limits.max_matrix_dim) {
        r.dim_oracle = projector_trace(s, options.limits);
        const std::uint64_t expected = r.dim_formula.value_or(0);
        if (*r.dim_oracle != expected) {
            throw ConsistencyError("oracle dimension " + std::to_string(*r.dim_oracle) +
                                   " disagrees with expected " + std::to_string(expected));
        }
    }
    r.l_given = generators.size();
    r.independent_given = is_independent_generating_set(profile, generators, options.limits);
    r.l_minimal = minimal_generating_size(s, options.limits);
    return r;
}

}  // namespace gpauli
