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

#ifndef GPAULI_SUBGROUP_HPP
#define GPAULI_SUBGROUP_HPP

#include <optional>
#include <span>
#include <vector>

#include "gpauli/element.hpp"
#include "gpauli/errors.hpp"

namespace gpauli {

/// A finite subgroup of the global Pauli group, stored as its sorted element
/// set together with the generators it was closed from.
class Subgroup {
   public:
    const Profile &profile_ptr() const {
        return profile_;
    }
    const DimensionProfile &profile() const {
        return *profile_;
    }
    /// Sorted ascending by PauliElement ordering.
    std::span<const PauliElement> elements() const {
        return elements_;
    }
    const std::vector<PauliElement> &generators() const {
        return generators_;
    }
    std::uint64_t order() const {
        return elements_.size();
    }
    bool contains(const PauliElement &g) const;

    /// Pairwise commutation of the generators.
    bool abelian() const {
        return abelian_;
    }
    /// Some zeta^c * I with c != 0, if the group has one.
    const std::optional<PauliElement> &nonidentity_scalar_member() const {
        return nonidentity_scalar_;
    }

    /// Element-set equality; generators are not compared.
    friend bool operator==(const Subgroup &a, const Subgroup &b) {
        return a.elements_ == b.elements_;
    }

   private:
    friend Subgroup closure(const Profile &, std::span<const PauliElement>, const Limits &);
    Subgroup(Profile profile, std::vector<PauliElement> elements, std::vector<PauliElement> generators);

    Profile profile_;
    std::vector<PauliElement> elements_;
    std::vector<PauliElement> generators_;
    bool abelian_ = true;
    std::optional<PauliElement> nonidentity_scalar_;
};

/// <generators>, by breadth-first multiplication until fixpoint. The empty list
/// gives {e}. Throws ResourceLimitError once the set outgrows limits.max_elements.
Subgroup closure(const Profile &profile, std::span<const PauliElement> generators, const Limits &limits = {});

inline Subgroup closure(const Profile &profile, std::initializer_list<PauliElement> generators,
                        const Limits &limits = {}) {
    return closure(profile, std::span<const PauliElement>(generators.begin(), generators.size()), limits);
}

/// Abelian test through the generating set only.
bool is_abelian(const Subgroup &s);

/// Abelian test over every pair of elements. Quadratic; used to check is_abelian.
bool all_pairs_commute(const Subgroup &s);

/// True iff no alpha*I with alpha != 1 belongs to s.
bool is_nontrivial(const Subgroup &s);

/// (k_1 ... k_n) / |S| for a nontrivial stabilizer. Throws TrivialStabilizerError otherwise.
std::uint64_t dim_formula(const Subgroup &s);

/// True iff no generator lies in the closure of the others.
bool is_independent_generating_set(const Profile &profile, std::span<const PauliElement> generators,
                                   const Limits &limits = {});

/// Drops, left to right, every generator that the remaining ones already generate.
/// The result is independent and generates the same group.
std::vector<PauliElement> prune_dependent(const Profile &profile, std::span<const PauliElement> generators,
                                          const Limits &limits = {});

/// Smallest number of elements of s that generate s (0 for {e}).
///
/// Candidates are restricted to one generator per maximal cyclic subgroup: any
/// generating set can swap each member for a generator of a maximal cyclic
/// subgroup containing it without shrinking the closure.
std::size_t minimal_generating_size(const Subgroup &s, const Limits &limits = {});

/// 2 L (k_1 ... k_n)^2.
std::uint64_t full_group_order(const DimensionProfile &profile);

/// Closure of {zeta I, X_i, Z_i for every site}.
Subgroup generate_full_group(const Profile &profile, const Limits &limits = {});

}  // namespace gpauli

#endif
