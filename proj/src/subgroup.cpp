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

#include "gpauli/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

namespace gpauli {

Subgroup::Subgroup(Profile profile, std::vector<PauliElement> elements, std::vector<PauliElement> generators)
    : profile_(std::move(profile)), elements_(std::move(elements)), generators_(std::move(generators)) {
    for (std::size_t i = 0; i < generators_.size() && abelian_; ++i) {
        for (std::size_t j = i + 1; j < generators_.size(); ++j) {
            if (!commutes(generators_[i], generators_[j])) {
                abelian_ = false;
                break;
            }
        }
    }
    for (const auto &g : elements_) {
        if (scalar_kind(g) == ScalarKind::nonidentity_scalar) {
            nonidentity_scalar_ = g;
            break;
        }
    }
}

bool Subgroup::contains(const PauliElement &g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

Subgroup closure(const Profile &profile, std::span<const PauliElement> generators, const Limits &limits) {
    for (const auto &g : generators) {
        require_same_profile(*profile, g.profile());
    }
    std::unordered_set<PauliElement, PauliElementHash> seen;
    std::deque<PauliElement> frontier;
    PauliElement e = identity(profile);
    seen.insert(e);
    frontier.push_back(e);
    while (!frontier.empty()) {
        PauliElement g = std::move(frontier.front());
        frontier.pop_front();
        for (const auto &h : generators) {
            PauliElement gh = multiply(g, h);
            if (seen.insert(gh).second) {
                if (seen.size() > limits.max_elements) {
                    throw ResourceLimitError("closure exceeded " + std::to_string(limits.max_elements) +
                                             " elements");
                }
                frontier.push_back(std::move(gh));
            }
        }
    }
    std::vector<PauliElement> elements(seen.begin(), seen.end());
    std::sort(elements.begin(), elements.end());
    return Subgroup(profile, std::move(elements), std::vector<PauliElement>(generators.begin(), generators.end()));
}

bool is_abelian(const Subgroup &s) {
    return s.abelian();
}

bool all_pairs_commute(const Subgroup &s) {
    auto el = s.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
        for (std::size_t j = i + 1; j < el.size(); ++j) {
            if (!commutes(el[i], el[j])) {
                return false;
            }
        }
    }
    return true;
}

bool is_nontrivial(const Subgroup &s) {
    return !s.nonidentity_scalar_member().has_value();
}

std::uint64_t dim_formula(const Subgroup &s) {
    if (!is_nontrivial(s)) {
        throw TrivialStabilizerError("stabilizer contains a nonidentity scalar; it fixes only the zero vector");
    }
    std::uint64_t n = s.profile().hilbert_dim();
    if (n % s.order() != 0) {
        throw ConsistencyError("nontrivial stabilizer order " + std::to_string(s.order()) +
                               " does not divide " + std::to_string(n));
    }
    return n / s.order();
}

namespace {

std::vector<PauliElement> without(std::span<const PauliElement> gens, std::size_t skip) {
    std::vector<PauliElement> rest;
    rest.reserve(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j != skip) {
            rest.push_back(gens[j]);
        }
    }
    return rest;
}

}  // namespace

bool is_independent_generating_set(const Profile &profile, std::span<const PauliElement> generators,
                                   const Limits &limits) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (closure(profile, without(generators, i), limits).contains(generators[i])) {
            return false;
        }
    }
    return true;
}

std::vector<PauliElement> prune_dependent(const Profile &profile, std::span<const PauliElement> generators,
                                          const Limits &limits) {
    std::vector<PauliElement> kept(generators.begin(), generators.end());
    std::size_t i = 0;
    while (i < kept.size()) {
        if (closure(profile, without(kept, i), limits).contains(kept[i])) {
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return kept;
}

namespace {

// Calls visit(indices) for each m-combination of [0, n) in lexicographic order
// until visit returns true.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t m, Visit &&visit) {
    if (m > n) {
        return false;
    }
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) {
        idx[i] = i;
    }
    while (true) {
        if (visit(std::as_const(idx))) {
            return true;
        }
        std::size_t k = m;
        while (k > 0 && idx[k - 1] == n - m + (k - 1)) {
            --k;
        }
        if (k == 0) {
            return false;
        }
        ++idx[k - 1];
        for (std::size_t j = k; j < m; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace

std::size_t minimal_generating_size(const Subgroup &s, const Limits &limits) {
    if (s.order() == 1) {
        return 0;
    }
    std::size_t budget = limits.max_subset_closures;
    auto spend = [&budget]() {
        if (budget == 0) {
            throw ResourceLimitError("minimal generating set search exceeded its closure budget");
        }
        --budget;
    };

    // Distinct cyclic subgroups, each with one generator.
    std::vector<Subgroup> cyclic;
    for (const auto &g : s.elements()) {
        if (scalar_kind(g) == ScalarKind::identity_scalar) {
            continue;
        }
        const std::uint64_t g_order = order_of(g);
        bool known = false;
        for (const auto &c : cyclic) {
            if (c.order() == g_order && c.contains(g)) {
                known = true;
                break;
            }
        }
        if (known) {
            continue;
        }
        spend();
        cyclic.push_back(closure(s.profile_ptr(), {g}, limits));
        if (cyclic.back().order() == s.order()) {
            return 1;
        }
    }

    // Keep only the maximal ones.
    std::vector<PauliElement> candidates;
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cyclic.size() && maximal; ++j) {
            if (i != j && cyclic[j].order() > cyclic[i].order() && cyclic[j].contains(cyclic[i].generators()[0])) {
                maximal = false;
            }
        }
        if (maximal) {
            candidates.push_back(cyclic[i].generators()[0]);
        }
    }

    for (std::size_t m = 2; m <= candidates.size(); ++m) {
        std::vector<PauliElement> pick(m, candidates[0]);
        bool found = for_each_combination(candidates.size(), m, [&](const std::vector<std::size_t> &idx) {
            for (std::size_t i = 0; i < m; ++i) {
                pick[i] = candidates[idx[i]];
            }
            spend();
            return closure(s.profile_ptr(), pick, limits).order() == s.order();
        });
        if (found) {
            return m;
        }
    }
    throw ConsistencyError("maximal cyclic subgroups failed to generate the group");
}

std::uint64_t full_group_order(const DimensionProfile &profile) {
    std::uint64_t n = profile.hilbert_dim();
    auto two_l = static_cast<std::uint64_t>(profile.phase_modulus());
    if (n > std::numeric_limits<std::uint64_t>::max() / n / two_l) {
        throw std::overflow_error("full group order does not fit in 64 bits");
    }
    return two_l * n * n;
}

Subgroup generate_full_group(const Profile &profile, const Limits &limits) {
    if (full_group_order(*profile) > limits.max_elements) {
        throw ResourceLimitError("full group has " + std::to_string(full_group_order(*profile)) +
                                 " elements, above the cap of " + std::to_string(limits.max_elements));
    }
    std::vector<PauliElement> gens{scalar(profile, 1)};
    for (std::size_t i = 0; i < profile->num_sites(); ++i) {
        gens.push_back(weyl(profile, i, 1, 0));
        gens.push_back(weyl(profile, i, 0, 1));
    }
    return closure(profile, gens, limits);
}

}  // namespace gpauli
