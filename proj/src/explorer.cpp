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

#include "gpauli/explorer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace gpauli {

namespace {

// Deduplicating store of subgroups keyed by element set.
class SubgroupStore {
   public:
    /// Returns true if `s` was new.
    bool insert(Subgroup s) {
        std::size_t key = hash_of(s);
        auto &bucket = buckets_[key];
        for (std::size_t idx : bucket) {
            if (groups_[idx] == s) {
                return false;
            }
        }
        bucket.push_back(groups_.size());
        groups_.push_back(std::move(s));
        return true;
    }
    const std::vector<Subgroup> &groups() const {
        return groups_;
    }
    std::vector<Subgroup> release() {
        return std::move(groups_);
    }

   private:
    static std::size_t hash_of(const Subgroup &s) {
        PauliElementHash h;
        std::size_t acc = s.order();
        for (const auto &g : s.elements()) {
            acc = acc * 1000003u ^ h(g);
        }
        return acc;
    }

    std::vector<Subgroup> groups_;
    std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
};

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const Profile &profile, std::size_t max_generators, const Limits &limits) {
    if (max_generators > 3) {
        throw std::invalid_argument("max_generators must be in 0..3");
    }
    SubgroupStore store;
    store.insert(closure(profile, std::span<const PauliElement>{}, limits));

    if (max_generators >= 1) {
        const Subgroup full = generate_full_group(profile, limits);
        std::vector<std::size_t> cyclic;
        for (const auto &g : full.elements()) {
            if (store.insert(closure(profile, {g}, limits))) {
                cyclic.push_back(store.groups().size() - 1);
            }
        }

        // <A, b> depends only on the group A and the cyclic group <b>, so one
        // representative per cyclic subgroup suffices at each level.
        std::vector<std::size_t> previous = cyclic;
        for (std::size_t level = 2; level <= max_generators; ++level) {
            std::vector<std::size_t> fresh;
            for (std::size_t pi = 0; pi < previous.size(); ++pi) {
                for (std::size_t ci = 0; ci < cyclic.size(); ++ci) {
                    if (level == 2 && ci <= pi) {
                        continue;
                    }
                    const Subgroup &base = store.groups()[previous[pi]];
                    const PauliElement &extra = store.groups()[cyclic[ci]].generators().front();
                    if (base.contains(extra)) {
                        continue;
                    }
                    std::vector<PauliElement> gens = base.generators();
                    gens.push_back(extra);
                    if (store.insert(closure(profile, gens, limits))) {
                        fresh.push_back(store.groups().size() - 1);
                    }
                }
            }
            previous = std::move(fresh);
        }
    }

    std::vector<Subgroup> all = store.release();
    std::sort(all.begin(), all.end(), [](const Subgroup &a, const Subgroup &b) {
        if (a.order() != b.order()) {
            return a.order() < b.order();
        }
        return std::lexicographical_compare(a.elements().begin(), a.elements().end(), b.elements().begin(),
                                            b.elements().end());
    });
    return all;
}

std::vector<Subgroup> enumerate_stabilizers(const Profile &profile, std::size_t max_generators,
                                            const Limits &limits) {
    std::vector<Subgroup> out;
    for (auto &s : enumerate_subgroups(profile, max_generators, limits)) {
        if (is_nontrivial(s)) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

namespace {

std::vector<Witness> find_witnesses(const std::vector<ScanEntry> &entries, std::size_t ScanEntry::*l_field) {
    // l -> order -> first entry index with that (l, order)
    std::map<std::size_t, std::map<std::uint64_t, std::size_t>> first_seen;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        first_seen[entries[i].*l_field].try_emplace(entries[i].order, i);
    }
    std::vector<Witness> out;
    for (const auto &[l, by_order] : first_seen) {
        for (auto a = by_order.begin(); a != by_order.end(); ++a) {
            for (auto b = std::next(a); b != by_order.end(); ++b) {
                out.push_back({a->second, b->second, l});
            }
        }
    }
    return out;
}

}  // namespace

ConjectureScanReport conjecture_scan(const Profile &profile, std::size_t max_generators, const Limits &limits) {
    ConjectureScanReport report;
    report.profile = profile;
    report.max_generators = max_generators;
    for (const auto &s : enumerate_subgroups(profile, max_generators, limits)) {
        if (!is_nontrivial(s)) {
            ++report.trivial_count;
            continue;
        }
        ScanEntry e;
        e.generators = prune_dependent(profile, s.generators(), limits);
        e.l_given = e.generators.size();
        e.l_minimal = minimal_generating_size(s, limits);
        e.order = s.order();
        e.dim = dim_formula(s);
        report.entries.push_back(std::move(e));
    }
    report.witnesses_given = find_witnesses(report.entries, &ScanEntry::l_given);
    report.witnesses_minimal = find_witnesses(report.entries, &ScanEntry::l_minimal);
    report.functional_given = report.witnesses_given.empty();
    report.functional_minimal = report.witnesses_minimal.empty();
    return report;
}

TableReport reproduce_table() {
    const Profile profile = make_profile({2, 3});
    const PauliElement x2 = weyl(profile, 0, 1, 0);
    const PauliElement z2 = weyl(profile, 0, 0, 1);
    const PauliElement x3 = weyl(profile, 1, 1, 0);

    TableReport table;
    table.rows = {
        {"<X x X3>", {x2 * x3}, 1, 6, {}, false},
        {"<I x X3>", {x3}, 1, 3, {}, false},
        {"<Z x X3>", {z2 * x3}, 1, 6, {}, false},
        {"<Z x I, I x X3>", {z2, x3}, 2, 6, {}, false},
    };
    table.all_match = true;
    for (auto &row : table.rows) {
        row.report = analyze(profile, row.generators);
        row.matches = row.report.nontrivial && row.report.independent_given &&
                      row.report.l_given == row.expected_l && row.report.order == row.expected_order;
        table.all_match = table.all_match && row.matches;
    }
    return table;
}

}  // namespace gpauli
