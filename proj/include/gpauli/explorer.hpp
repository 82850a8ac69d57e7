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

#ifndef GPAULI_EXPLORER_HPP
#define GPAULI_EXPLORER_HPP

#include <string>
#include <vector>

#include "gpauli/analysis.hpp"
#include "gpauli/subgroup.hpp"

namespace gpauli {

/// Every distinct subgroup of the full group generated by at most
/// max_generators elements (0..3), sorted by (order, element set).
/// Each subgroup keeps the first generating tuple that produced it; tuples of
/// fewer elements are tried first.
std::vector<Subgroup> enumerate_subgroups(const Profile &profile, std::size_t max_generators,
                                          const Limits &limits = {});

/// The nontrivial members of enumerate_subgroups.
std::vector<Subgroup> enumerate_stabilizers(const Profile &profile, std::size_t max_generators,
                                            const Limits &limits = {});

struct ScanEntry {
    std::vector<PauliElement> generators;  // after dependency pruning
    std::size_t l_given = 0;
    std::size_t l_minimal = 0;
    std::uint64_t order = 0;
    std::uint64_t dim = 0;
};

/// Two entries with the same generator count and different orders.
struct Witness {
    std::size_t first = 0;  // indices into ConjectureScanReport::entries
    std::size_t second = 0;
    std::size_t l = 0;
};

struct ConjectureScanReport {
    Profile profile;
    std::size_t max_generators = 0;
    std::vector<ScanEntry> entries;
    std::size_t trivial_count = 0;
    bool functional_given = true;
    bool functional_minimal = true;
    /// One witness per (l, smaller order, larger order) combination.
    std::vector<Witness> witnesses_given;
    std::vector<Witness> witnesses_minimal;
};

/// Tests whether l -> |S| is single-valued over the enumerated nontrivial stabilizers.
ConjectureScanReport conjecture_scan(const Profile &profile, std::size_t max_generators, const Limits &limits = {});

struct TableRow {
    std::string label;
    std::vector<PauliElement> generators;
    std::size_t expected_l = 0;
    std::uint64_t expected_order = 0;
    StabilizerReport report;
    bool matches = false;
};

struct TableReport {
    std::vector<TableRow> rows;
    bool all_match = false;
};

/// Recomputes the four C^2 (x) C^3 reference rows (<X x X3>, <I x X3>,
/// <Z x X3>, <Z x I, I x X3>) and compares l_given and |S| with the reference.
TableReport reproduce_table();

}  // namespace gpauli

#endif
