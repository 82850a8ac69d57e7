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

#include "gpauli/verify.hpp"

#include <random>
#include <set>

#include "gpauli/element.hpp"
#include "gpauli/oracle.hpp"
#include "gpauli/text.hpp"

namespace gpauli {

namespace {

// Above this order the quadratic all-pairs commutation scan is skipped.
constexpr std::uint64_t kAllPairsOrderCap = 2000;

CheckResult make_check(std::string name, const Profile &profile, double tolerance = 0.0) {
    CheckResult r;
    r.name = std::move(name);
    r.dims = profile->str();
    r.tolerance = tolerance;
    return r;
}

CheckResult check_homomorphism(const Profile &profile, std::mt19937_64 &rng, const VerifyOptions &opt) {
    CheckResult r = make_check("homomorphism", profile);
    for (std::size_t i = 0; i < opt.homomorphism_pairs; ++i) {
        const PauliElement a = random_element(profile, rng);
        const PauliElement b = random_element(profile, rng);
        ++r.cases;
        if (element_to_matrix(a * b, opt.limits) !=
            matmul(element_to_matrix(a, opt.limits), element_to_matrix(b, opt.limits))) {
            r.passed = false;
            r.detail = "mismatch for a = " + format_element(a) + ", b = " + format_element(b);
            break;
        }
    }
    return r;
}

// omega X_d Z_d = Z_d X_d for every site, exactly, both through multiply and as matrices.
CheckResult check_clock_shift(const Profile &profile) {
    CheckResult r = make_check("clock_shift_relation", profile);
    for (std::size_t i = 0; i < profile->num_sites(); ++i) {
        const Exponent d = profile->dim(i);
        const Exponent omega = 2 * profile->weights()[static_cast<Eigen::Index>(i)];
        const MonomialMatrix x = x_matrix(d, *profile);
        const MonomialMatrix z = z_matrix(d, *profile);
        ++r.cases;
        const bool matrices = scale_by_root(x * z, omega) == z * x;
        const PauliElement zx = weyl(profile, i, 0, 1) * weyl(profile, i, 1, 0);
        const bool elements = zx == weyl(profile, i, 1, 1).with_phase_shift(omega);
        if (!matrices || !elements) {
            r.passed = false;
            r.detail = "relation fails on site " + std::to_string(i);
        }
    }
    return r;
}

std::vector<std::vector<PauliElement>> sample_generator_tuples(const Profile &profile, std::mt19937_64 &rng,
                                                               std::size_t count) {
    std::vector<std::vector<PauliElement>> tuples;
    std::bernoulli_distribution two(0.5);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<PauliElement> gens{random_element(profile, rng)};
        if (two(rng)) {
            gens.push_back(random_element(profile, rng));
        }
        tuples.push_back(std::move(gens));
    }
    return tuples;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions &opt) {
    std::vector<CheckResult> results;
    for (std::size_t pi = 0; pi < opt.profiles.size(); ++pi) {
        const Profile profile = make_profile(opt.profiles[pi]);
        std::mt19937_64 rng(opt.seed * 1000003u + pi);

        results.push_back(check_homomorphism(profile, rng, opt));
        results.push_back(check_clock_shift(profile));

        const bool dense_ok = profile->hilbert_dim() <= opt.limits.max_matrix_dim;
        CheckResult group_law = make_check("stabilizer_structure", profile);
        CheckResult trace_law = make_check("trace_agreement", profile);
        CheckResult idem = make_check("idempotence", profile, kIdempotenceTolerance);
        CheckResult meet = make_check("intersection_agreement", profile);
        CheckResult basis = make_check("basis_fidelity", profile, kFixedPointTolerance);

        for (const auto &gens : sample_generator_tuples(profile, rng, opt.sampled_subgroups)) {
            const Subgroup s = closure(profile, gens, opt.limits);
            const bool nontrivial = is_nontrivial(s);
            const std::string where = " for <" + format_element(gens.front()) + (gens.size() > 1 ? ", ..." : "") + ">";

            ++group_law.cases;
            bool structure_ok = full_group_order(*profile) % s.order() == 0;
            if (nontrivial) {
                structure_ok = structure_ok && s.abelian() && profile->hilbert_dim() % s.order() == 0;
            }
            if (s.order() <= kAllPairsOrderCap) {
                structure_ok = structure_ok && (s.abelian() == all_pairs_commute(s));
            }
            if (!structure_ok && group_law.passed) {
                group_law.passed = false;
                group_law.detail = "structural invariant broken" + where;
            }

            if (!dense_ok) {
                continue;
            }
            ++trace_law.cases;
            const std::uint64_t tr = projector_trace(s, opt.limits);
            const std::uint64_t expected = nontrivial ? dim_formula(s) : 0;
            if (tr != expected && trace_law.passed) {
                trace_law.passed = false;
                trace_law.detail = "trace " + std::to_string(tr) + " vs " + std::to_string(expected) + where;
            }

            ++idem.cases;
            const DenseMatrix<> p = projector_matrix(s, opt.limits);
            const double res = std::max(idempotence_residual(p), absorption_residual(s, p, opt.limits));
            idem.worst_residual = std::max(idem.worst_residual, res);
            if (res > kIdempotenceTolerance && idem.passed) {
                idem.passed = false;
                idem.detail = "residual " + std::to_string(res) + where;
            }

            ++meet.cases;
            const std::size_t inter = intersection_dimension(profile, gens, opt.limits);
            if (inter != tr && meet.passed) {
                meet.passed = false;
                meet.detail = "intersection " + std::to_string(inter) + " vs trace " + std::to_string(tr) + where;
            }

            ++basis.cases;
            const auto vs = stabilized_basis(s, opt.limits);
            bool basis_ok = vs.size() == tr;
            for (const auto &v : vs) {
                const double fr = fixed_point_residual(s, v, opt.limits);
                basis.worst_residual = std::max(basis.worst_residual, fr);
                basis_ok = basis_ok && fr <= kFixedPointTolerance;
            }
            if (!basis_ok && basis.passed) {
                basis.passed = false;
                basis.detail = "basis size " + std::to_string(vs.size()) + " vs trace " + std::to_string(tr) + where;
            }
        }
        results.push_back(std::move(group_law));
        if (dense_ok) {
            for (auto *c : {&trace_law, &idem, &meet, &basis}) {
                results.push_back(std::move(*c));
            }
        }
    }
    return results;
}

}  // namespace gpauli
