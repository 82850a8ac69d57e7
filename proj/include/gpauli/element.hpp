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

#ifndef GPAULI_ELEMENT_HPP
#define GPAULI_ELEMENT_HPP

#include <compare>
#include <cstddef>
#include <random>
#include <utility>

#include "gpauli/profile.hpp"

namespace gpauli {

enum class ScalarKind { not_scalar, identity_scalar, nonidentity_scalar };

/// Exact element zeta^c * (X^{p_1} Z^{q_1}) (x) ... (x) (X^{p_n} Z^{q_n}) of the
/// global Pauli group over a DimensionProfile.
///
/// Always held in canonical form: 0 <= c < 2L and 0 <= p_i, q_i < k_i, so
/// equality, ordering and hashing are componentwise.
class PauliElement {
   public:
    /// Reduces every exponent into canonical range. Throws ProfileMismatchError
    /// if the exponent vectors do not have one entry per site.
    PauliElement(Profile profile, Exponent phase_exp, ExponentVector x_exps, ExponentVector z_exps);

    const Profile &profile_ptr() const {
        return profile_;
    }
    const DimensionProfile &profile() const {
        return *profile_;
    }
    std::size_t num_sites() const {
        return profile_->num_sites();
    }
    Exponent phase_exp() const {
        return phase_;
    }
    const ExponentVector &x_exps() const {
        return x_;
    }
    const ExponentVector &z_exps() const {
        return z_;
    }
    /// (p_i, q_i) at one site.
    std::pair<Exponent, Exponent> site(std::size_t i) const {
        auto k = static_cast<Eigen::Index>(i);
        return {x_[k], z_[k]};
    }

    /// Same operator with zeta^s multiplied in.
    PauliElement with_phase_shift(Exponent s) const;

    friend bool operator==(const PauliElement &a, const PauliElement &b);
    /// Lexicographic on (x exponents, z exponents, phase). Only meaningful within one profile.
    friend std::strong_ordering operator<=>(const PauliElement &a, const PauliElement &b);

   private:
    Profile profile_;
    Exponent phase_;
    ExponentVector x_;
    ExponentVector z_;
};

struct PauliElementHash {
    std::size_t operator()(const PauliElement &g) const noexcept;
};

PauliElement identity(const Profile &profile);

/// zeta^c times the identity.
PauliElement scalar(const Profile &profile, Exponent c);

/// X^p Z^q on `site`, identity elsewhere. Exponents of any sign are reduced mod k.
PauliElement weyl(const Profile &profile, std::size_t site, Exponent p, Exponent q);

/// Group law. With h_i = L/k_i:
///   c = c_a + c_b + sum_i 2 h_i q_{a,i} p_{b,i}  (mod 2L)
///   p_i = p_{a,i} + p_{b,i}, q_i = q_{a,i} + q_{b,i}  (mod k_i)
/// The cross term comes from moving Z^{q_a} past X^{p_b}: Z X = omega X Z.
PauliElement multiply(const PauliElement &a, const PauliElement &b);

inline PauliElement operator*(const PauliElement &a, const PauliElement &b) {
    return multiply(a, b);
}

PauliElement inverse(const PauliElement &a);

/// a^m for any integer m; negative m goes through inverse(a).
PauliElement power(const PauliElement &a, std::int64_t m);

/// Smallest m >= 1 with a^m = identity, found by iterated multiplication.
std::uint64_t order_of(const PauliElement &a);

/// The s in Z_{2L} with a*b = zeta^s * b*a.
Exponent commutator_phase(const PauliElement &a, const PauliElement &b);

inline bool commutes(const PauliElement &a, const PauliElement &b) {
    return commutator_phase(a, b) == 0;
}

ScalarKind scalar_kind(const PauliElement &a);

/// Throws ProfileMismatchError unless both operands share a dimension profile.
void require_same_profile(const DimensionProfile &a, const DimensionProfile &b);

/// Uniformly random element of the full group over `profile`.
template <typename Rng>
PauliElement random_element(const Profile &profile, Rng &rng) {
    auto n = static_cast<Eigen::Index>(profile->num_sites());
    ExponentVector x(n), z(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        std::uniform_int_distribution<Exponent> site_dist(0, profile->dims()[i] - 1);
        x[i] = site_dist(rng);
        z[i] = site_dist(rng);
    }
    std::uniform_int_distribution<Exponent> phase_dist(0, profile->phase_modulus() - 1);
    Exponent c = phase_dist(rng);
    return PauliElement(profile, c, std::move(x), std::move(z));
}

}  // namespace gpauli

#endif
