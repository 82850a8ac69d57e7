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

#include "gpauli/element.hpp"

#include "gpauli/errors.hpp"

namespace gpauli {

namespace {

ExponentVector reduce_sites(const ExponentVector &v, const ExponentVector &dims) {
    return v.binaryExpr(dims, [](Exponent e, Exponent k) { return floor_mod(e, k); });
}

// sum_i 2 h_i u_i v_i, the zeta exponent picked up by reordering Z^u past X^v.
Exponent cross_phase(const DimensionProfile &profile, const ExponentVector &u, const ExponentVector &v) {
    return 2 * (profile.weights().array() * u.array() * v.array()).sum();
}

}  // namespace

void require_same_profile(const DimensionProfile &a, const DimensionProfile &b) {
    if (&a != &b && !(a == b)) {
        throw ProfileMismatchError("elements belong to different dimension profiles [" + a.str() + "] vs [" +
                                   b.str() + "]");
    }
}

PauliElement::PauliElement(Profile profile, Exponent phase_exp, ExponentVector x_exps, ExponentVector z_exps)
    : profile_(std::move(profile)) {
    auto n = static_cast<Eigen::Index>(profile_->num_sites());
    if (x_exps.size() != n || z_exps.size() != n) {
        throw ProfileMismatchError("expected " + std::to_string(n) + " sites, got " +
                                   std::to_string(x_exps.size()));
    }
    phase_ = floor_mod(phase_exp, profile_->phase_modulus());
    x_ = reduce_sites(x_exps, profile_->dims());
    z_ = reduce_sites(z_exps, profile_->dims());
}

PauliElement PauliElement::with_phase_shift(Exponent s) const {
    return PauliElement(profile_, phase_ + s, x_, z_);
}

bool operator==(const PauliElement &a, const PauliElement &b) {
    return a.phase_ == b.phase_ && a.x_ == b.x_ && a.z_ == b.z_;
}

std::strong_ordering operator<=>(const PauliElement &a, const PauliElement &b) {
    for (Eigen::Index i = 0; i < a.x_.size(); ++i) {
        if (auto c = a.x_[i] <=> b.x_[i]; c != 0) {
            return c;
        }
    }
    for (Eigen::Index i = 0; i < a.z_.size(); ++i) {
        if (auto c = a.z_[i] <=> b.z_[i]; c != 0) {
            return c;
        }
    }
    return a.phase_ <=> b.phase_;
}

std::size_t PauliElementHash::operator()(const PauliElement &g) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(g.phase_exp());
    auto mix = [&h](Exponent v) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (Eigen::Index i = 0; i < g.x_exps().size(); ++i) {
        mix(g.x_exps()[i]);
        mix(g.z_exps()[i]);
    }
    return static_cast<std::size_t>(h);
}

PauliElement identity(const Profile &profile) {
    auto n = static_cast<Eigen::Index>(profile->num_sites());
    return PauliElement(profile, 0, ExponentVector::Zero(n), ExponentVector::Zero(n));
}

PauliElement scalar(const Profile &profile, Exponent c) {
    return identity(profile).with_phase_shift(c);
}

PauliElement weyl(const Profile &profile, std::size_t site, Exponent p, Exponent q) {
    if (site >= profile->num_sites()) {
        throw std::out_of_range("site index " + std::to_string(site) + " out of range for " +
                                std::to_string(profile->num_sites()) + " sites");
    }
    auto n = static_cast<Eigen::Index>(profile->num_sites());
    ExponentVector x = ExponentVector::Zero(n);
    ExponentVector z = ExponentVector::Zero(n);
    x[static_cast<Eigen::Index>(site)] = p;
    z[static_cast<Eigen::Index>(site)] = q;
    return PauliElement(profile, 0, std::move(x), std::move(z));
}

PauliElement multiply(const PauliElement &a, const PauliElement &b) {
    require_same_profile(a.profile(), b.profile());
    Exponent c = a.phase_exp() + b.phase_exp() + cross_phase(a.profile(), a.z_exps(), b.x_exps());
    return PauliElement(a.profile_ptr(), c, a.x_exps() + b.x_exps(), a.z_exps() + b.z_exps());
}

PauliElement inverse(const PauliElement &a) {
    Exponent c = -a.phase_exp() + cross_phase(a.profile(), a.z_exps(), a.x_exps());
    return PauliElement(a.profile_ptr(), c, -a.x_exps(), -a.z_exps());
}

PauliElement power(const PauliElement &a, std::int64_t m) {
    if (m < 0) {
        return power(inverse(a), -m);
    }
    PauliElement result = identity(a.profile_ptr());
    PauliElement base = a;
    auto e = static_cast<std::uint64_t>(m);
    while (e) {
        if (e & 1) {
            result = multiply(result, base);
        }
        e >>= 1;
        if (e) {
            base = multiply(base, base);
        }
    }
    return result;
}

std::uint64_t order_of(const PauliElement &a) {
    const PauliElement e = identity(a.profile_ptr());
    PauliElement acc = a;
    std::uint64_t m = 1;
    while (!(acc == e)) {
        acc = multiply(acc, a);
        ++m;
    }
    return m;
}

Exponent commutator_phase(const PauliElement &a, const PauliElement &b) {
    require_same_profile(a.profile(), b.profile());
    const auto &p = a.profile();
    return floor_mod(cross_phase(p, a.z_exps(), b.x_exps()) - cross_phase(p, b.z_exps(), a.x_exps()),
                     p.phase_modulus());
}

ScalarKind scalar_kind(const PauliElement &a) {
    if ((a.x_exps().array() != 0).any() || (a.z_exps().array() != 0).any()) {
        return ScalarKind::not_scalar;
    }
    return a.phase_exp() == 0 ? ScalarKind::identity_scalar : ScalarKind::nonidentity_scalar;
}

}  // namespace gpauli
