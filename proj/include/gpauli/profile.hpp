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

#ifndef GPAULI_PROFILE_HPP
#define GPAULI_PROFILE_HPP

#include <Eigen/Core>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gpauli {

using Exponent = std::int64_t;
using ExponentVector = Eigen::Matrix<Exponent, Eigen::Dynamic, 1>;

/// Non-negative residue of `a` modulo `m` (m > 0).
inline Exponent floor_mod(Exponent a, Exponent m) {
    Exponent r = a % m;
    return r < 0 ? r + m : r;
}

/// Site dimensions k_1..k_n of a composite system together with L = lcm(k_i)
/// and the weights h_i = L / k_i.
///
/// The global phase of an element is zeta^c with zeta = exp(i*pi/L), so phase
/// exponents live in Z_{2L}. The per-site clock phase omega_i = exp(2*pi*i/k_i)
/// equals zeta^(2*h_i).
class DimensionProfile {
   public:
    explicit DimensionProfile(std::vector<Exponent> dims);

    std::size_t num_sites() const {
        return static_cast<std::size_t>(dims_.size());
    }
    const ExponentVector &dims() const {
        return dims_;
    }
    Exponent dim(std::size_t site) const {
        return dims_[static_cast<Eigen::Index>(site)];
    }
    Exponent lcm() const {
        return lcm_;
    }
    /// 2L, the order of zeta.
    Exponent phase_modulus() const {
        return 2 * lcm_;
    }
    const ExponentVector &weights() const {
        return weights_;
    }
    /// Product of the site dimensions (the Hilbert space dimension N).
    std::uint64_t hilbert_dim() const {
        return hilbert_dim_;
    }

    std::string str() const;

    friend bool operator==(const DimensionProfile &a, const DimensionProfile &b) {
        return a.dims_.size() == b.dims_.size() && a.dims_ == b.dims_;
    }

   private:
    ExponentVector dims_;
    ExponentVector weights_;
    Exponent lcm_;
    std::uint64_t hilbert_dim_;
};

using Profile = std::shared_ptr<const DimensionProfile>;

/// Throws ProfileError for an empty list or any k_i < 1.
Profile make_profile(std::vector<Exponent> dims);

}  // namespace gpauli

#endif
