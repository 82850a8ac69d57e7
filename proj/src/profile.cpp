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

#include "gpauli/profile.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#include "gpauli/errors.hpp"

namespace gpauli {

namespace {

// Keeps 2L * (prod k)^2 and friends comfortably inside 64 bits.
constexpr Exponent kMaxLcm = Exponent{1} << 30;

}  // namespace

DimensionProfile::DimensionProfile(std::vector<Exponent> dims) {
    if (dims.empty()) {
        throw ProfileError("dimension list must be non-empty");
    }
    Exponent l = 1;
    std::uint64_t n = 1;
    for (Exponent k : dims) {
        if (k < 1) {
            throw ProfileError("site dimension must be >= 1, got " + std::to_string(k));
        }
        l = std::lcm(l, k);
        if (l > kMaxLcm) {
            throw ProfileError("lcm of site dimensions is too large");
        }
        if (n > std::numeric_limits<std::uint32_t>::max() / static_cast<std::uint64_t>(k)) {
            throw ProfileError("product of site dimensions is too large");
        }
        n *= static_cast<std::uint64_t>(k);
    }
    dims_ = Eigen::Map<const ExponentVector>(dims.data(), static_cast<Eigen::Index>(dims.size()));
    lcm_ = l;
    weights_ = dims_.unaryExpr([l](Exponent k) { return l / k; });
    hilbert_dim_ = n;
}

std::string DimensionProfile::str() const {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < dims_.size(); ++i) {
        if (i) {
            out << ',';
        }
        out << dims_[i];
    }
    return out.str();
}

Profile make_profile(std::vector<Exponent> dims) {
    return std::make_shared<const DimensionProfile>(std::move(dims));
}

}  // namespace gpauli
