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

#ifndef GPAULI_ORACLE_HPP
#define GPAULI_ORACLE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <vector>

#include "gpauli/monomial.hpp"
#include "gpauli/subgroup.hpp"

namespace gpauli {

template <typename Scalar = double>
using DenseMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar = double>
using StateVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

/// Distance from an integer tolerated before a projector trace is rounded.
inline constexpr double kTraceTolerance = 1e-6;
/// Relative pivot threshold for rank decisions on unit-magnitude entries.
inline constexpr double kRankTolerance = 1e-9;
inline constexpr double kIdempotenceTolerance = 1e-9;
inline constexpr double kFixedPointTolerance = 1e-8;

/// Exact sum of Tr(g) over all g in s.
CyclotomicSum summed_trace(const Subgroup &s, const Limits &limits = {});

/// Tr P_S = (1/|S|) sum_g Tr(g), evaluated in floating point and rounded.
/// Throws ConsistencyError if the value is not within kTraceTolerance of a
/// non-negative integer.
std::uint64_t projector_trace(const Subgroup &s, const Limits &limits = {});

namespace detail {
inline void require_dense_fits(const DimensionProfile &profile, const Limits &limits) {
    if (profile.hilbert_dim() > limits.max_matrix_dim) {
        throw ResourceLimitError("dense matrix dimension " + std::to_string(profile.hilbert_dim()) +
                                 " exceeds the cap of " + std::to_string(limits.max_matrix_dim));
    }
}
}  // namespace detail

/// P_S = (1/|S|) sum_{g in S} g as a dense matrix.
template <typename Scalar = double>
DenseMatrix<Scalar> projector_matrix(const Subgroup &s, const Limits &limits = {}) {
    detail::require_dense_fits(s.profile(), limits);
    const auto n = static_cast<Eigen::Index>(s.profile().hilbert_dim());
    DenseMatrix<Scalar> p = DenseMatrix<Scalar>::Zero(n, n);
    for (const auto &g : s.elements()) {
        const MonomialMatrix m = element_to_matrix(g, limits);
        for (std::size_t j = 0; j < m.size(); ++j) {
            p(static_cast<Eigen::Index>(m.perm()[j]), static_cast<Eigen::Index>(j)) +=
                root_of_unity<Scalar>(m.col_phase()[j], m.phase_modulus());
        }
    }
    return p / static_cast<Scalar>(s.order());
}

/// max |(P^2 - P)_{ij}|.
template <typename Derived>
auto idempotence_residual(const Eigen::MatrixBase<Derived> &p) {
    return (p * p - p).cwiseAbs().maxCoeff();
}

/// max over g in S of max |(P M_g - P)_{ij}|; zero when P absorbs every element.
template <typename Scalar>
Scalar absorption_residual(const Subgroup &s, const DenseMatrix<Scalar> &p, const Limits &limits = {}) {
    Scalar worst = 0;
    for (const auto &g : s.elements()) {
        const DenseMatrix<Scalar> m = element_to_matrix(g, limits).template to_dense<Scalar>();
        worst = std::max(worst, (p * m - p).cwiseAbs().maxCoeff());
    }
    return worst;
}

/// max over g in S of ||M_g v - v||_2.
template <typename Scalar>
Scalar fixed_point_residual(const Subgroup &s, const StateVector<Scalar> &v, const Limits &limits = {}) {
    Scalar worst = 0;
    for (const auto &g : s.elements()) {
        const DenseMatrix<Scalar> m = element_to_matrix(g, limits).template to_dense<Scalar>();
        worst = std::max(worst, (m * v - v).norm());
    }
    return worst;
}

/// Orthonormal basis of the range of P_S, via column-pivoted QR. Empty for a
/// trivial stabilizer.
template <typename Scalar = double>
std::vector<StateVector<Scalar>> stabilized_basis(const Subgroup &s, const Limits &limits = {}) {
    detail::require_dense_fits(s.profile(), limits);
    if (!is_nontrivial(s)) {
        return {};
    }
    const DenseMatrix<Scalar> p = projector_matrix<Scalar>(s, limits);
    Eigen::ColPivHouseholderQR<DenseMatrix<Scalar>> qr(p);
    qr.setThreshold(static_cast<Scalar>(kRankTolerance));
    const Eigen::Index rank = qr.rank();
    const DenseMatrix<Scalar> q = qr.householderQ();
    std::vector<StateVector<Scalar>> basis;
    basis.reserve(static_cast<std::size_t>(rank));
    for (Eigen::Index j = 0; j < rank; ++j) {
        basis.emplace_back(q.col(j).normalized());
    }
    return basis;
}

/// dim of the common eigenvalue-1 space of the generators: the null space of
/// the stacked blocks (M_g - I).
template <typename Scalar = double>
std::size_t intersection_dimension(const Profile &profile, std::span<const PauliElement> generators,
                                   const Limits &limits = {}) {
    detail::require_dense_fits(*profile, limits);
    const auto n = static_cast<Eigen::Index>(profile->hilbert_dim());
    if (generators.empty()) {
        return static_cast<std::size_t>(n);
    }
    const auto blocks = static_cast<Eigen::Index>(generators.size());
    DenseMatrix<Scalar> stacked(blocks * n, n);
    for (Eigen::Index b = 0; b < blocks; ++b) {
        const auto &g = generators[static_cast<std::size_t>(b)];
        require_same_profile(*profile, g.profile());
        stacked.block(b * n, 0, n, n) =
            element_to_matrix(g, limits).template to_dense<Scalar>() - DenseMatrix<Scalar>::Identity(n, n);
    }
    Eigen::FullPivLU<DenseMatrix<Scalar>> lu(stacked);
    lu.setThreshold(static_cast<Scalar>(kRankTolerance));
    return static_cast<std::size_t>(n - lu.rank());
}

}  // namespace gpauli

#endif
