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

#ifndef GPAULI_MONOMIAL_HPP
#define GPAULI_MONOMIAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "gpauli/element.hpp"
#include "gpauli/errors.hpp"

namespace gpauli {

/// zeta^j with zeta = exp(i*pi/L), where modulus = 2L.
template <typename Scalar = double>
std::complex<Scalar> root_of_unity(Exponent j, Exponent modulus) {
    const Scalar angle = Scalar(2) * std::numbers::pi_v<Scalar> * static_cast<Scalar>(floor_mod(j, modulus)) /
                         static_cast<Scalar>(modulus);
    return {std::cos(angle), std::sin(angle)};
}

/// Generalized permutation matrix whose nonzero entries are powers of zeta.
///
/// Column j has its single nonzero entry zeta^{col_phase[j]} in row perm[j].
class MonomialMatrix {
   public:
    /// Throws std::invalid_argument if perm is not a bijection on [0, N).
    MonomialMatrix(std::vector<std::size_t> perm, std::vector<Exponent> col_phase, Exponent phase_modulus);

    static MonomialMatrix identity(std::size_t n, Exponent phase_modulus);

    std::size_t size() const {
        return perm_.size();
    }
    Exponent phase_modulus() const {
        return modulus_;
    }
    const std::vector<std::size_t> &perm() const {
        return perm_;
    }
    const std::vector<Exponent> &col_phase() const {
        return phase_;
    }

    friend bool operator==(const MonomialMatrix &a, const MonomialMatrix &b) = default;

    template <typename Scalar = double>
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> to_dense() const {
        const auto n = static_cast<Eigen::Index>(size());
        Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> m =
            Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
        for (Eigen::Index j = 0; j < n; ++j) {
            auto col = static_cast<std::size_t>(j);
            m(static_cast<Eigen::Index>(perm_[col]), j) = root_of_unity<Scalar>(phase_[col], modulus_);
        }
        return m;
    }

   private:
    std::vector<std::size_t> perm_;
    std::vector<Exponent> phase_;
    Exponent modulus_;
};

/// Exact product A * B. Throws std::invalid_argument on size or modulus mismatch.
MonomialMatrix matmul(const MonomialMatrix &a, const MonomialMatrix &b);

inline MonomialMatrix operator*(const MonomialMatrix &a, const MonomialMatrix &b) {
    return matmul(a, b);
}

/// A^m for m >= 0.
MonomialMatrix matrix_power(const MonomialMatrix &a, std::uint64_t m);

/// Kronecker product; the left factor owns the most significant index digit.
MonomialMatrix kron(const MonomialMatrix &a, const MonomialMatrix &b);

/// zeta^c * A.
MonomialMatrix scale_by_root(const MonomialMatrix &a, Exponent c);

/// Shift X_d|x> = |x+1 mod d>, with phases measured against `profile`'s zeta.
MonomialMatrix x_matrix(Exponent d, const DimensionProfile &profile);
/// Shift on a single site of dimension d (zeta = exp(i*pi/d)).
MonomialMatrix x_matrix(Exponent d);

/// Clock Z_d|x> = omega^x|x>, stored as zeta^{2 h x} with h = L/d. Requires d | L.
MonomialMatrix z_matrix(Exponent d, const DimensionProfile &profile);
MonomialMatrix z_matrix(Exponent d);

/// zeta^c times the Kronecker product of per-site X^p Z^q, each assembled from
/// x_matrix/z_matrix powers. Throws ResourceLimitError if N > limits.max_matrix_dim.
MonomialMatrix element_to_matrix(const PauliElement &g, const Limits &limits = {});

/// Integer combination sum_j a_j zeta^j. Exponents are folded into [0, L)
/// using zeta^{j+L} = -zeta^j.
class CyclotomicSum {
   public:
    explicit CyclotomicSum(Exponent phase_modulus);

    Exponent phase_modulus() const {
        return 2 * static_cast<Exponent>(coeffs_.size());
    }
    /// Coefficient of zeta^j for j in [0, L).
    const std::vector<std::int64_t> &coefficients() const {
        return coeffs_;
    }

    void add_root(Exponent j, std::int64_t count = 1);
    CyclotomicSum &operator+=(const CyclotomicSum &other);

    template <typename Scalar = double>
    std::complex<Scalar> evaluate() const {
        std::complex<Scalar> acc{0, 0};
        const Exponent modulus = phase_modulus();
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            if (coeffs_[j] != 0) {
                acc += static_cast<Scalar>(coeffs_[j]) * root_of_unity<Scalar>(static_cast<Exponent>(j), modulus);
            }
        }
        return acc;
    }

    friend bool operator==(const CyclotomicSum &a, const CyclotomicSum &b) = default;

   private:
    std::vector<std::int64_t> coeffs_;
};

/// Sum of zeta^{col_phase[j]} over the fixed points j of perm.
CyclotomicSum trace(const MonomialMatrix &a);

}  // namespace gpauli

#endif
