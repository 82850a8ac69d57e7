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

#include "gpauli/monomial.hpp"

#include <stdexcept>
#include <string>

namespace gpauli {

MonomialMatrix::MonomialMatrix(std::vector<std::size_t> perm, std::vector<Exponent> col_phase,
                               Exponent phase_modulus)
    : perm_(std::move(perm)), phase_(std::move(col_phase)), modulus_(phase_modulus) {
    if (modulus_ < 1) {
        throw std::invalid_argument("phase modulus must be positive");
    }
    if (perm_.size() != phase_.size()) {
        throw std::invalid_argument("permutation and phase lists differ in length");
    }
    std::vector<bool> used(perm_.size(), false);
    for (std::size_t row : perm_) {
        if (row >= perm_.size() || used[row]) {
            throw std::invalid_argument("column-to-row map is not a bijection");
        }
        used[row] = true;
    }
    for (auto &c : phase_) {
        c = floor_mod(c, modulus_);
    }
}

MonomialMatrix MonomialMatrix::identity(std::size_t n, Exponent phase_modulus) {
    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j) {
        perm[j] = j;
    }
    return MonomialMatrix(std::move(perm), std::vector<Exponent>(n, 0), phase_modulus);
}

MonomialMatrix matmul(const MonomialMatrix &a, const MonomialMatrix &b) {
    if (a.size() != b.size() || a.phase_modulus() != b.phase_modulus()) {
        throw std::invalid_argument("monomial product: size or phase modulus mismatch");
    }
    // B sends e_j to zeta^{b_j} e_{pb(j)}; A then sends that column on to row pa(pb(j)).
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::vector<Exponent> phase(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t mid = b.perm()[j];
        perm[j] = a.perm()[mid];
        phase[j] = b.col_phase()[j] + a.col_phase()[mid];
    }
    return MonomialMatrix(std::move(perm), std::move(phase), a.phase_modulus());
}

MonomialMatrix matrix_power(const MonomialMatrix &a, std::uint64_t m) {
    MonomialMatrix result = MonomialMatrix::identity(a.size(), a.phase_modulus());
    for (std::uint64_t i = 0; i < m; ++i) {
        result = matmul(result, a);
    }
    return result;
}

MonomialMatrix kron(const MonomialMatrix &a, const MonomialMatrix &b) {
    if (a.phase_modulus() != b.phase_modulus()) {
        throw std::invalid_argument("Kronecker product: phase modulus mismatch");
    }
    const std::size_t nb = b.size();
    const std::size_t n = a.size() * nb;
    std::vector<std::size_t> perm(n);
    std::vector<Exponent> phase(n);
    for (std::size_t ja = 0; ja < a.size(); ++ja) {
        for (std::size_t jb = 0; jb < nb; ++jb) {
            const std::size_t j = ja * nb + jb;
            perm[j] = a.perm()[ja] * nb + b.perm()[jb];
            phase[j] = a.col_phase()[ja] + b.col_phase()[jb];
        }
    }
    return MonomialMatrix(std::move(perm), std::move(phase), a.phase_modulus());
}

MonomialMatrix scale_by_root(const MonomialMatrix &a, Exponent c) {
    std::vector<Exponent> phase = a.col_phase();
    for (auto &p : phase) {
        p += c;
    }
    return MonomialMatrix(a.perm(), std::move(phase), a.phase_modulus());
}

MonomialMatrix x_matrix(Exponent d, const DimensionProfile &profile) {
    if (d < 1) {
        throw std::invalid_argument("site dimension must be >= 1");
    }
    const auto n = static_cast<std::size_t>(d);
    std::vector<std::size_t> perm(n);
    for (std::size_t x = 0; x < n; ++x) {
        perm[x] = (x + 1) % n;
    }
    return MonomialMatrix(std::move(perm), std::vector<Exponent>(n, 0), profile.phase_modulus());
}

MonomialMatrix x_matrix(Exponent d) {
    return x_matrix(d, DimensionProfile({d}));
}

MonomialMatrix z_matrix(Exponent d, const DimensionProfile &profile) {
    if (d < 1 || profile.lcm() % d != 0) {
        throw std::invalid_argument("clock dimension " + std::to_string(d) + " does not divide L = " +
                                    std::to_string(profile.lcm()));
    }
    const Exponent h = profile.lcm() / d;
    const auto n = static_cast<std::size_t>(d);
    std::vector<std::size_t> perm(n);
    std::vector<Exponent> phase(n);
    for (std::size_t x = 0; x < n; ++x) {
        perm[x] = x;
        phase[x] = 2 * h * static_cast<Exponent>(x);
    }
    return MonomialMatrix(std::move(perm), std::move(phase), profile.phase_modulus());
}

MonomialMatrix z_matrix(Exponent d) {
    return z_matrix(d, DimensionProfile({d}));
}

MonomialMatrix element_to_matrix(const PauliElement &g, const Limits &limits) {
    const DimensionProfile &profile = g.profile();
    if (profile.hilbert_dim() > limits.max_matrix_dim) {
        throw ResourceLimitError("matrix dimension " + std::to_string(profile.hilbert_dim()) +
                                 " exceeds the cap of " + std::to_string(limits.max_matrix_dim));
    }
    MonomialMatrix acc = MonomialMatrix::identity(1, profile.phase_modulus());
    for (std::size_t i = 0; i < g.num_sites(); ++i) {
        const Exponent d = profile.dim(i);
        auto [p, q] = g.site(i);
        MonomialMatrix local = matmul(matrix_power(x_matrix(d, profile), static_cast<std::uint64_t>(p)),
                                      matrix_power(z_matrix(d, profile), static_cast<std::uint64_t>(q)));
        acc = kron(acc, local);
    }
    return scale_by_root(acc, g.phase_exp());
}

CyclotomicSum::CyclotomicSum(Exponent phase_modulus) {
    if (phase_modulus < 2 || phase_modulus % 2 != 0) {
        throw std::invalid_argument("cyclotomic modulus must be a positive even number");
    }
    coeffs_.assign(static_cast<std::size_t>(phase_modulus / 2), 0);
}

void CyclotomicSum::add_root(Exponent j, std::int64_t count) {
    const auto half = static_cast<Exponent>(coeffs_.size());
    const Exponent r = floor_mod(j, 2 * half);
    if (r < half) {
        coeffs_[static_cast<std::size_t>(r)] += count;
    } else {
        coeffs_[static_cast<std::size_t>(r - half)] -= count;
    }
}

CyclotomicSum &CyclotomicSum::operator+=(const CyclotomicSum &other) {
    if (other.coeffs_.size() != coeffs_.size()) {
        throw std::invalid_argument("cyclotomic sums over different moduli");
    }
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        coeffs_[j] += other.coeffs_[j];
    }
    return *this;
}

CyclotomicSum trace(const MonomialMatrix &a) {
    CyclotomicSum t(a.phase_modulus());
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a.perm()[j] == j) {
            t.add_root(a.col_phase()[j]);
        }
    }
    return t;
}

}  // namespace gpauli
