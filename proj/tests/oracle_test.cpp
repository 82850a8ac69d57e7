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

#include <gtest/gtest.h>

#include <random>

#include "dense_reference.hpp"
#include "gpauli/oracle.hpp"

using namespace gpauli;

namespace {

ref::Mat reference_matrix(const PauliElement &g) {
    std::vector<long> dims, p, q;
    for (std::size_t i = 0; i < g.num_sites(); ++i) {
        dims.push_back(g.profile().dim(i));
        p.push_back(g.site(i).first);
        q.push_back(g.site(i).second);
    }
    return ref::element(dims, g.phase_exp(), p, q);
}

Eigen::MatrixXcd pauli(std::initializer_list<std::complex<double>> entries) {
    Eigen::MatrixXcd m(2, 2);
    auto it = entries.begin();
    m << it[0], it[1], it[2], it[3];
    return m;
}

const std::complex<double> I{0.0, 1.0};

}  // namespace

TEST(Monomial, ShiftAndClockMatrices) {
    EXPECT_TRUE(ref::approx_equal(x_matrix(2).to_dense(), pauli({0, 1, 1, 0})));
    EXPECT_TRUE(ref::approx_equal(z_matrix(2).to_dense(), pauli({1, 0, 0, -1})));
    EXPECT_EQ(x_matrix(1).to_dense()(0, 0), std::complex<double>(1.0));
    EXPECT_EQ(z_matrix(1).to_dense()(0, 0), std::complex<double>(1.0));

    const MonomialMatrix x3 = x_matrix(3);
    EXPECT_EQ(x3.perm(), (std::vector<std::size_t>{1, 2, 0}));
    EXPECT_TRUE(ref::approx_equal(x3.to_dense(), ref::shift(3)));
    EXPECT_TRUE(ref::approx_equal(z_matrix(3).to_dense(), ref::clock(3)));

    auto p = make_profile({2, 3});
    EXPECT_EQ(z_matrix(3, *p).col_phase(), (std::vector<Exponent>{0, 4, 8}));
    EXPECT_THROW(z_matrix(4, *p), std::invalid_argument);
}

TEST(Monomial, ConstructorRejectsNonBijection) {
    EXPECT_THROW(MonomialMatrix({0, 0}, {0, 0}, 4), std::invalid_argument);
    EXPECT_THROW(MonomialMatrix({0, 2}, {0, 0}, 4), std::invalid_argument);
    EXPECT_THROW(MonomialMatrix({0, 1}, {0}, 4), std::invalid_argument);
}

TEST(Monomial, MatmulBasics) {
    const MonomialMatrix x = x_matrix(2), z = z_matrix(2);
    EXPECT_TRUE(ref::approx_equal((x * z).to_dense(), x.to_dense() * z.to_dense()));
    EXPECT_EQ(x * MonomialMatrix::identity(2, 4), x);
    EXPECT_EQ(MonomialMatrix::identity(2, 4) * x, x);
    EXPECT_THROW(matmul(x, x_matrix(3)), std::invalid_argument);
}

TEST(Monomial, QubitPaulisAndAnticommutation) {
    auto p = make_profile({2, 2, 2});
    for (std::size_t site = 0; site < 3; ++site) {
        const MonomialMatrix x = x_matrix(2, *p), z = z_matrix(2, *p);
        EXPECT_TRUE(ref::approx_equal(x.to_dense(), pauli({0, 1, 1, 0})));
        EXPECT_TRUE(ref::approx_equal(z.to_dense(), pauli({1, 0, 0, -1})));
        // Y = i X Z
        EXPECT_TRUE(ref::approx_equal(scale_by_root(x * z, 1).to_dense(), pauli({0, -I, I, 0})));
        EXPECT_EQ(x * z, scale_by_root(z * x, 2));
        const PauliElement xe = weyl(p, site, 1, 0), ze = weyl(p, site, 0, 1);
        EXPECT_EQ(xe * ze, (ze * xe).with_phase_shift(2));
    }
}

TEST(Monomial, ClockShiftRelationAtMatrixLevel) {
    for (Exponent d = 2; d <= 7; ++d) {
        const DimensionProfile profile({d});
        const MonomialMatrix x = x_matrix(d, profile), z = z_matrix(d, profile);
        EXPECT_EQ(scale_by_root(x * z, 2 * profile.weights()[0]), z * x) << "d=" << d;
    }
}

TEST(Monomial, ElementToMatrixExamples) {
    auto p = make_profile({2, 3});
    EXPECT_EQ(element_to_matrix(identity(p)), MonomialMatrix::identity(6, 12));

    auto p2 = make_profile({2});
    EXPECT_TRUE(ref::approx_equal(element_to_matrix(weyl(p2, 0, 1, 0)).to_dense(), pauli({0, 1, 1, 0})));
    const PauliElement minus_xz(p2, 2, ExponentVector::Ones(1), ExponentVector::Ones(1));
    const Eigen::MatrixXcd xz = pauli({0, 1, 1, 0}) * pauli({1, 0, 0, -1});
    EXPECT_TRUE(ref::approx_equal(element_to_matrix(minus_xz).to_dense(), -xz));

    Limits tight;
    tight.max_matrix_dim = 4;
    EXPECT_THROW(element_to_matrix(identity(p), tight), ResourceLimitError);
}

TEST(Monomial, ElementToMatrixMatchesDenseReference) {
    std::mt19937_64 rng(31);
    for (auto dims : std::vector<std::vector<Exponent>>{{2}, {3}, {2, 3}, {4, 6}, {1, 5}}) {
        auto p = make_profile(dims);
        for (int t = 0; t < 100; ++t) {
            const PauliElement g = random_element(p, rng);
            ASSERT_TRUE(ref::approx_equal(element_to_matrix(g).to_dense(), reference_matrix(g)));
        }
    }
}

TEST(MonomialProperty, Homomorphism) {
    std::mt19937_64 rng(32);
    for (auto dims : std::vector<std::vector<Exponent>>{{2}, {3}, {2, 3}, {4, 6}}) {
        auto p = make_profile(dims);
        for (int t = 0; t < 1000; ++t) {
            const PauliElement a = random_element(p, rng), b = random_element(p, rng);
            ASSERT_EQ(element_to_matrix(a * b), element_to_matrix(a) * element_to_matrix(b));
        }
    }
}

TEST(Trace, Examples) {
    EXPECT_EQ(trace(x_matrix(3)).evaluate(), std::complex<double>(0.0));
    EXPECT_NEAR(std::abs(trace(z_matrix(3)).evaluate()), 0.0, 1e-12);
    const CyclotomicSum tn = trace(MonomialMatrix::identity(6, 12));
    EXPECT_EQ(tn.coefficients()[0], 6);
    EXPECT_EQ(tn.evaluate(), std::complex<double>(6.0));
}

TEST(Trace, CyclotomicFold) {
    CyclotomicSum s(12);
    s.add_root(7);  // zeta^7 = -zeta^1
    s.add_root(1);
    EXPECT_EQ(s, CyclotomicSum(12));
    s.add_root(-1, 2);  // zeta^-1 = zeta^11 = -zeta^5
    EXPECT_EQ(s.coefficients()[5], -2);
    EXPECT_NEAR(std::abs(s.evaluate() - 2.0 * std::polar(1.0, -std::numbers::pi / 6)), 0.0, 1e-12);
}

TEST(Trace, MatchesDenseTrace) {
    std::mt19937_64 rng(33);
    auto p = make_profile({2, 3});
    for (int t = 0; t < 200; ++t) {
        const PauliElement g = random_element(p, rng);
        EXPECT_NEAR(std::abs(trace(element_to_matrix(g)).evaluate() - reference_matrix(g).trace()), 0.0, 1e-9);
    }
}

TEST(ProjectorTrace, Examples) {
    auto p2 = make_profile({2});
    EXPECT_EQ(projector_trace(closure(p2, {scalar(p2, 2)})), 0u);
    EXPECT_EQ(projector_trace(closure(p2, {weyl(p2, 0, 1, 0)})), 1u);

    auto p = make_profile({2, 3});
    EXPECT_EQ(projector_trace(closure(p, {weyl(p, 1, 1, 0)})), 2u);
}

TEST(ProjectorMatrix, Examples) {
    auto p2 = make_profile({2});
    EXPECT_TRUE(ref::approx_equal(projector_matrix(closure(p2, std::span<const PauliElement>{})),
                                  Eigen::MatrixXcd::Identity(2, 2)));
    EXPECT_TRUE(ref::approx_equal(projector_matrix(closure(p2, {scalar(p2, 2)})), Eigen::MatrixXcd::Zero(2, 2)));
    EXPECT_TRUE(ref::approx_equal(projector_matrix(closure(p2, {weyl(p2, 0, 0, 1)})), pauli({1, 0, 0, 0})));
}

TEST(ProjectorMatrix, IdempotentAndAbsorbing) {
    std::mt19937_64 rng(34);
    for (auto dims : std::vector<std::vector<Exponent>>{{2, 3}, {4}, {3, 3}}) {
        auto p = make_profile(dims);
        for (int t = 0; t < 30; ++t) {
            const Subgroup s = closure(p, {random_element(p, rng), random_element(p, rng)});
            const auto proj = projector_matrix(s);
            EXPECT_LE(idempotence_residual(proj), kIdempotenceTolerance);
            EXPECT_LE(absorption_residual(s, proj), kIdempotenceTolerance);
            EXPECT_NEAR(proj.trace().real(), static_cast<double>(projector_trace(s)), 1e-9);
        }
    }
}

TEST(ProjectorMatrix, LongDoubleScalar) {
    auto p = make_profile({2, 3});
    const Subgroup s = closure(p, {weyl(p, 0, 0, 1), weyl(p, 1, 1, 0)});
    const auto proj = projector_matrix<long double>(s);
    EXPECT_LE(idempotence_residual(proj), 1e-15L);
    EXPECT_EQ(stabilized_basis<long double>(s).size(), 1u);
}

TEST(ProjectorMatrix, DenseCap) {
    auto p = make_profile({2, 3});
    Limits tight;
    tight.max_matrix_dim = 5;
    const Subgroup s = closure(p, {weyl(p, 1, 1, 0)});
    EXPECT_THROW(projector_matrix(s, tight), ResourceLimitError);
    EXPECT_THROW(stabilized_basis(s, tight), ResourceLimitError);
    const std::vector<PauliElement> gens{weyl(p, 1, 1, 0)};
    EXPECT_THROW(intersection_dimension(p, gens, tight), ResourceLimitError);
}

TEST(StabilizedBasis, Examples) {
    auto p2 = make_profile({2});
    auto zb = stabilized_basis(closure(p2, {weyl(p2, 0, 0, 1)}));
    ASSERT_EQ(zb.size(), 1u);
    EXPECT_NEAR(std::abs(zb[0][0]), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(zb[0][1]), 0.0, 1e-12);

    auto xb = stabilized_basis(closure(p2, {weyl(p2, 0, 1, 0)}));
    ASSERT_EQ(xb.size(), 1u);
    Eigen::VectorXcd plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(plus.dot(xb[0])), 1.0, 1e-12);

    auto p = make_profile({2, 3});
    const Subgroup row1 = closure(p, {weyl(p, 0, 1, 0) * weyl(p, 1, 1, 0)});
    auto b1 = stabilized_basis(row1);
    ASSERT_EQ(b1.size(), 1u);
    EXPECT_NEAR(b1[0].norm(), 1.0, 1e-12);
    EXPECT_LE(fixed_point_residual(row1, b1[0]), kFixedPointTolerance);

    EXPECT_TRUE(stabilized_basis(closure(p2, {scalar(p2, 2)})).empty());
}

TEST(StabilizedBasis, OrthonormalAndFixed) {
    std::mt19937_64 rng(35);
    auto p = make_profile({2, 3});
    for (int t = 0; t < 60; ++t) {
        const Subgroup s = closure(p, {random_element(p, rng)});
        const auto basis = stabilized_basis(s);
        ASSERT_EQ(basis.size(), is_nontrivial(s) ? projector_trace(s) : 0u);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            EXPECT_LE(fixed_point_residual(s, basis[i]), kFixedPointTolerance);
            for (std::size_t j = 0; j < basis.size(); ++j) {
                EXPECT_NEAR(std::abs(basis[i].dot(basis[j])), i == j ? 1.0 : 0.0, 1e-9);
            }
        }
    }
}

TEST(Intersection, Examples) {
    auto p2 = make_profile({2});
    const std::vector<PauliElement> z{weyl(p2, 0, 0, 1)};
    EXPECT_EQ(intersection_dimension(p2, z), 1u);

    auto p = make_profile({2, 3});
    const std::vector<PauliElement> row4{weyl(p, 0, 0, 1), weyl(p, 1, 1, 0)};
    EXPECT_EQ(intersection_dimension(p, row4), 1u);
    const std::vector<PauliElement> row2{weyl(p, 1, 1, 0)};
    EXPECT_EQ(intersection_dimension(p, row2), 2u);
    EXPECT_EQ(intersection_dimension(p, std::span<const PauliElement>{}), 6u);

    const std::vector<PauliElement> minus{scalar(p2, 2)};
    EXPECT_EQ(intersection_dimension(p2, minus), 0u);
}
