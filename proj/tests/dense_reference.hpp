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

// Test-only reference built straight from the operator definitions with
// floating-point dense matrices. Shares no code with the library's group law
// or monomial arithmetic.

#ifndef GPAULI_TESTS_DENSE_REFERENCE_HPP
#define GPAULI_TESTS_DENSE_REFERENCE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <deque>
#include <map>
#include <numbers>
#include <numeric>
#include <vector>

namespace ref {

using Mat = Eigen::MatrixXcd;
using Cplx = std::complex<double>;

inline Cplx unit(double turns) {
    return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

inline long brute_lcm(const std::vector<long> &dims) {
    for (long m = 1;; ++m) {
        bool all = true;
        for (long k : dims) {
            all = all && m % k == 0;
        }
        if (all) {
            return m;
        }
    }
}

/// X_d |x> = |x+1 mod d>
inline Mat shift(long d) {
    Mat m = Mat::Zero(d, d);
    for (long x = 0; x < d; ++x) {
        m((x + 1) % d, x) = 1.0;
    }
    return m;
}

/// Z_d |x> = exp(2 pi i x / d) |x>
inline Mat clock(long d) {
    Mat m = Mat::Zero(d, d);
    for (long x = 0; x < d; ++x) {
        m(x, x) = unit(static_cast<double>(x) / static_cast<double>(d));
    }
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Mat mpow(const Mat &a, long m) {
    Mat r = Mat::Identity(a.rows(), a.cols());
    for (long i = 0; i < m; ++i) {
        r = r * a;
    }
    return r;
}

/// exp(i pi c / L) * kron_i X^{p_i} Z^{q_i}
inline Mat element(const std::vector<long> &dims, long c, const std::vector<long> &p, const std::vector<long> &q) {
    const long l = brute_lcm(dims);
    Mat acc = Mat::Identity(1, 1);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        acc = kron(acc, mpow(shift(dims[i]), p[i]) * mpow(clock(dims[i]), q[i]));
    }
    return unit(static_cast<double>(c) / (2.0 * static_cast<double>(l))) * acc;
}

inline bool approx_equal(const Mat &a, const Mat &b, double tol = 1e-9) {
    return a.rows() == b.rows() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

/// Rounded-entry key for deduplicating matrices in a BFS.
inline std::vector<long long> key_of(const Mat &m) {
    std::vector<long long> k;
    k.reserve(static_cast<std::size_t>(2 * m.size()));
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        k.push_back(std::llround(m.data()[i].real() * 1e6));
        k.push_back(std::llround(m.data()[i].imag() * 1e6));
    }
    return k;
}

/// Every product of the generators (finite group), by BFS over dense matrices.
inline std::vector<Mat> closure(const std::vector<Mat> &gens, long n) {
    std::map<std::vector<long long>, Mat> seen;
    std::deque<Mat> frontier{Mat::Identity(n, n)};
    seen.emplace(key_of(frontier.front()), frontier.front());
    while (!frontier.empty()) {
        Mat g = frontier.front();
        frontier.pop_front();
        for (const auto &h : gens) {
            Mat gh = g * h;
            if (seen.emplace(key_of(gh), gh).second) {
                frontier.push_back(gh);
            }
        }
    }
    std::vector<Mat> out;
    for (auto &[k, m] : seen) {
        out.push_back(m);
    }
    return out;
}

/// True if some element is alpha * I with alpha != 1.
inline bool has_nonidentity_scalar(const std::vector<Mat> &group) {
    for (const auto &m : group) {
        const long n = m.rows();
        const Cplx a = m(0, 0);
        if (approx_equal(m, a * Mat::Identity(n, n)) && std::abs(a - Cplx(1.0)) > 1e-9) {
            return true;
        }
    }
    return false;
}

/// Smallest m >= 1 with g^m = I.
inline long order(const Mat &g) {
    Mat acc = g;
    long m = 1;
    while (!approx_equal(acc, Mat::Identity(g.rows(), g.cols()))) {
        acc = acc * g;
        ++m;
    }
    return m;
}

}  // namespace ref

#endif
