/*
* Copyright (C) 2026 netepi contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#ifndef NETEPI_TESTS_ORACLES_H
#define NETEPI_TESTS_ORACLES_H

// Test-only reference computations. Nothing here calls into the library's numerical
// kernels, so agreement with them is an independent check.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle
{

using Vec = std::vector<double>;
using Field = std::function<Vec(const Vec&)>;

/// Classic RK4 on std::vector, recording every step. Returns states at t = 0, dt, 2 dt, ...
inline std::vector<Vec> rk4(const Field& f, Vec y, double dt, long steps)
{
    std::vector<Vec> out{y};
    auto axpy = [](const Vec& a, double h, const Vec& b) {
        Vec r(a.size());
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] = a[i] + h * b[i];
        }
        return r;
    };
    for (long k = 0; k < steps; ++k) {
        const Vec k1 = f(y);
        const Vec k2 = f(axpy(y, dt / 2, k1));
        const Vec k3 = f(axpy(y, dt / 2, k2));
        const Vec k4 = f(axpy(y, dt, k3));
        for (size_t i = 0; i < y.size(); ++i) {
            y[i] += dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        }
        out.push_back(y);
    }
    return out;
}

/// Strong connectivity by Warshall transitive closure over positive entries.
inline bool strongly_connected_closure(const Eigen::MatrixXd& a)
{
    const auto n = a.rows();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            reach[j][i] = a(i, j) > 0.0; // edge j -> i
        }
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                if (reach[i][k] && reach[k][j]) {
                    reach[i][j] = true;
                }
            }
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i != j && !reach[i][j]) {
                return false;
            }
        }
    }
    return n > 1 || reach[0][0];
}

/// Spectral radius from a full (Hessenberg QR) eigendecomposition.
inline double spectral_radius_dense(const Eigen::MatrixXd& a)
{
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

/// Random strongly connected digraph: a random Hamiltonian cycle plus extra edges with probability p.
inline Eigen::MatrixXd random_irreducible(Eigen::Index n, std::mt19937_64& rng, double p = 0.3, double w_lo = 0.1,
                                          double w_hi = 2.0)
{
    std::uniform_real_distribution<double> weight(w_lo, w_hi);
    std::bernoulli_distribution edge(p);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    std::vector<Eigen::Index> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Eigen::Index k = 0; k < n; ++k) {
        a(perm[static_cast<size_t>((k + 1) % n)], perm[static_cast<size_t>(k)]) = weight(rng);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i != j && a(i, j) == 0.0 && edge(rng)) {
                a(i, j) = weight(rng);
            }
        }
    }
    if (n == 1) {
        a(0, 0) = weight(rng);
    }
    return a;
}

/// Unweighted complete graph without self-loops.
inline Eigen::MatrixXd complete(Eigen::Index n)
{
    return Eigen::MatrixXd::Ones(n, n) - Eigen::MatrixXd::Identity(n, n);
}

/// Undirected ring where each node links to its k/2 nearest neighbours on each side (k even).
inline Eigen::MatrixXd ring_lattice(Eigen::Index n, Eigen::Index k)
{
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index d = 1; d <= k / 2; ++d) {
            a(i, (i + d) % n)     = 1.0;
            a(i, (i - d + n) % n) = 1.0;
        }
    }
    return a;
}

inline double sup_norm(const Eigen::VectorXd& v)
{
    return v.lpNorm<Eigen::Infinity>();
}

} // namespace oracle

#endif // NETEPI_TESTS_ORACLES_H
