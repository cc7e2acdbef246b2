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
#include "netepi/spectral.h"
#include "netepi/errors.h"
#include "netepi/format.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace netepi
{

namespace
{

struct SideResult {
    double lambda;
    Eigen::VectorXd vec;
    long iterations;
};

// Power iteration on (m + shift I) from u (entry sum 1) until ||m u - (1^T m u) u||_inf <= tol (1^T m u).
SideResult power_iterate(const Eigen::MatrixXd& m, Eigen::VectorXd u, double shift, double tol, long max_iter)
{
    Eigen::VectorXd mu(u.size());
    for (long k = 0; k <= max_iter; ++k) {
        mu.noalias()        = m * u;
        const double lambda = mu.sum();
        const double resid  = (mu - lambda * u).lpNorm<Eigen::Infinity>();
        if (!std::isfinite(lambda) || !std::isfinite(resid)) {
            throw Error(ErrorCode::NotANumber, "power iteration produced a non-finite value");
        }
        if (resid <= tol * lambda || (lambda == 0.0 && resid == 0.0)) {
            return {lambda, std::move(u), k};
        }
        u = mu + shift * u;
        u /= u.sum();
    }
    throw Error(ErrorCode::NonConvergence,
                "power iteration did not reach tol " + format_shortest(tol) + " within " + std::to_string(max_iter) +
                    " iterations");
}

Eigen::VectorXd seed(const Eigen::VectorXd* warm, Eigen::Index n)
{
    Eigen::VectorXd uniform = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    if (warm == nullptr || warm->size() != n || !(warm->array() >= 0.0).all() || !(warm->sum() > 0.0)) {
        return uniform;
    }
    // keep every entry positive so no eigen-direction is lost
    Eigen::VectorXd u = *warm / warm->sum() + 1e-10 * uniform;
    return u / u.sum();
}

SpectralTriple iterate_both(const Eigen::MatrixXd& m, const EigenOptions& options, const SpectralTriple* warm)
{
    if (!(options.tol > 0.0) || options.max_iter < 1) {
        throw Error(ErrorCode::InvalidArgument, "eigen tolerance and iteration budget must be positive");
    }
    const auto n = m.rows();
    // shift by the largest row sum, an upper bound on the spectral radius
    const double shift = m.rowwise().sum().maxCoeff();
    if (shift == 0.0) {
        Eigen::VectorXd uniform = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
        return {0.0, uniform, uniform, 0};
    }
    const Eigen::MatrixXd mt = m.transpose();
    Eigen::VectorXd u        = seed(warm ? &warm->u_max : nullptr, n);
    Eigen::VectorXd v        = seed(warm ? &warm->v_max : nullptr, n);
    // the reported eigenvalue is the two-sided quotient, so both residuals are re-checked
    // against it and the inner tolerance is tightened until they pass
    double inner = 0.5 * options.tol;
    long used    = 0;
    for (int attempt = 0; attempt < 20; ++attempt) {
        auto right = power_iterate(m, std::move(u), shift, inner, options.max_iter - used);
        auto left  = power_iterate(mt, std::move(v), shift, inner, options.max_iter - used);
        used += std::max(right.iterations, left.iterations);
        u = std::move(right.vec);
        v = std::move(left.vec);

        const double vu     = v.dot(u);
        const double lambda = vu > 0.0 ? v.dot(m * u) / vu : right.lambda;
        const double bound  = options.tol * lambda;
        if ((m * u - lambda * u).lpNorm<Eigen::Infinity>() <= bound &&
            (mt * v - lambda * v).lpNorm<Eigen::Infinity>() <= bound) {
            return {lambda, std::move(v), std::move(u), used};
        }
        inner *= 0.25;
    }
    throw Error(ErrorCode::NonConvergence,
                "eigen residuals did not reach tol " + format_shortest(options.tol) + " at machine precision");
}

// Drops nodes whose row vanishes within the remaining nodes, repeatedly. They carry the
// eigenvalue 0 only, so the spectral radius is that of the remaining principal submatrix.
SpectralTriple reduce_and_iterate(const Eigen::MatrixXd& m, const EigenOptions& options, const SpectralTriple* warm)
{
    const auto n = m.rows();
    std::vector<bool> keep(static_cast<size_t>(n), true);
    std::vector<Eigen::Index> dropped;
    for (bool changed = true; changed;) {
        changed = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!keep[static_cast<size_t>(i)]) {
                continue;
            }
            bool zero_row = true;
            for (Eigen::Index j = 0; j < n && zero_row; ++j) {
                zero_row = !(keep[static_cast<size_t>(j)] && m(i, j) > 0.0);
            }
            if (zero_row) {
                keep[static_cast<size_t>(i)] = false;
                dropped.push_back(i);
                changed = true;
            }
        }
    }
    if (dropped.empty()) {
        return iterate_both(m, options, warm);
    }
    if (static_cast<Eigen::Index>(dropped.size()) == n) {
        // nilpotent: the first dropped node has a zero row; a zero column exists as well
        SpectralTriple zero{0.0, Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n), 0};
        zero.v_max(dropped.front()) = 1.0;
        Eigen::Index j = 0;
        while (j + 1 < n && m.col(j).any()) {
            ++j;
        }
        zero.u_max(j) = 1.0;
        return zero;
    }

    std::vector<Eigen::Index> core;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (keep[static_cast<size_t>(i)]) {
            core.push_back(i);
        }
    }
    const auto k = static_cast<Eigen::Index>(core.size());
    Eigen::MatrixXd sub(k, k);
    const bool use_warm = warm && warm->u_max.size() == n && warm->v_max.size() == n;
    SpectralTriple sub_warm;
    sub_warm.u_max.resize(k);
    sub_warm.v_max.resize(k);
    for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = 0; b < k; ++b) {
            sub(a, b) = m(core[a], core[b]);
        }
        if (use_warm) {
            sub_warm.u_max(a) = warm->u_max(core[a]);
            sub_warm.v_max(a) = warm->v_max(core[a]);
        }
    }
    auto inner = iterate_both(sub, options, use_warm ? &sub_warm : nullptr);

    // right vector vanishes on dropped nodes; left vector is completed backwards from
    // lambda v_i = sum_k v_k m_ki, which involves only nodes dropped later or kept
    SpectralTriple out;
    out.lambda_max = inner.lambda_max;
    out.iterations = inner.iterations;
    out.u_max      = Eigen::VectorXd::Zero(n);
    out.v_max      = Eigen::VectorXd::Zero(n);
    for (Eigen::Index a = 0; a < k; ++a) {
        out.u_max(core[a]) = inner.u_max(a);
        out.v_max(core[a]) = inner.v_max(a);
    }
    for (auto it = dropped.rbegin(); it != dropped.rend(); ++it) {
        out.v_max(*it) = out.v_max.dot(m.col(*it)) / out.lambda_max;
    }
    out.v_max /= out.v_max.sum();
    return out;
}

} // namespace

SpectralTriple dominant_eig(const Eigen::MatrixXd& m, const EigenOptions& options)
{
    // Graph validates square, finite and nonnegative
    require_strongly_connected(Graph(m));
    return iterate_both(m, options, nullptr);
}

SpectralTriple dominant_eig(const Graph& g, const EigenOptions& options)
{
    require_strongly_connected(g);
    return iterate_both(g.adjacency(), options, nullptr);
}

SpectralTriple spectral_radius_nonnegative(const Eigen::MatrixXd& m, const EigenOptions& options,
                                           const SpectralTriple* warm_start)
{
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix must be square and non-empty");
    }
    if (!(m.array() >= 0.0).all()) {
        throw Error(ErrorCode::InvalidArgument, "matrix must be nonnegative");
    }
    return reduce_and_iterate(m, options, warm_start);
}

Eigen::MatrixXd effective_matrix(const Eigen::VectorXd& s, const Graph& g)
{
    if (s.size() != g.size()) {
        throw Error(ErrorCode::DimensionMismatch, "state has " + std::to_string(s.size()) + " entries, graph has " +
                                                      std::to_string(g.size()) + " nodes");
    }
    if (!(s.array() >= 0.0).all() || !(s.array() <= 1.0).all()) {
        throw Error(ErrorCode::InvalidArgument, "susceptible fractions must lie in [0, 1]");
    }
    return s.asDiagonal() * g.adjacency();
}

} // namespace netepi
