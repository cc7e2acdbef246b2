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
#ifndef NETEPI_SPECTRAL_H
#define NETEPI_SPECTRAL_H

#include "netepi/graph.h"

#include <Eigen/Dense>

namespace netepi
{

/**
 * @brief Perron root of a nonnegative matrix with its left and right eigenvectors.
 *
 * Both eigenvectors are normalized to unit entry sum. For irreducible matrices they are
 * strictly positive; for the reducible effective matrices diag(s)A they are only nonnegative.
 */
struct SpectralTriple {
    double lambda_max = 0.0;
    Eigen::VectorXd v_max; ///< left eigenvector, v^T M = lambda v^T
    Eigen::VectorXd u_max; ///< right eigenvector, M u = lambda u
    long iterations = 0;   ///< power-iteration steps, max over both sides
};

struct EigenOptions {
    double tol    = 1e-12;
    long max_iter = 100000;
};

/**
 * @brief Dominant eigen-triple of an irreducible nonnegative matrix by shifted power iteration.
 *
 * Iterates on M + cI (for u_max) and M^T + cI (for v_max) from the uniform vector, where c is the
 * largest row sum of M. The shift makes periodic (e.g. bipartite) matrices converge and keeps the
 * iteration invariant under rescaling of M. Stops once ||M u - lambda u||_inf <= tol * lambda and
 * the analogous left residual holds.
 *
 * @throws Error(ReducibleMatrix) if M is not irreducible, Error(NonConvergence) after max_iter.
 */
SpectralTriple dominant_eig(const Eigen::MatrixXd& m, const EigenOptions& options = {});

/// Convenience overload for a graph's adjacency matrix.
SpectralTriple dominant_eig(const Graph& g, const EigenOptions& options = {});

/**
 * @brief Spectral radius and nonnegative eigenvectors of a possibly reducible nonnegative matrix.
 *
 * Same iteration as dominant_eig() without the irreducibility pre-check. An optional warm start
 * (a previous triple of a nearby matrix) seeds both power iterations.
 */
SpectralTriple spectral_radius_nonnegative(const Eigen::MatrixXd& m, const EigenOptions& options = {},
                                           const SpectralTriple* warm_start = nullptr);

/// diag(s) A. Entries of s must lie in [0, 1].
Eigen::MatrixXd effective_matrix(const Eigen::VectorXd& s, const Graph& g);

} // namespace netepi

#endif // NETEPI_SPECTRAL_H
