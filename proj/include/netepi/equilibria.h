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
#ifndef NETEPI_EQUILIBRIA_H
#define NETEPI_EQUILIBRIA_H

#include "netepi/graph.h"

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

namespace netepi
{

struct FixedPointOptions {
    double tol    = 1e-10;
    long max_iter = 1000000;
};

/// Which end of the monotone SIS iteration was used.
enum class Bracket
{
    Lower, ///< y(0) below x*, iterates non-decreasing
    Upper, ///< y(0) above x*, iterates non-increasing
};

std::string_view to_string(Bracket bracket);
Bracket parse_bracket(std::string_view text);

/**
 * @brief SIS endemic state found by monotone fixed-point iteration.
 */
struct EndemicResult {
    Eigen::VectorXd x_star;
    long iterations = 0;
    double residual = 0.0; ///< ||F+((beta/gamma) A x*) - x*||_inf
    Bracket bracket = Bracket::Lower;
    double delta    = 0.0; ///< beta lambda_max / gamma - 1
    bool monotone   = true; ///< every step moved in the bracket's direction
    std::vector<std::string> warnings;
};

/**
 * @brief Endemic state of the network SIS model above the threshold.
 *
 * Iterates y <- F+((beta/gamma) A y), f+(z) = z / (1 + z) entrywise, from
 * y(0) = (1 - gamma/(beta lambda_max)) u_max / max_i u_i  (Lower) or
 * y(0) = (1 - gamma/(beta lambda_max)) u_max / min_i u_i  (Upper),
 * until successive iterates differ by at most tol in sup-norm.
 *
 * @throws Error(ReducibleMatrix), Error(BelowThreshold) if beta lambda_max / gamma <= 1,
 *         Error(NonConvergence).
 */
EndemicResult sis_endemic(const Graph& g, double beta, double gamma, Bracket bracket = Bracket::Lower,
                          const FixedPointOptions& options = {});

/**
 * @brief Same iteration from a caller-supplied start.
 *
 * The start must be a positive multiple of u_max with max_i y_i <= 1 - gamma/(beta lambda_max)
 * (then treated as Lower) or min_i y_i >= 1 - gamma/(beta lambda_max) (Upper); anything else
 * throws Error(InvalidArgument) since monotone convergence is not guaranteed.
 */
EndemicResult sis_endemic_from(const Graph& g, double beta, double gamma, const Eigen::VectorXd& start,
                               const FixedPointOptions& options = {});

/// First-order expansion delta a u_max near the threshold, a = v^T u / (v^T diag(u) u).
Eigen::VectorXd sis_endemic_expansion_threshold(const Graph& g, double beta, double gamma);

/// High-infection-rate expansion 1 - (gamma/beta) diag(d)^{-1} 1.
Eigen::VectorXd sis_endemic_expansion_high_rate(const Graph& g, double beta, double gamma);

/// Initial condition of a network SIR run.
struct SirInitial {
    Eigen::VectorXd s0;
    Eigen::VectorXd x0;
    Eigen::VectorXd r0;
};

enum class SirStart
{
    Zero,   ///< p(0) = 0, non-decreasing
    Upper,  ///< q(0) = 1 - r(0), non-increasing
    Custom, ///< any y(0) in [0, 1 - r(0)]
};

std::string_view to_string(SirStart start);
SirStart parse_sir_start(std::string_view text);

struct SirAsymptoticResult {
    Eigen::VectorXd s_inf;
    Eigen::VectorXd r_inf; ///< 1 - s_inf
    long iterations = 0;
    double residual = 0.0; ///< ||H(s_inf) - s_inf||_inf
    SirStart start  = SirStart::Zero;
    bool monotone   = true; ///< only meaningful for Zero and Upper
    std::vector<std::string> warnings;
};

/**
 * @brief The map H(s)_i = s_i(0) exp((beta/gamma) sum_j a_ij (s_j - 1 + r_j(0))).
 *
 * Its unique fixed point in [0, 1 - r(0)] is the asymptotic susceptible state.
 */
Eigen::VectorXd sir_map(const Graph& g, double beta, double gamma, const SirInitial& initial, const Eigen::VectorXd& s);

/**
 * @brief Asymptotic state of the network SIR model by iterating H.
 *
 * @param custom_start used only with SirStart::Custom.
 * @throws Error(InvalidArgument) on precondition violations, Error(ReducibleMatrix),
 *         Error(NonConvergence).
 */
SirAsymptoticResult sir_asymptotic(const Graph& g, double beta, double gamma, const SirInitial& initial,
                                   SirStart start = SirStart::Zero, const FixedPointOptions& options = {},
                                   const Eigen::VectorXd& custom_start = {});

/// Both bracketing sequences p(k) and q(k) run in lockstep.
struct SirBracketResult {
    SirAsymptoticResult lower; ///< from p(0) = 0
    SirAsymptoticResult upper; ///< from q(0) = 1 - r(0)
    bool ordered = true;       ///< p(k) <= q(k) held at every k
    double gap   = 0.0;        ///< ||q - p||_inf at the end
};

/**
 * @brief Runs p(k) and q(k) together until both converge, checking p(k) <= q(k) at every step.
 */
SirBracketResult sir_asymptotic_bracketed(const Graph& g, double beta, double gamma, const SirInitial& initial,
                                          const FixedPointOptions& options = {});

} // namespace netepi

#endif // NETEPI_EQUILIBRIA_H
