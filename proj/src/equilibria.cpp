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
#include "netepi/equilibria.h"
#include "netepi/errors.h"
#include "netepi/format.h"
#include "netepi/spectral.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace netepi
{

std::string_view to_string(Bracket bracket)
{
    return bracket == Bracket::Lower ? "lower" : "upper";
}

Bracket parse_bracket(std::string_view text)
{
    if (text == "lower") {
        return Bracket::Lower;
    }
    if (text == "upper") {
        return Bracket::Upper;
    }
    throw Error(ErrorCode::InvalidArgument, "bracket must be 'lower' or 'upper', got '" + std::string(text) + "'");
}

std::string_view to_string(SirStart start)
{
    switch (start) {
    case SirStart::Zero:
        return "zero";
    case SirStart::Upper:
        return "upper";
    case SirStart::Custom:
        return "custom";
    }
    return "?";
}

SirStart parse_sir_start(std::string_view text)
{
    if (text == "zero") {
        return SirStart::Zero;
    }
    if (text == "upper") {
        return SirStart::Upper;
    }
    if (text == "custom") {
        return SirStart::Custom;
    }
    throw Error(ErrorCode::InvalidArgument, "start must be 'zero', 'upper' or 'custom', got '" + std::string(text) + "'");
}

namespace
{

// slack for comparing consecutive iterates that agree to the last few ulps
constexpr double monotone_slack = 1e-14;

// Stopping test for a single monotone sequence: the successive change is within tol and the
// geometric tail change * rho / (1 - rho), rho the observed contraction, is within tol / 2,
// so independent runs from opposite brackets agree to 2 tol.
bool settled(double change, double previous_change, double tol)
{
    if (change > tol) {
        return false;
    }
    if (change <= 1e-3 * tol) {
        return true;
    }
    const double rho = previous_change > 0.0 ? change / previous_change : 1.0;
    return rho < 1.0 && change * rho / (1.0 - rho) <= 0.5 * tol;
}

// Near-threshold runs converge slowly; flagged rather than rejected.
constexpr double near_threshold_delta = 1e-3;

void check_rates(double beta, double gamma)
{
    if (!(beta > 0.0) || !(gamma > 0.0) || !std::isfinite(beta) || !std::isfinite(gamma)) {
        throw Error(ErrorCode::InvalidArgument, "beta and gamma must be positive rates");
    }
}

Eigen::VectorXd f_plus(const Eigen::VectorXd& z)
{
    return (z.array() / (1.0 + z.array())).matrix();
}

struct Threshold {
    SpectralTriple eig;
    double delta; // beta lambda / gamma - 1
};

Threshold above_threshold(const Graph& g, double beta, double gamma)
{
    check_rates(beta, gamma);
    auto eig           = dominant_eig(g);
    const double r0    = beta * eig.lambda_max / gamma;
    if (r0 <= 1.0 + 1e-12) {
        throw Error(ErrorCode::BelowThreshold, "R0 = beta lambda_max / gamma = " + format_shortest(r0) +
                                                   " <= 1: no endemic state");
    }
    return {std::move(eig), r0 - 1.0};
}

EndemicResult iterate_endemic(const Graph& g, double beta, double gamma, Eigen::VectorXd y, Bracket bracket,
                              double delta, const FixedPointOptions& options)
{
    if (!(options.tol > 0.0) || options.max_iter < 1) {
        throw Error(ErrorCode::InvalidArgument, "tolerance and iteration budget must be positive");
    }
    const Eigen::MatrixXd scaled = (beta / gamma) * g.adjacency();
    EndemicResult result;
    result.bracket = bracket;
    result.delta   = delta;
    if (delta < near_threshold_delta) {
        result.warnings.push_back("near threshold (delta = " + format_shortest(delta) +
                                  "): monotone iteration converges slowly");
    }

    double previous = 0.0;
    for (long k = 1; k <= options.max_iter; ++k) {
        Eigen::VectorXd next = f_plus(scaled * y);
        const Eigen::VectorXd step = next - y;
        const double slack = monotone_slack * std::max(1.0, y.lpNorm<Eigen::Infinity>());
        if (bracket == Bracket::Lower ? step.minCoeff() < -slack : step.maxCoeff() > slack) {
            result.monotone = false;
        }
        const double change = step.lpNorm<Eigen::Infinity>();
        y                   = std::move(next);
        if (settled(change, previous, options.tol)) {
            result.iterations = k;
            result.residual   = (f_plus(scaled * y) - y).lpNorm<Eigen::Infinity>();
            result.x_star     = std::move(y);
            return result;
        }
        previous = change;
    }
    throw Error(ErrorCode::NonConvergence, "SIS endemic iteration did not converge within " +
                                               std::to_string(options.max_iter) + " iterations");
}

} // namespace

EndemicResult sis_endemic(const Graph& g, double beta, double gamma, Bracket bracket, const FixedPointOptions& options)
{
    const auto th       = above_threshold(g, beta, gamma);
    const double height = 1.0 - gamma / (beta * th.eig.lambda_max);
    const auto& u       = th.eig.u_max;
    // the bound is attained at the extreme node; backing off by a relative 1e-8 keeps the
    // first step's sign clear of the eigenvector's rounding error
    const double scale  = bracket == Bracket::Lower ? u.maxCoeff() / (1.0 - 1e-8) : u.minCoeff() / (1.0 + 1e-8);
    return iterate_endemic(g, beta, gamma, (height / scale) * u, bracket, th.delta, options);
}

EndemicResult sis_endemic_from(const Graph& g, double beta, double gamma, const Eigen::VectorXd& start,
                               const FixedPointOptions& options)
{
    const auto th = above_threshold(g, beta, gamma);
    if (start.size() != g.size()) {
        throw Error(ErrorCode::DimensionMismatch, "start vector size does not match graph");
    }
    const auto& u     = th.eig.u_max;
    const double mult = start.sum(); // u sums to 1
    if (!(mult > 0.0) || (start - mult * u).lpNorm<Eigen::Infinity>() > 1e-9 * start.lpNorm<Eigen::Infinity>()) {
        throw Error(ErrorCode::InvalidArgument, "start vector must be a positive multiple of u_max");
    }
    const double height = 1.0 - gamma / (beta * th.eig.lambda_max);
    const double eps    = 1e-12 * height;
    if (start.maxCoeff() <= height + eps) {
        return iterate_endemic(g, beta, gamma, start, Bracket::Lower, th.delta, options);
    }
    if (start.minCoeff() >= height - eps) {
        return iterate_endemic(g, beta, gamma, start, Bracket::Upper, th.delta, options);
    }
    throw Error(ErrorCode::InvalidArgument, "start vector straddles 1 - gamma/(beta lambda_max) = " +
                                                format_shortest(height) + "; monotone convergence not guaranteed");
}

Eigen::VectorXd sis_endemic_expansion_threshold(const Graph& g, double beta, double gamma)
{
    check_rates(beta, gamma);
    const auto eig     = dominant_eig(g);
    const double delta = beta * eig.lambda_max / gamma - 1.0;
    if (std::abs(delta) <= 1e-12) {
        return Eigen::VectorXd::Zero(g.size());
    }
    if (delta < 0.0) {
        throw Error(ErrorCode::BelowThreshold, "delta = " + format_shortest(delta) + " < 0");
    }
    const auto& u   = eig.u_max;
    const auto& v   = eig.v_max;
    const double a  = v.dot(u) / v.dot(u.cwiseProduct(u));
    return delta * a * u;
}

Eigen::VectorXd sis_endemic_expansion_high_rate(const Graph& g, double beta, double gamma)
{
    check_rates(beta, gamma);
    const Eigen::VectorXd d = degree_vector(g);
    if (!(d.minCoeff() > 0.0)) {
        throw Error(ErrorCode::ReducibleMatrix, "a node without incoming contacts has zero degree");
    }
    return (1.0 - (gamma / beta) * d.cwiseInverse().array()).matrix();
}

namespace
{

void check_sir_initial(const Graph& g, const SirInitial& init)
{
    const auto n = g.size();
    if (init.s0.size() != n || init.x0.size() != n || init.r0.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "initial state vectors must have " + std::to_string(n) + " entries");
    }
    if (init.s0.minCoeff() < 0.0 || init.x0.minCoeff() < 0.0 || init.r0.minCoeff() < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "initial fractions must be nonnegative");
    }
    if (!(init.x0.sum() > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "x(0) must be nonzero");
    }
    const double sum_error = ((init.s0 + init.x0 + init.r0).array() - 1.0).abs().maxCoeff();
    if (sum_error > 1e-9) {
        throw Error(ErrorCode::InvalidArgument, "s(0) + x(0) + r(0) must equal 1 entrywise (off by " +
                                                    format_shortest(sum_error) + ")");
    }
}

// Precomputed pieces of H: H(s) = s0 .* exp(scaled_a s + offset).
struct SirMap {
    Eigen::MatrixXd scaled_a;
    Eigen::VectorXd offset;
    Eigen::VectorXd s0;

    SirMap(const Graph& g, double beta, double gamma, const SirInitial& init)
        : scaled_a((beta / gamma) * g.adjacency())
        , offset(scaled_a * (init.r0.array() - 1.0).matrix())
        , s0(init.s0)
    {
    }

    Eigen::VectorXd operator()(const Eigen::VectorXd& s) const
    {
        return s0.cwiseProduct((scaled_a * s + offset).array().exp().matrix());
    }
};

} // namespace

Eigen::VectorXd sir_map(const Graph& g, double beta, double gamma, const SirInitial& initial, const Eigen::VectorXd& s)
{
    check_rates(beta, gamma);
    check_sir_initial(g, initial);
    if (s.size() != g.size()) {
        throw Error(ErrorCode::DimensionMismatch, "argument size does not match graph");
    }
    return SirMap(g, beta, gamma, initial)(s);
}

SirAsymptoticResult sir_asymptotic(const Graph& g, double beta, double gamma, const SirInitial& initial,
                                   SirStart start, const FixedPointOptions& options,
                                   const Eigen::VectorXd& custom_start)
{
    check_rates(beta, gamma);
    require_strongly_connected(g);
    check_sir_initial(g, initial);
    if (!(options.tol > 0.0) || options.max_iter < 1) {
        throw Error(ErrorCode::InvalidArgument, "tolerance and iteration budget must be positive");
    }
    const auto n          = g.size();
    const Eigen::VectorXd ceiling = Eigen::VectorXd::Ones(n) - initial.r0;

    Eigen::VectorXd y;
    switch (start) {
    case SirStart::Zero:
        y = Eigen::VectorXd::Zero(n);
        break;
    case SirStart::Upper:
        y = ceiling;
        break;
    case SirStart::Custom:
        if (custom_start.size() != n) {
            throw Error(ErrorCode::DimensionMismatch, "custom start size does not match graph");
        }
        if (custom_start.minCoeff() < 0.0 || (custom_start - ceiling).maxCoeff() > 1e-12) {
            throw Error(ErrorCode::InvalidArgument, "custom start must lie in [0, 1 - r(0)]");
        }
        y = custom_start;
        break;
    }

    const SirMap h(g, beta, gamma, initial);
    SirAsymptoticResult result;
    result.start    = start;
    double previous = 0.0;
    for (long k = 1; k <= options.max_iter; ++k) {
        Eigen::VectorXd next       = h(y);
        const Eigen::VectorXd step = next - y;
        if ((start == SirStart::Zero && step.minCoeff() < -monotone_slack) ||
            (start == SirStart::Upper && step.maxCoeff() > monotone_slack)) {
            result.monotone = false;
        }
        const double change = step.lpNorm<Eigen::Infinity>();
        y                   = std::move(next);
        if (settled(change, previous, options.tol)) {
            result.iterations = k;
            result.residual   = (h(y) - y).lpNorm<Eigen::Infinity>();
            result.r_inf      = Eigen::VectorXd::Ones(n) - y;
            result.s_inf      = std::move(y);
            return result;
        }
        previous = change;
    }
    throw Error(ErrorCode::NonConvergence,
                "SIR fixed-point iteration did not converge within " + std::to_string(options.max_iter) + " iterations");
}

SirBracketResult sir_asymptotic_bracketed(const Graph& g, double beta, double gamma, const SirInitial& initial,
                                          const FixedPointOptions& options)
{
    check_rates(beta, gamma);
    require_strongly_connected(g);
    check_sir_initial(g, initial);
    if (!(options.tol > 0.0) || options.max_iter < 1) {
        throw Error(ErrorCode::InvalidArgument, "tolerance and iteration budget must be positive");
    }
    const auto n = g.size();
    const SirMap h(g, beta, gamma, initial);

    SirBracketResult out;
    out.lower.start   = SirStart::Zero;
    out.upper.start   = SirStart::Upper;
    Eigen::VectorXd p = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd q = Eigen::VectorXd::Ones(n) - initial.r0;
    bool converged    = false;

    // Both sequences keep stepping until each has settled and the bracket itself is
    // closed to 2 tol; since p(k) <= s* <= q(k), the gap certifies the error.
    for (long k = 1; k <= options.max_iter; ++k) {
        Eigen::VectorXd next_p = h(p);
        Eigen::VectorXd next_q = h(q);
        const Eigen::VectorXd step_p = next_p - p;
        const Eigen::VectorXd step_q = next_q - q;
        if (step_p.minCoeff() < -monotone_slack) {
            out.lower.monotone = false;
        }
        if (step_q.maxCoeff() > monotone_slack) {
            out.upper.monotone = false;
        }
        p = std::move(next_p);
        q = std::move(next_q);
        if ((p - q).maxCoeff() > monotone_slack) {
            out.ordered = false;
        }
        if (step_p.lpNorm<Eigen::Infinity>() <= options.tol && step_q.lpNorm<Eigen::Infinity>() <= options.tol &&
            (q - p).lpNorm<Eigen::Infinity>() <= 2.0 * options.tol) {
            out.lower.iterations = k;
            out.upper.iterations = k;
            converged            = true;
            break;
        }
    }
    if (!converged) {
        throw Error(ErrorCode::NonConvergence, "bracketing SIR iterations did not converge within " +
                                                   std::to_string(options.max_iter) + " iterations");
    }

    auto finish = [&](SirAsymptoticResult& r, Eigen::VectorXd s) {
        r.residual = (h(s) - s).lpNorm<Eigen::Infinity>();
        r.r_inf    = Eigen::VectorXd::Ones(n) - s;
        r.s_inf    = std::move(s);
    };
    out.gap = (q - p).lpNorm<Eigen::Infinity>();
    finish(out.lower, std::move(p));
    finish(out.upper, std::move(q));
    return out;
}

} // namespace netepi
