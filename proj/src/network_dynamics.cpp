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
#include "netepi/network_dynamics.h"
#include "netepi/errors.h"
#include "netepi/format.h"
#include "netepi/spectral.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace netepi
{

void validate(const ModelParams& params)
{
    if (!(params.beta > 0.0) || !std::isfinite(params.beta)) {
        throw Error(ErrorCode::InvalidArgument, "beta must be a positive rate");
    }
    if (params.kind != ModelKind::SI && (!(params.gamma > 0.0) || !std::isfinite(params.gamma))) {
        throw Error(ErrorCode::InvalidArgument, "gamma must be a positive rate");
    }
}

EpidemicState EpidemicState::from_infected(const Eigen::VectorXd& x)
{
    return {Eigen::VectorXd::Ones(x.size()) - x, x, Eigen::VectorXd::Zero(x.size())};
}

EpidemicState EpidemicState::from_infected_recovered(const Eigen::VectorXd& x, const Eigen::VectorXd& r)
{
    if (x.size() != r.size()) {
        throw Error(ErrorCode::DimensionMismatch, "x and r differ in length");
    }
    return {Eigen::VectorXd::Ones(x.size()) - x - r, x, r};
}

void validate_state(const EpidemicState& state, ModelKind kind, Eigen::Index n, double tol)
{
    if (state.s.size() != n || state.x.size() != n || state.r.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "state vectors must have " + std::to_string(n) + " entries");
    }
    for (const auto* v : {&state.s, &state.x, &state.r}) {
        if (!v->allFinite()) {
            throw Error(ErrorCode::NotANumber, "state contains a non-finite entry");
        }
        if (v->minCoeff() < -tol || v->maxCoeff() > 1.0 + tol) {
            throw Error(ErrorCode::InvariantViolation, "state entries must lie in [0, 1]");
        }
    }
    if (kind != ModelKind::SIR && state.r.lpNorm<Eigen::Infinity>() > tol) {
        throw Error(ErrorCode::InvariantViolation, "recovered fractions must vanish for SI/SIS");
    }
    const double sum_error = ((state.s + state.x + state.r).array() - 1.0).abs().maxCoeff();
    if (sum_error > tol) {
        throw Error(ErrorCode::InvariantViolation,
                    "s + x + r deviates from 1 by " + format_shortest(sum_error));
    }
}

EpidemicState rhs(const EpidemicState& state, const ModelParams& params, const Graph& g)
{
    const auto n = g.size();
    if (state.x.size() != n || state.s.size() != n || state.r.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "state size does not match graph with " + std::to_string(n) +
                                                      " nodes");
    }
    const Eigen::VectorXd ax = g.adjacency() * state.x;
    EpidemicState d;
    switch (params.kind) {
    case ModelKind::SI:
    case ModelKind::SIS: {
        d.x = params.beta * (Eigen::VectorXd::Ones(n) - state.x).cwiseProduct(ax);
        if (params.kind == ModelKind::SIS) {
            d.x -= params.gamma * state.x;
        }
        d.s = -d.x;
        d.r = Eigen::VectorXd::Zero(n);
        break;
    }
    case ModelKind::SIR: {
        const Eigen::VectorXd infection = params.beta * state.s.cwiseProduct(ax);
        d.s                             = -infection;
        d.x                             = infection - params.gamma * state.x;
        d.r                             = params.gamma * state.x;
        break;
    }
    }
    return d;
}

double default_step(const ModelParams& params)
{
    validate(params);
    if (params.kind == ModelKind::SI) {
        return 1e-3 / params.beta;
    }
    return 1e-3 * std::min(1.0 / params.beta, 1.0 / params.gamma);
}

namespace
{

// Packs the integrated variables: x for SI/SIS, (s, x, r) for SIR.
class PackedSystem
{
public:
    PackedSystem(const ModelParams& params, const Graph& g)
        : m_params(params)
        , m_a(g.adjacency())
        , m_n(g.size())
    {
    }

    Eigen::Index dim() const
    {
        return m_params.kind == ModelKind::SIR ? 3 * m_n : m_n;
    }

    Eigen::VectorXd pack(const EpidemicState& state) const
    {
        if (m_params.kind != ModelKind::SIR) {
            return state.x;
        }
        Eigen::VectorXd y(3 * m_n);
        y << state.s, state.x, state.r;
        return y;
    }

    EpidemicState unpack(const Eigen::VectorXd& y) const
    {
        if (m_params.kind != ModelKind::SIR) {
            return EpidemicState::from_infected(y);
        }
        return {y.segment(0, m_n), y.segment(m_n, m_n), y.segment(2 * m_n, m_n)};
    }

    void operator()(const Eigen::VectorXd& y, Eigen::VectorXd& dy) const
    {
        if (m_params.kind != ModelKind::SIR) {
            const Eigen::VectorXd ax = m_a * y;
            dy = m_params.beta * (1.0 - y.array()).matrix().cwiseProduct(ax);
            if (m_params.kind == ModelKind::SIS) {
                dy -= m_params.gamma * y;
            }
            return;
        }
        const auto s                    = y.segment(0, m_n);
        const auto x                    = y.segment(m_n, m_n);
        const Eigen::VectorXd infection = m_params.beta * s.cwiseProduct(m_a * x);
        dy.resize(3 * m_n);
        dy.segment(0, m_n)       = -infection;
        dy.segment(m_n, m_n)     = infection - m_params.gamma * x;
        dy.segment(2 * m_n, m_n) = m_params.gamma * x;
    }

    // Clamps float noise back into [0,1]; throws on genuine excursions.
    void enforce_box(Eigen::VectorXd& y, double t, double clamp_tol) const
    {
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            const double v = y[i];
            if (std::isnan(v)) {
                throw Error(ErrorCode::NotANumber, "NaN in state at t = " + format_shortest(t));
            }
            if (v < 0.0 || v > 1.0) {
                const double excursion = v < 0.0 ? -v : v - 1.0;
                if (excursion >= clamp_tol) {
                    throw Error(ErrorCode::InvariantViolation,
                                "state left [0,1] by " + format_shortest(excursion) + " at t = " +
                                    format_shortest(t) + "; reduce the step size");
                }
                y[i] = std::clamp(v, 0.0, 1.0);
            }
        }
        if (m_params.kind == ModelKind::SIR) {
            for (Eigen::Index i = 0; i < m_n; ++i) {
                const double drift = std::abs(y[i] + y[m_n + i] + y[2 * m_n + i] - 1.0);
                if (drift >= clamp_tol) {
                    throw Error(ErrorCode::InvariantViolation,
                                "s + x + r drifted from 1 by " + format_shortest(drift) + " at t = " +
                                    format_shortest(t));
                }
            }
        }
    }

private:
    ModelParams m_params;
    const Eigen::MatrixXd& m_a;
    Eigen::Index m_n;
};

} // namespace

Trajectory integrate(const EpidemicState& initial, const ModelParams& params, const Graph& g, double t_end,
                     const IntegrateOptions& options)
{
    validate(params);
    validate_state(initial, params.kind, g.size(), 1e-12);
    const double dt = options.dt > 0.0 ? options.dt : default_step(params);
    if (!(t_end >= dt) || !std::isfinite(t_end)) {
        throw Error(ErrorCode::InvalidArgument, "t_end must be finite and at least one step (" +
                                                    format_shortest(dt) + ")");
    }
    if (options.record_stride < 1) {
        throw Error(ErrorCode::InvalidArgument, "record stride must be >= 1");
    }

    const PackedSystem system(params, g);
    Trajectory traj;
    traj.params    = params;
    traj.step_size = dt;

    Eigen::VectorXd y = system.pack(initial);
    const auto dim    = system.dim();
    Eigen::VectorXd k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

    traj.times.push_back(0.0);
    traj.states.push_back(system.unpack(y));

    const auto total_steps = static_cast<long long>(std::ceil(t_end / dt - 1e-9));
    double t               = 0.0;
    bool last_recorded     = true;
    for (long long step = 0; step < total_steps; ++step) {
        system(y, k1);
        if (options.stop_at_steady_state && k1.lpNorm<Eigen::Infinity>() < options.steady_tol) {
            traj.reached_steady_state = true;
            break;
        }
        const double t_next = step + 1 == total_steps ? t_end : static_cast<double>(step + 1) * dt;
        const double h      = t_next - t;

        tmp = y + 0.5 * h * k1;
        system(tmp, k2);
        tmp = y + 0.5 * h * k2;
        system(tmp, k3);
        tmp = y + h * k3;
        system(tmp, k4);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = t_next;

        system.enforce_box(y, t, options.clamp_tol);
        last_recorded = (step + 1) % options.record_stride == 0;
        if (last_recorded) {
            traj.times.push_back(t);
            traj.states.push_back(system.unpack(y));
        }
    }
    if (!last_recorded) {
        traj.times.push_back(t);
        traj.states.push_back(system.unpack(y));
    }
    return traj;
}

Eigen::VectorXd initial_growth_approx(const Graph& g, const ModelParams& params, const Eigen::VectorXd& x0, double t)
{
    validate(params);
    if (x0.size() != g.size()) {
        throw Error(ErrorCode::DimensionMismatch, "x0 size does not match graph");
    }
    const auto eig    = dominant_eig(g);
    double rate       = params.beta * eig.lambda_max;
    if (params.kind != ModelKind::SI) {
        rate -= params.gamma;
    }
    const double coef = eig.v_max.dot(x0) / eig.v_max.dot(eig.u_max);
    return std::exp(rate * t) * coef * eig.u_max;
}

Eigen::VectorXd late_time_decay_rates(const Trajectory& traj, double t_begin, double t_end)
{
    if (traj.times.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty trajectory");
    }
    if (!(t_begin < t_end) || t_begin < traj.times.front() || t_end > traj.times.back()) {
        throw Error(ErrorCode::InvalidArgument, "window [" + format_shortest(t_begin) + ", " +
                                                    format_shortest(t_end) + "] lies outside the trajectory");
    }
    if (traj.states.back().x.minCoeff() <= 1.0 - 1e-2) {
        throw Error(ErrorCode::InvalidArgument, "trajectory has not reached near full contagion");
    }
    const auto n = traj.states.front().size();
    std::vector<size_t> idx;
    for (size_t k = 0; k < traj.times.size(); ++k) {
        if (traj.times[k] >= t_begin && traj.times[k] <= t_end) {
            idx.push_back(k);
        }
    }
    if (idx.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "window contains fewer than two samples");
    }

    double t_mean = 0.0;
    for (auto k : idx) {
        t_mean += traj.times[k];
    }
    t_mean /= static_cast<double>(idx.size());
    double stt = 0.0;
    for (auto k : idx) {
        stt += (traj.times[k] - t_mean) * (traj.times[k] - t_mean);
    }

    Eigen::VectorXd slopes(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double y_mean = 0.0;
        for (auto k : idx) {
            const double s = traj.states[k].s[i];
            if (!(s > 0.0)) {
                throw Error(ErrorCode::InvalidArgument, "s_" + std::to_string(i + 1) + " vanishes inside the window");
            }
            y_mean += std::log(s);
        }
        y_mean /= static_cast<double>(idx.size());
        double sty = 0.0;
        for (auto k : idx) {
            sty += (traj.times[k] - t_mean) * (std::log(traj.states[k].s[i]) - y_mean);
        }
        slopes[i] = sty / stt;
    }
    return slopes;
}

} // namespace netepi
