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
#ifndef NETEPI_NETWORK_DYNAMICS_H
#define NETEPI_NETWORK_DYNAMICS_H

#include "netepi/graph.h"
#include "netepi/scalar_models.h"

#include <Eigen/Dense>

#include <vector>

namespace netepi
{

/// Rates of a network model. gamma is ignored for SI.
struct ModelParams {
    ModelKind kind = ModelKind::SI;
    double beta    = 1.0;
    double gamma   = 1.0;
};

/// Throws Error(InvalidArgument) unless beta > 0 (and gamma > 0 for SIS/SIR).
void validate(const ModelParams& params);

/**
 * @brief Per-node susceptible, infected and recovered fractions.
 *
 * For SI and SIS r is identically zero and s = 1 - x.
 */
struct EpidemicState {
    Eigen::VectorXd s;
    Eigen::VectorXd x;
    Eigen::VectorXd r;

    Eigen::Index size() const
    {
        return x.size();
    }

    /// SI/SIS state from infected fractions.
    static EpidemicState from_infected(const Eigen::VectorXd& x);

    /// SIR state from infected and recovered fractions, s = 1 - x - r.
    static EpidemicState from_infected_recovered(const Eigen::VectorXd& x, const Eigen::VectorXd& r);
};

/**
 * @brief Checks box and simplex invariants up to tol.
 * @throws Error(DimensionMismatch) or Error(InvariantViolation).
 */
void validate_state(const EpidemicState& state, ModelKind kind, Eigen::Index n, double tol = 1e-9);

/**
 * @brief Right-hand side of the network model.
 *
 * SI:  x' = beta (I - diag(x)) A x
 * SIS: x' = beta (I - diag(x)) A x - gamma x
 * SIR: s' = -beta diag(s) A x,  x' = beta diag(s) A x - gamma x,  r' = gamma x
 *
 * For SI/SIS the returned s component is -x'.
 */
EpidemicState rhs(const EpidemicState& state, const ModelParams& params, const Graph& g);

struct Trajectory {
    std::vector<double> times;
    std::vector<EpidemicState> states;
    ModelParams params;
    double step_size        = 0.0;
    bool reached_steady_state = false; ///< stopped early on the derivative-norm criterion
};

struct IntegrateOptions {
    double dt                 = 0.0;   ///< step size; <= 0 selects default_step()
    long record_stride        = 1;     ///< record every k-th step; the final state is always recorded
    bool stop_at_steady_state = false; ///< stop once ||rhs||_inf < steady_tol
    double steady_tol         = 1e-10;
    double clamp_tol          = 1e-9;  ///< excursions beyond [0,1] below this are clamped, larger ones throw
};

/// 1e-3 min(1/beta, 1/gamma); for SI 1e-3 / beta.
double default_step(const ModelParams& params);

/**
 * @brief Fixed-step classic RK4 integration from t = 0 to t_end.
 *
 * The last step is shortened to land on t_end exactly. Each new state is checked against the
 * [0,1] box (and s + x + r = 1 for SIR); excursions below clamp_tol are clamped.
 *
 * @throws Error(InvariantViolation) for larger excursions, Error(NotANumber) on NaN.
 */
Trajectory integrate(const EpidemicState& initial, const ModelParams& params, const Graph& g, double t_end,
                     const IntegrateOptions& options = {});

/**
 * @brief Linearized early-time profile e^{rate t} (v^T x0 / v^T u) u.
 *
 * rate is beta lambda_max for SI and beta lambda_max - gamma for SIS/SIR.
 */
Eigen::VectorXd initial_growth_approx(const Graph& g, const ModelParams& params, const Eigen::VectorXd& x0, double t);

/**
 * @brief Least-squares slope of log s_i(t) over [t_begin, t_end] for each node of an SI trajectory.
 *
 * Near full contagion each slope approaches -beta d_i.
 */
Eigen::VectorXd late_time_decay_rates(const Trajectory& traj, double t_begin, double t_end);

} // namespace netepi

#endif // NETEPI_NETWORK_DYNAMICS_H
