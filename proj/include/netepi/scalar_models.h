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
#ifndef NETEPI_SCALAR_MODELS_H
#define NETEPI_SCALAR_MODELS_H

#include <array>
#include <string_view>

namespace netepi
{

enum class ModelKind
{
    SI,
    SIS,
    SIR,
};

std::string_view to_string(ModelKind kind);

/// Parses "SI", "SIS" or "SIR" (case-insensitive); throws Error(InvalidArgument) otherwise.
ModelKind parse_model_kind(std::string_view text);

/// Scalar rates. gamma is ignored by the SI model.
struct ScalarParams {
    double beta  = 1.0;
    double gamma = 1.0;
};

/// Scalar compartment fractions (s, x, r).
struct ScalarState {
    double s = 1.0;
    double x = 0.0;
    double r = 0.0;
};

/**
 * @brief Logistic solution of the scalar SI model x' = beta (1 - x) x.
 *
 * Evaluated as x0 / (x0 + (1 - x0) e^{-beta t}) so large t cannot overflow.
 */
double si_closed_form(double x0, double beta, double t);

/**
 * @brief Closed-form solution of the scalar SIS model x' = (beta - gamma - beta x) x.
 *
 * For beta == gamma the removable singularity is replaced by its limit x0 / (1 + beta x0 t).
 */
double sis_closed_form(double x0, double beta, double gamma, double t);

/**
 * @brief Final recovered fraction of the scalar SIR model.
 *
 * Root in [r0, 1] of 1 - r = s0 exp(-(beta/gamma)(r - r0)), by bisection to 1e-12.
 */
double sir_rinf(double s0, double r0, double beta, double gamma);

/// Peak infected fraction; requires beta s0 / gamma >= 1.
double sir_xmax(double s0, double x0, double beta, double gamma);

/// Time derivative of the scalar model. For SI and SIS only x (and s = 1 - x) matter.
ScalarState scalar_rhs(ModelKind kind, const ScalarState& state, const ScalarParams& params);

} // namespace netepi

#endif // NETEPI_SCALAR_MODELS_H
