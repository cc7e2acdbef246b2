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
#include "netepi/scalar_models.h"
#include "netepi/errors.h"
#include "netepi/format.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

namespace netepi
{

std::string_view to_string(ModelKind kind)
{
    switch (kind) {
    case ModelKind::SI:
        return "SI";
    case ModelKind::SIS:
        return "SIS";
    case ModelKind::SIR:
        return "SIR";
    }
    return "?";
}

ModelKind parse_model_kind(std::string_view text)
{
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) {
        return static_cast<char>(std::toupper(c));
    });
    if (upper == "SI") {
        return ModelKind::SI;
    }
    if (upper == "SIS") {
        return ModelKind::SIS;
    }
    if (upper == "SIR") {
        return ModelKind::SIR;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown model '" + std::string(text) + "', expected SI, SIS or SIR");
}

namespace
{

void check_fraction(double value, const char* name)
{
    if (!(value >= 0.0 && value <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, std::string(name) + " = " + format_shortest(value) +
                                                    " is not a fraction in [0, 1]");
    }
}

void check_rate(double value, const char* name)
{
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be a positive rate");
    }
}

void check_time(double t)
{
    if (!(t >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "time must be nonnegative");
    }
}

} // namespace

double si_closed_form(double x0, double beta, double t)
{
    check_fraction(x0, "x0");
    check_rate(beta, "beta");
    check_time(t);
    if (x0 == 0.0) {
        return 0.0;
    }
    return x0 / (x0 + (1.0 - x0) * std::exp(-beta * t));
}

double sis_closed_form(double x0, double beta, double gamma, double t)
{
    check_fraction(x0, "x0");
    check_rate(beta, "beta");
    check_rate(gamma, "gamma");
    check_time(t);
    const double c = beta - gamma;
    if (c == 0.0) {
        return x0 / (1.0 + beta * x0 * t);
    }
    if (c > 0.0) {
        // denominator beta x0 (1 - e^{-ct}) + c e^{-ct}
        const double decay = std::exp(-c * t);
        return c * x0 / (-beta * x0 * std::expm1(-c * t) + c * decay);
    }
    // c < 0: multiply through by e^{ct} so nothing overflows
    const double decay = std::exp(c * t);
    return c * x0 * decay / (beta * x0 * std::expm1(c * t) + c);
}

double sir_rinf(double s0, double r0, double beta, double gamma)
{
    check_rate(beta, "beta");
    check_rate(gamma, "gamma");
    if (!(s0 > 0.0) || !(r0 >= 0.0) || !(s0 + r0 <= 1.0 + 1e-12)) {
        throw Error(ErrorCode::InvalidArgument, "sir_rinf requires s0 > 0, r0 >= 0 and s0 + r0 <= 1");
    }
    const double x0 = 1.0 - s0 - r0;
    if (x0 <= 4.0 * std::numeric_limits<double>::epsilon()) {
        return r0;
    }
    const double ratio = beta / gamma;
    auto g             = [&](double r) {
        return 1.0 - r - s0 * std::exp(-ratio * (r - r0));
    };
    // g(r0) = x0 > 0, g(1) < 0 and g is concave: exactly one sign change
    double lo = r0;
    double hi = 1.0;
    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (g(mid) > 0.0) {
            lo = mid;
        }
        else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double sir_xmax(double s0, double x0, double beta, double gamma)
{
    check_rate(beta, "beta");
    check_rate(gamma, "gamma");
    if (!(s0 > 0.0) || !(x0 > 0.0) || !(s0 + x0 <= 1.0 + 1e-12)) {
        throw Error(ErrorCode::InvalidArgument, "sir_xmax requires s0, x0 > 0 and s0 + x0 <= 1");
    }
    const double r = beta * s0 / gamma;
    // the boundary r == 1 is admitted as the limit case (peak at t = 0)
    if (r < 1.0 - 1e-12) {
        throw Error(ErrorCode::BelowThreshold, "beta s0 / gamma = " + format_shortest(r) +
                                                   " < 1: infection decays monotonically, no interior peak");
    }
    if (r <= 1.0) {
        return x0;
    }
    const double inv = gamma / beta;
    return x0 + s0 - inv * (std::log(s0) + 1.0 - std::log(inv));
}

ScalarState scalar_rhs(ModelKind kind, const ScalarState& state, const ScalarParams& params)
{
    const double beta  = params.beta;
    const double gamma = params.gamma;
    switch (kind) {
    case ModelKind::SI: {
        const double dx = beta * (1.0 - state.x) * state.x;
        return {-dx, dx, 0.0};
    }
    case ModelKind::SIS: {
        const double dx = beta * (1.0 - state.x) * state.x - gamma * state.x;
        return {-dx, dx, 0.0};
    }
    case ModelKind::SIR: {
        const double infection = beta * state.s * state.x;
        return {-infection, infection - gamma * state.x, gamma * state.x};
    }
    }
    return {};
}

} // namespace netepi
