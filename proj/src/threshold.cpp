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
#include "netepi/threshold.h"
#include "netepi/errors.h"
#include "netepi/spectral.h"

#include <cmath>

namespace netepi
{

std::string_view to_string(Classification c)
{
    switch (c) {
    case Classification::Below:
        return "below";
    case Classification::Critical:
        return "critical";
    case Classification::Above:
        return "above";
    }
    return "?";
}

Classification classify(double reproduction_number)
{
    if (std::abs(reproduction_number - 1.0) <= 1e-12) {
        return Classification::Critical;
    }
    return reproduction_number < 1.0 ? Classification::Below : Classification::Above;
}

ThresholdReport reproduction_number(const Graph& g, double beta, double gamma)
{
    if (!(beta > 0.0) || !(gamma > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "beta and gamma must be positive rates");
    }
    const auto eig = dominant_eig(g);
    ThresholdReport report;
    report.lambda_max     = eig.lambda_max;
    report.r0             = beta * eig.lambda_max / gamma;
    report.classification = classify(report.r0);
    return report;
}

std::vector<ReproductionSample> effective_r_series(const Trajectory& traj, const Graph& g, double beta, double gamma)
{
    if (!(beta > 0.0) || !(gamma > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "beta and gamma must be positive rates");
    }
    std::vector<ReproductionSample> series;
    series.reserve(traj.times.size());
    SpectralTriple previous;
    bool have_previous = false;
    for (size_t k = 0; k < traj.times.size(); ++k) {
        const auto m = effective_matrix(traj.states[k].s, g);
        auto eig     = spectral_radius_nonnegative(m, {}, have_previous ? &previous : nullptr);
        series.push_back({traj.times[k], beta * eig.lambda_max / gamma});
        previous      = std::move(eig);
        have_previous = true;
    }
    return series;
}

std::optional<double> time_to_subthreshold(const std::vector<ReproductionSample>& series)
{
    if (series.empty()) {
        return std::nullopt;
    }
    if (series.front().r < 1.0) {
        return series.front().t;
    }
    for (size_t k = 1; k < series.size(); ++k) {
        if (series[k].r < 1.0) {
            const auto& a = series[k - 1];
            const auto& b = series[k];
            // a.r >= 1 > b.r
            const double w = (a.r - 1.0) / (a.r - b.r);
            return a.t + w * (b.t - a.t);
        }
    }
    return std::nullopt;
}

std::optional<double> time_to_subthreshold(const Trajectory& traj, const Graph& g, double beta, double gamma)
{
    return time_to_subthreshold(effective_r_series(traj, g, beta, gamma));
}

} // namespace netepi
