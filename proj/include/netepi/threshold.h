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
#ifndef NETEPI_THRESHOLD_H
#define NETEPI_THRESHOLD_H

#include "netepi/graph.h"
#include "netepi/network_dynamics.h"

#include <optional>
#include <string_view>
#include <vector>

namespace netepi
{

enum class Classification
{
    Below,
    Critical,
    Above,
};

std::string_view to_string(Classification c);

/// Ties within 1e-12 of one are reported as Critical.
Classification classify(double reproduction_number);

struct ThresholdReport {
    double r0         = 0.0; ///< beta lambda_max / gamma
    Classification classification = Classification::Below;
    double lambda_max = 0.0;
    std::optional<double> crossing_time; ///< SIR only: first time R(t) < 1
};

/// R0 = beta lambda_max(A) / gamma. Throws Error(ReducibleMatrix) for graphs that are not strongly connected.
ThresholdReport reproduction_number(const Graph& g, double beta, double gamma);

struct ReproductionSample {
    double t;
    double r;
};

/**
 * @brief R(t) = beta lambda_max(diag(s(t)) A) / gamma at every recorded time.
 *
 * Each eigenproblem is warm-started from the previous sample's eigenvectors, so samples are
 * computed sequentially.
 */
std::vector<ReproductionSample> effective_r_series(const Trajectory& traj, const Graph& g, double beta, double gamma);

/**
 * @brief Earliest time with R(t) < 1, linearly interpolated between the bracketing samples.
 *
 * Returns 0 when the series starts below one and nullopt when it never drops below one.
 */
std::optional<double> time_to_subthreshold(const std::vector<ReproductionSample>& series);

std::optional<double> time_to_subthreshold(const Trajectory& traj, const Graph& g, double beta, double gamma);

} // namespace netepi

#endif // NETEPI_THRESHOLD_H
