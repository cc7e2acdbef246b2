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
#ifndef NETEPI_IO_H
#define NETEPI_IO_H

#include "netepi/equilibria.h"
#include "netepi/network_dynamics.h"
#include "netepi/threshold.h"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace netepi
{

/**
 * @brief Trajectory as CSV: header t,s_1..s_n,x_1..x_n,r_1..r_n, values with 17 significant digits.
 */
std::string trajectory_csv(const Trajectory& traj);

/// Node-averaged trajectory: header t,mean_s,mean_x,mean_r.
std::string trajectory_means_csv(const Trajectory& traj);

/**
 * @brief Parses trajectory_csv() output. Model parameters are not part of the file and are taken from params.
 * @throws Error(MalformedLine) on a bad header, ragged rows or non-increasing times.
 */
Trajectory parse_trajectory_csv(std::string_view text, const ModelParams& params);

/// Header t,R_t.
std::string r_series_csv(const std::vector<ReproductionSample>& series);

/// Reads whitespace or comma separated numbers.
Eigen::VectorXd parse_vector(std::string_view text);

nlohmann::json to_json(const EndemicResult& result);
nlohmann::json to_json(const SirAsymptoticResult& result);
nlohmann::json to_json(const SirBracketResult& result);
nlohmann::json to_json(const ThresholdReport& report);

} // namespace netepi

#endif // NETEPI_IO_H
