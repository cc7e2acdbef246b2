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
#ifndef NETEPI_CLI_H
#define NETEPI_CLI_H

#include "netepi/errors.h"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace netepi::cli
{

enum class Command
{
    Simulate,
    Endemic,
    Asymptotic,
    Threshold,
    Scalar,
};

/// Process exit statuses.
enum ExitStatus : int
{
    ExitOk             = 0,
    ExitBadConfig      = 2,
    ExitGraphError     = 3,
    ExitBelowThreshold = 4,
    ExitNonConvergence = 5,
};

/**
 * @brief Settings of one invocation.
 *
 * Unset optionals fall back to per-command defaults. beta and gamma hold more than one value only
 * for parameter sweeps of the threshold command.
 */
struct RunConfig {
    Command command = Command::Simulate;
    std::optional<std::string> graph_path;
    std::optional<std::string> model;
    std::vector<double> beta;
    std::vector<double> gamma;

    // initial condition, network commands
    std::optional<double> x0_uniform;
    std::optional<long> seed_node; // 1-based
    std::optional<std::string> x0_file;
    std::optional<std::string> r0_file;

    // scalar command
    std::optional<double> s0;
    std::optional<double> r0;
    std::optional<double> x0;

    std::optional<double> t_end;
    std::optional<double> dt;
    std::optional<double> tol;
    std::optional<std::string> bracket;
    std::optional<std::string> start;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<long> stride;
    std::optional<bool> steady;
    std::optional<bool> means;
    std::optional<std::string> trajectory_path;
    std::optional<std::string> series_out;
    int jobs = 1;
};

/// Maps library error codes onto exit statuses.
int exit_status(ErrorCode code);

/**
 * @brief Executes a configuration, writing the artifact to config.out or to out.
 * @return an ExitStatus; diagnostics go to err.
 */
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (subcommand style, optional --config JSON file overridden by flags) and runs.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace netepi::cli

#endif // NETEPI_CLI_H
