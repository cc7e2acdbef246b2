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
#include "netepi/io.h"
#include "netepi/errors.h"
#include "netepi/format.h"

#include <string>

namespace netepi
{

namespace
{

std::vector<double> to_std(const Eigen::VectorXd& v)
{
    return {v.data(), v.data() + v.size()};
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> parts;
    size_t start = 0;
    while (true) {
        auto pos = line.find(sep, start);
        parts.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

} // namespace

std::string trajectory_csv(const Trajectory& traj)
{
    std::string out = "t";
    const auto n    = traj.states.empty() ? 0 : traj.states.front().size();
    for (const char* prefix : {"s_", "x_", "r_"}) {
        for (Eigen::Index i = 1; i <= n; ++i) {
            out += ",";
            out += prefix + std::to_string(i);
        }
    }
    out += "\n";
    for (size_t k = 0; k < traj.times.size(); ++k) {
        out += format_g17(traj.times[k]);
        const auto& st = traj.states[k];
        for (const auto* v : {&st.s, &st.x, &st.r}) {
            for (Eigen::Index i = 0; i < n; ++i) {
                out += ",";
                out += format_g17((*v)[i]);
            }
        }
        out += "\n";
    }
    return out;
}

std::string trajectory_means_csv(const Trajectory& traj)
{
    std::string out = "t,mean_s,mean_x,mean_r\n";
    for (size_t k = 0; k < traj.times.size(); ++k) {
        const auto& st = traj.states[k];
        out += format_g17(traj.times[k]) + "," + format_g17(st.s.mean()) + "," + format_g17(st.x.mean()) + "," +
               format_g17(st.r.mean()) + "\n";
    }
    return out;
}

Trajectory parse_trajectory_csv(std::string_view text, const ModelParams& params)
{
    Trajectory traj;
    traj.params = params;

    size_t pos      = 0;
    size_t line_no  = 0;
    long long n     = -1;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        auto line = trim(text.substr(pos, eol - pos));
        pos       = eol + 1;
        ++line_no;
        if (line.empty()) {
            continue;
        }
        auto cells = split(line, ',');
        if (n < 0) {
            if (cells.front() != "t" || (cells.size() - 1) % 3 != 0 || cells.size() < 4) {
                throw Error(ErrorCode::MalformedLine, "trajectory header must be t,s_1..s_n,x_1..x_n,r_1..r_n");
            }
            n = static_cast<long long>((cells.size() - 1) / 3);
            continue;
        }
        if (static_cast<long long>(cells.size()) != 3 * n + 1) {
            throw Error(ErrorCode::MalformedLine, "trajectory line " + std::to_string(line_no) + " has " +
                                                      std::to_string(cells.size()) + " cells");
        }
        std::vector<double> values(cells.size());
        for (size_t c = 0; c < cells.size(); ++c) {
            auto v = parse_double(cells[c]);
            if (!v) {
                throw Error(ErrorCode::MalformedLine, "trajectory line " + std::to_string(line_no) +
                                                          ": bad number '" + std::string(cells[c]) + "'");
            }
            values[c] = *v;
        }
        if (!traj.times.empty() && !(values[0] > traj.times.back())) {
            throw Error(ErrorCode::MalformedLine, "trajectory times must be strictly increasing");
        }
        traj.times.push_back(values[0]);
        EpidemicState st;
        st.s = Eigen::Map<const Eigen::VectorXd>(values.data() + 1, n);
        st.x = Eigen::Map<const Eigen::VectorXd>(values.data() + 1 + n, n);
        st.r = Eigen::Map<const Eigen::VectorXd>(values.data() + 1 + 2 * n, n);
        traj.states.push_back(std::move(st));
    }
    if (traj.times.empty()) {
        throw Error(ErrorCode::EmptyInput, "trajectory has no rows");
    }
    if (traj.times.size() > 1) {
        traj.step_size = traj.times[1] - traj.times[0];
    }
    return traj;
}

std::string r_series_csv(const std::vector<ReproductionSample>& series)
{
    std::string out = "t,R_t\n";
    for (const auto& p : series) {
        out += format_shortest(p.t) + "," + format_shortest(p.r) + "\n";
    }
    return out;
}

Eigen::VectorXd parse_vector(std::string_view text)
{
    std::vector<double> values;
    size_t pos = 0;
    auto is_sep = [](char c) {
        return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
    };
    while (pos < text.size()) {
        while (pos < text.size() && is_sep(text[pos])) {
            ++pos;
        }
        size_t start = pos;
        while (pos < text.size() && !is_sep(text[pos])) {
            ++pos;
        }
        if (pos > start) {
            auto v = parse_double(text.substr(start, pos - start));
            if (!v) {
                throw Error(ErrorCode::MalformedLine, "bad number '" + std::string(text.substr(start, pos - start)) + "'");
            }
            values.push_back(*v);
        }
    }
    if (values.empty()) {
        throw Error(ErrorCode::EmptyInput, "vector file is empty");
    }
    return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

nlohmann::json to_json(const EndemicResult& result)
{
    return {
        {"x_star", to_std(result.x_star)},
        {"iterations", result.iterations},
        {"residual", result.residual},
        {"bracket", std::string(to_string(result.bracket))},
        {"delta", result.delta},
        {"monotone", result.monotone},
        {"warnings", result.warnings},
    };
}

nlohmann::json to_json(const SirAsymptoticResult& result)
{
    return {
        {"s_inf", to_std(result.s_inf)},
        {"r_inf", to_std(result.r_inf)},
        {"iterations", result.iterations},
        {"residual", result.residual},
        {"start", std::string(to_string(result.start))},
        {"monotone", result.monotone},
        {"warnings", result.warnings},
    };
}

nlohmann::json to_json(const SirBracketResult& result)
{
    // s_inf is reported from the upper sequence; the lower one agrees within the gap
    auto doc            = to_json(result.upper);
    doc["start"]        = "both";
    doc["s_inf_lower"]  = to_std(result.lower.s_inf);
    doc["bracket_gap"]  = result.gap;
    doc["ordered"]      = result.ordered;
    doc["monotone"]     = result.lower.monotone && result.upper.monotone;
    doc["residual"]     = std::max(result.lower.residual, result.upper.residual);
    return doc;
}

nlohmann::json to_json(const ThresholdReport& report)
{
    nlohmann::json doc = {
        {"r0", report.r0},
        {"classification", std::string(to_string(report.classification))},
        {"lambda_max", report.lambda_max},
    };
    doc["crossing_time"] = report.crossing_time ? nlohmann::json(*report.crossing_time) : nlohmann::json(nullptr);
    return doc;
}

} // namespace netepi
