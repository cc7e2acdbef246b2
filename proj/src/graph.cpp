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
#include "netepi/graph.h"
#include "netepi/errors.h"
#include "netepi/format.h"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace netepi
{

Graph::Graph(Eigen::MatrixXd adjacency)
    : m_adjacency(std::move(adjacency))
{
    if (m_adjacency.rows() == 0 || m_adjacency.rows() != m_adjacency.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "adjacency matrix must be square with n >= 1, got " +
                                                      std::to_string(m_adjacency.rows()) + "x" +
                                                      std::to_string(m_adjacency.cols()));
    }
    for (Eigen::Index j = 0; j < m_adjacency.cols(); ++j) {
        for (Eigen::Index i = 0; i < m_adjacency.rows(); ++i) {
            const double a = m_adjacency(i, j);
            if (!std::isfinite(a) || a < 0.0) {
                throw Error(ErrorCode::InvalidArgument, "adjacency entry (" + std::to_string(i + 1) + "," +
                                                            std::to_string(j + 1) + ") is " + format_shortest(a));
            }
        }
    }
}

Graph Graph::scaled(double factor) const
{
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
    }
    return Graph(m_adjacency * factor);
}

namespace
{

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
        }
        size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
        }
        if (pos > start) {
            tokens.push_back(line.substr(start, pos - start));
        }
    }
    return tokens;
}

std::string where(size_t line_no)
{
    return "line " + std::to_string(line_no);
}

} // namespace

Graph load_graph(std::string_view text)
{
    std::optional<long long> declared_n;
    std::map<std::pair<long long, long long>, double> edges;
    long long max_index = 0;

    size_t line_no = 0;
    size_t pos     = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = trim(text.substr(pos, eol - pos));
        pos                   = eol + 1;
        ++line_no;

        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto tokens = split_ws(line);
        if (tokens.size() == 2 && tokens[0] == "n") {
            auto count = parse_integer(tokens[1]);
            if (!count || *count < 1 || declared_n) {
                throw Error(ErrorCode::MalformedLine, where(line_no) + ": bad or repeated header '" +
                                                          std::string(line) + "'");
            }
            declared_n = *count;
            continue;
        }
        if (tokens.size() != 3) {
            throw Error(ErrorCode::MalformedLine, where(line_no) + ": expected 'i j w', got '" + std::string(line) + "'");
        }
        auto i = parse_integer(tokens[0]);
        auto j = parse_integer(tokens[1]);
        auto w = parse_double(tokens[2]);
        if (!i || !j || !w || !std::isfinite(*w)) {
            throw Error(ErrorCode::MalformedLine, where(line_no) + ": cannot parse '" + std::string(line) + "'");
        }
        if (*i < 1 || *j < 1) {
            throw Error(ErrorCode::IndexOutOfRange, where(line_no) + ": node indices are 1-based");
        }
        if (!(*w > 0.0)) {
            throw Error(ErrorCode::NonpositiveWeight, where(line_no) + ": weight " + std::string(tokens[2]));
        }
        if (!edges.emplace(std::make_pair(*i, *j), *w).second) {
            throw Error(ErrorCode::DuplicateEdge, where(line_no) + ": edge (" + std::string(tokens[0]) + "," +
                                                      std::string(tokens[1]) + ") already given");
        }
        max_index = std::max({max_index, *i, *j});
    }

    if (edges.empty() && !declared_n) {
        throw Error(ErrorCode::EmptyInput, "edge list contains no edges");
    }
    const long long n = declared_n.value_or(max_index);
    if (max_index > n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "node index " + std::to_string(max_index) + " exceeds declared n = " + std::to_string(n));
    }

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [ij, w] : edges) {
        a(ij.first - 1, ij.second - 1) = w;
    }
    return Graph(std::move(a));
}

Graph load_graph_json(std::string_view json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    }
    catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::MalformedLine, std::string("matrix JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) {
        throw Error(ErrorCode::EmptyInput, "matrix JSON must be a non-empty array of rows");
    }
    const auto n = static_cast<Eigen::Index>(doc.size());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = doc[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw Error(ErrorCode::DimensionMismatch, "matrix JSON row " + std::to_string(i + 1) + " must have " +
                                                          std::to_string(n) + " entries");
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto& v = row[static_cast<size_t>(j)];
            if (!v.is_number()) {
                throw Error(ErrorCode::MalformedLine, "matrix JSON entry is not a number");
            }
            a(i, j) = v.get<double>();
        }
    }
    return Graph(std::move(a));
}

Graph load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::InvalidArgument, "cannot open graph file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    auto body              = trim(text);
    if (!body.empty() && body.front() == '[') {
        return load_graph_json(body);
    }
    return load_graph(text);
}

std::string to_edge_list(const Graph& g)
{
    const auto& a = g.adjacency();
    std::string out = "n " + std::to_string(g.size()) + "\n";
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        for (Eigen::Index j = 0; j < g.size(); ++j) {
            if (a(i, j) > 0.0) {
                out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " + format_shortest(a(i, j)) + "\n";
            }
        }
    }
    return out;
}

namespace
{

// Marks nodes reachable from node 0; transposed follows edges backwards.
std::vector<bool> reach_from_first(const Eigen::MatrixXd& a, bool transposed)
{
    const auto n = a.rows();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<Eigen::Index> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (Eigen::Index w = 0; w < n; ++w) {
            // a(i, j) > 0 is an edge j -> i
            const double weight = transposed ? a(u, w) : a(w, u);
            if (weight > 0.0 && !seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

} // namespace

bool is_strongly_connected(const Graph& g)
{
    const auto& a = g.adjacency();
    if (g.size() == 1) {
        return a(0, 0) > 0.0;
    }
    for (bool transposed : {false, true}) {
        auto seen = reach_from_first(a, transposed);
        for (bool s : seen) {
            if (!s) {
                return false;
            }
        }
    }
    return true;
}

void require_strongly_connected(const Graph& g)
{
    if (!is_strongly_connected(g)) {
        throw Error(ErrorCode::ReducibleMatrix,
                    "contact graph with n = " + std::to_string(g.size()) + " is not strongly connected");
    }
}

Eigen::VectorXd degree_vector(const Graph& g)
{
    return g.adjacency().rowwise().sum();
}

} // namespace netepi
