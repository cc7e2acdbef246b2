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
#ifndef NETEPI_GRAPH_H
#define NETEPI_GRAPH_H

#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace netepi
{

/**
 * @brief Weighted contact digraph stored as a dense adjacency matrix.
 *
 * Entry a_ij is the contact strength from node j to node i, i.e. row i collects the influence
 * that node i receives. Entries are finite and nonnegative. Strong connectivity is not enforced
 * here; analysis entry points check it with require_strongly_connected().
 *
 * Immutable after construction.
 */
class Graph
{
public:
    /**
     * @brief Validates and wraps an adjacency matrix.
     * @throws Error(DimensionMismatch) for a non-square or empty matrix,
     *         Error(InvalidArgument) for negative or non-finite entries.
     */
    explicit Graph(Eigen::MatrixXd adjacency);

    Eigen::Index size() const
    {
        return m_adjacency.rows();
    }

    const Eigen::MatrixXd& adjacency() const
    {
        return m_adjacency;
    }

    /// Returns a copy with every weight multiplied by factor > 0.
    Graph scaled(double factor) const;

private:
    Eigen::MatrixXd m_adjacency;
};

/**
 * @brief Parses the edge-list text format.
 *
 * Each non-comment line is "i j w" with 1-based indices and a positive weight, setting a_ij = w.
 * Lines starting with '#' and blank lines are ignored. An optional header line "n <count>" fixes
 * the node count; otherwise it is the largest index seen.
 */
Graph load_graph(std::string_view edge_list_text);

/// Parses a JSON array of rows, e.g. [[0,1],[1,0]].
Graph load_graph_json(std::string_view json_text);

/// Loads a graph file, dispatching on content: JSON when the first non-space character is '['.
Graph load_graph_file(const std::string& path);

/// Serializes to edge-list text with an "n <count>" header; load_graph() reproduces the matrix exactly.
std::string to_edge_list(const Graph& g);

/// True iff every node reaches every other node along positive-weight edges.
bool is_strongly_connected(const Graph& g);

/// Throws Error(ReducibleMatrix) unless the graph is strongly connected.
void require_strongly_connected(const Graph& g);

/// Row sums d = A 1_n.
Eigen::VectorXd degree_vector(const Graph& g);

} // namespace netepi

#endif // NETEPI_GRAPH_H
