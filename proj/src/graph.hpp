/*
   Copyright 2026 the itp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ITP_GRAPH_HPP
#define ITP_GRAPH_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bitmatrix.hpp"

namespace itp {

/**
 * Looped simple graph: an ordered list of named vertices, each independently
 * looped or not, plus a set of edges between distinct vertices.
 *
 * Vertex identity is the name string; every operation preserves the ambient
 * order of surviving vertices so matrix layouts and serializations are
 * deterministic. Values are immutable; operations return new graphs.
 */
class LoopedGraph {
   public:
    LoopedGraph() = default;  // empty graph

    /// Validates names, duplicates, loop membership, and edge endpoints.
    static LoopedGraph create(std::vector<std::string> vertices,
                              const std::vector<std::string>& loops,
                              const std::vector<std::pair<std::string, std::string>>& edges);

    /// Text format:
    ///   # comment
    ///   vertices: a b c d
    ///   loops: b d
    ///   edges: a-b b-c c-d
    static LoopedGraph parse(std::string_view text);

    /// Canonical serialization; parse(to_text(g)) == g.
    std::string to_text() const;

    std::size_t vertex_count() const { return names_.size(); }
    const std::vector<std::string>& vertices() const { return names_; }
    const std::string& vertex_name(std::size_t i) const { return names_[i]; }
    std::size_t index_of(const std::string& name) const;  // throws on unknown vertex
    bool has_vertex(const std::string& name) const;

    bool looped(std::size_t i) const { return loops_[i]; }
    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * names_.size() + j]; }
    std::vector<std::size_t> neighbors(std::size_t i) const;
    std::size_t degree(std::size_t i) const;
    bool isolated(std::size_t i) const { return degree(i) == 0; }

    /// Edges as index pairs (i < j), ascending.
    std::vector<std::pair<std::size_t, std::size_t>> edge_indices() const;

    /// Symmetric GF(2) matrix; diagonal = loop flags, off-diagonal = adjacency.
    BitMatrix adjacency_matrix() const;

    /// G - v: v and all incident edges removed.
    LoopedGraph delete_vertex(const std::string& v) const;
    LoopedGraph delete_vertex_at(std::size_t i) const;

    /// G^v: toggles all adjacencies between neighbors of v and the loop flag
    /// of every neighbor of v. Defined for any v; the interlace recursion
    /// only applies it to looped v.
    LoopedGraph local_complement(const std::string& v) const;
    LoopedGraph local_complement_at(std::size_t i) const;

    /// G^{vw}: toggles all adjacencies between vertices distinguished by
    /// {v,w} (different, nonempty neighborhoods in {v,w}). v and w must be
    /// distinct neighbors.
    LoopedGraph pivot(const std::string& v, const std::string& w) const;
    LoopedGraph pivot_at(std::size_t vi, std::size_t wi) const;

    /// Union of vertex sets, loops, and edges; name collisions in the right
    /// operand are renamed by suffixing "_<counter>".
    static LoopedGraph disjoint_union(const LoopedGraph& g, const LoopedGraph& h);

    bool operator==(const LoopedGraph& other) const = default;

   private:
    std::vector<std::string> names_;
    std::vector<std::uint8_t> loops_;
    std::vector<std::uint8_t> adj_;  // n*n symmetric, diagonal unused

    void set_edge(std::size_t i, std::size_t j, bool present);
    void toggle_edge(std::size_t i, std::size_t j);
};

}  // namespace itp

#endif
