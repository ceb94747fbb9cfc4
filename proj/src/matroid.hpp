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

#ifndef ITP_MATROID_HPP
#define ITP_MATROID_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "bitmatrix.hpp"
#include "graph.hpp"

namespace itp {

enum class LabelKind : std::uint8_t { phi, chi, psi };

std::string_view label_kind_name(LabelKind k);

/// One ground element of a represented binary matroid: a vertex name plus a
/// block tag (phi = identity column, chi = adjacency column, psi = A+I column).
struct GroundLabel {
    std::string vertex;
    LabelKind kind;

    auto operator<=>(const GroundLabel&) const = default;
    std::string to_string() const { return vertex + "_" + std::string(label_kind_name(kind)); }
};

/**
 * Binary matroid given by a representing GF(2) matrix with one labeled
 * ground element per column. Rank of a subset is the GF(2) rank of the
 * corresponding columns. Minors are represented by matrices: deletion drops
 * a column, contraction row-reduces on the element's column first.
 */
class BinaryMatroid {
   public:
    BinaryMatroid(BitMatrix matrix, std::vector<GroundLabel> labels);

    /// M(IA(G)) on the matrix (I | A(G)); labels phi-block then chi-block.
    static BinaryMatroid from_ia(const LoopedGraph& g);

    /// M(IAS(G)) on (I | A(G) | A(G)+I); labels phi, chi, psi blocks.
    static BinaryMatroid from_ias(const LoopedGraph& g);

    const BitMatrix& matrix() const { return matrix_; }
    const std::vector<GroundLabel>& ground() const { return labels_; }
    std::size_t ground_size() const { return labels_.size(); }

    std::size_t column_of(const GroundLabel& w) const;  // throws on unknown label
    bool has_element(const GroundLabel& w) const;

    std::size_t rank_full() const { return matrix_.rank(); }
    std::size_t rank_of(std::span<const GroundLabel> t) const;
    std::size_t rank_of_columns(std::span<const std::size_t> cols) const;

    /// Element in no basis: its column is zero.
    bool is_loop(const GroundLabel& w) const;

    /// Element in every basis: removing it drops the matroid's rank.
    bool is_coloop(const GroundLabel& w) const;

    /// M - w: same matrix with the column removed.
    BinaryMatroid deleted(const GroundLabel& w) const;

    /// M / w: for a nonzero column, pivots on the lowest-index row with a 1,
    /// clears the column's other 1s by row additions, then removes that row
    /// and the column; for a zero column, identical to deleted(w).
    BinaryMatroid contracted(const GroundLabel& w) const;

    /// Equal nonzero columns in the current representation.
    bool parallel(const GroundLabel& a, const GroundLabel& b) const;

    bool operator==(const BinaryMatroid&) const = default;

   private:
    BitMatrix matrix_;
    std::vector<GroundLabel> labels_;
};

}  // namespace itp

#endif
