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

#include "matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace itp {

std::string_view label_kind_name(LabelKind k) {
    switch (k) {
        case LabelKind::phi:
            return "phi";
        case LabelKind::chi:
            return "chi";
        case LabelKind::psi:
            return "psi";
    }
    return "?";
}

BinaryMatroid::BinaryMatroid(BitMatrix matrix, std::vector<GroundLabel> labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
    if (labels_.size() != matrix_.cols())
        throw std::invalid_argument("BinaryMatroid: one label per column required");
    std::vector<GroundLabel> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("BinaryMatroid: duplicate ground labels");
}

BinaryMatroid BinaryMatroid::from_ia(const LoopedGraph& g) {
    const std::size_t n = g.vertex_count();
    const BitMatrix m = BitMatrix::hconcat(BitMatrix::identity(n), g.adjacency_matrix());
    std::vector<GroundLabel> labels;
    labels.reserve(2 * n);
    for (const auto& v : g.vertices()) labels.push_back({v, LabelKind::phi});
    for (const auto& v : g.vertices()) labels.push_back({v, LabelKind::chi});
    return BinaryMatroid(m, std::move(labels));
}

BinaryMatroid BinaryMatroid::from_ias(const LoopedGraph& g) {
    const std::size_t n = g.vertex_count();
    const BitMatrix a = g.adjacency_matrix();
    BitMatrix a_plus_i = a;
    for (std::size_t i = 0; i < n; ++i) a_plus_i.set(i, i, !a.get(i, i));
    const BitMatrix m =
        BitMatrix::hconcat(BitMatrix::hconcat(BitMatrix::identity(n), a), a_plus_i);
    std::vector<GroundLabel> labels;
    labels.reserve(3 * n);
    for (const auto& v : g.vertices()) labels.push_back({v, LabelKind::phi});
    for (const auto& v : g.vertices()) labels.push_back({v, LabelKind::chi});
    for (const auto& v : g.vertices()) labels.push_back({v, LabelKind::psi});
    return BinaryMatroid(m, std::move(labels));
}

std::size_t BinaryMatroid::column_of(const GroundLabel& w) const {
    const auto it = std::find(labels_.begin(), labels_.end(), w);
    if (it == labels_.end())
        throw std::invalid_argument("unknown ground label: " + w.to_string());
    return static_cast<std::size_t>(it - labels_.begin());
}

bool BinaryMatroid::has_element(const GroundLabel& w) const {
    return std::find(labels_.begin(), labels_.end(), w) != labels_.end();
}

std::size_t BinaryMatroid::rank_of(std::span<const GroundLabel> t) const {
    std::vector<std::size_t> cols;
    cols.reserve(t.size());
    for (const auto& w : t) cols.push_back(column_of(w));
    return rank_of_columns(cols);
}

std::size_t BinaryMatroid::rank_of_columns(std::span<const std::size_t> cols) const {
    std::vector<std::uint64_t> mask(matrix_.words_per_row(), 0);
    for (std::size_t c : cols) {
        if (c >= matrix_.cols()) throw std::out_of_range("rank_of_columns: column out of range");
        mask[c / 64] |= std::uint64_t{1} << (c % 64);
    }
    return matrix_.rank_columns_masked(mask);
}

bool BinaryMatroid::is_loop(const GroundLabel& w) const {
    return matrix_.column_is_zero(column_of(w));
}

bool BinaryMatroid::is_coloop(const GroundLabel& w) const {
    const std::size_t c = column_of(w);
    if (matrix_.column_is_zero(c)) return false;
    std::vector<std::uint64_t> mask(matrix_.words_per_row(), 0);
    for (std::size_t i = 0; i < matrix_.cols(); ++i) {
        if (i != c) mask[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return matrix_.rank_columns_masked(mask) < matrix_.rank();
}

BinaryMatroid BinaryMatroid::deleted(const GroundLabel& w) const {
    const std::size_t c = column_of(w);
    std::vector<std::size_t> keep;
    keep.reserve(matrix_.cols() - 1);
    std::vector<GroundLabel> labels;
    labels.reserve(labels_.size() - 1);
    for (std::size_t i = 0; i < matrix_.cols(); ++i) {
        if (i != c) {
            keep.push_back(i);
            labels.push_back(labels_[i]);
        }
    }
    return BinaryMatroid(matrix_.select_columns(keep), std::move(labels));
}

BinaryMatroid BinaryMatroid::contracted(const GroundLabel& w) const {
    const std::size_t c = column_of(w);
    if (matrix_.column_is_zero(c)) return deleted(w);
    const std::size_t pivot = matrix_.lowest_set_row(c);
    BitMatrix work = matrix_;
    for (std::size_t r = 0; r < work.rows(); ++r) {
        if (r != pivot && work.get(r, c)) work.xor_row_into(pivot, r);
    }
    std::vector<GroundLabel> labels;
    labels.reserve(labels_.size() - 1);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i != c) labels.push_back(labels_[i]);
    }
    return BinaryMatroid(work.delete_row_col(pivot, c), std::move(labels));
}

bool BinaryMatroid::parallel(const GroundLabel& a, const GroundLabel& b) const {
    const std::size_t ca = column_of(a), cb = column_of(b);
    bool nonzero = false;
    for (std::size_t r = 0; r < matrix_.rows(); ++r) {
        const bool xa = matrix_.get(r, ca);
        if (xa != matrix_.get(r, cb)) return false;
        nonzero = nonzero || xa;
    }
    return nonzero;
}

}  // namespace itp
