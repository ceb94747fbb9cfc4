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

#ifndef ITP_BITMATRIX_HPP
#define ITP_BITMATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace itp {

/**
 * Dense matrix over GF(2) with rows packed into 64-bit words.
 *
 * 0xk and kx0 matrices are first-class values (rank 0). Values are treated
 * as immutable once built; set() exists for construction only and every
 * operation below returns a fresh matrix.
 */
class BitMatrix {
   public:
    BitMatrix() : rows_(0), cols_(0), words_per_row_(0) {}
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        check_index(r, c);
        return (data_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool value) {
        check_index(r, c);
        std::uint64_t& w = data_[r * words_per_row_ + c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        if (value)
            w |= bit;
        else
            w &= ~bit;
    }

    /// GF(2) rank (dimension of the column space == row space).
    std::size_t rank() const;

    /// Rank of the column subset selected by a bitmask over columns.
    /// The mask spans ceil(cols/64) words; excess bits are ignored.
    std::size_t rank_columns_masked(std::span<const std::uint64_t> mask) const;

    /// Rank of the principal submatrix on the rows and columns selected by
    /// `mask`. Requires a square matrix with at most 64 rows.
    std::size_t rank_principal_masked(std::uint64_t mask) const;

    /// Submatrix of the chosen columns, in the given order.
    BitMatrix select_columns(std::span<const std::size_t> idx) const;

    /// A[S]: rows and columns `s` (ascending), square input required.
    BitMatrix principal_submatrix(std::span<const std::size_t> s) const;

    static BitMatrix hconcat(const BitMatrix& left, const BitMatrix& right);

    BitMatrix delete_row_col(std::size_t row, std::size_t col) const;

    bool column_is_zero(std::size_t c) const;

    /// Lowest row index with a 1 in column c, or rows() if the column is zero.
    std::size_t lowest_set_row(std::size_t c) const;

    /// Adds (XOR) row `src` into row `dst`. Construction-time helper.
    void xor_row_into(std::size_t src, std::size_t dst);

    bool operator==(const BitMatrix& other) const = default;

    std::size_t words_per_row() const { return words_per_row_; }
    const std::uint64_t* row_words(std::size_t r) const { return data_.data() + r * words_per_row_; }

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> data_;

    void check_index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix: index out of range");
    }
};

}  // namespace itp

#endif
