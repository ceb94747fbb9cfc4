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

#include "bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace itp {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t cols) { return (cols + kWordBits - 1) / kWordBits; }

// Elimination core: reduces each row against the pivots collected so far,
// pivoting on the lowest-index nonzero column; returns the pivot count.
// `buf` holds row-major rows of `nwords` words each and is destroyed.
std::size_t eliminate(std::vector<std::uint64_t>& buf, std::size_t nrows, std::size_t nwords) {
    if (nwords == 0 || nrows == 0) return 0;

    if (nwords == 1) {
        std::uint64_t basis[kWordBits] = {};
        std::size_t rank = 0;
        for (std::size_t r = 0; r < nrows; ++r) {
            std::uint64_t v = buf[r];
            while (v != 0) {
                const int b = std::countr_zero(v);
                if (basis[b] != 0) {
                    v ^= basis[b];
                } else {
                    basis[b] = v;
                    ++rank;
                    break;
                }
            }
        }
        return rank;
    }

    // pivot column index -> row offset in buf, kept sorted by pivot column
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t rank = 0;
    for (std::size_t r = 0; r < nrows; ++r) {
        std::uint64_t* row = buf.data() + r * nwords;
        for (const auto& [pc, pr] : pivots) {
            if ((row[pc / kWordBits] >> (pc % kWordBits)) & 1u) {
                const std::uint64_t* prow = buf.data() + pr * nwords;
                for (std::size_t w = 0; w < nwords; ++w) row[w] ^= prow[w];
            }
        }
        std::size_t lead = nwords * kWordBits;
        for (std::size_t w = 0; w < nwords; ++w) {
            if (row[w] != 0) {
                lead = w * kWordBits + std::countr_zero(row[w]);
                break;
            }
        }
        if (lead == nwords * kWordBits) continue;
        auto pos = std::lower_bound(pivots.begin(), pivots.end(), lead,
                                    [](const auto& p, std::size_t col) { return p.first < col; });
        pivots.insert(pos, {lead, r});
        ++rank;
    }
    return rank;
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

std::size_t BitMatrix::rank() const {
    std::vector<std::uint64_t> buf = data_;
    return eliminate(buf, rows_, words_per_row_);
}

std::size_t BitMatrix::rank_columns_masked(std::span<const std::uint64_t> mask) const {
    std::vector<std::uint64_t> buf(rows_ * words_per_row_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t w = 0; w < words_per_row_; ++w) {
            const std::uint64_t m = w < mask.size() ? mask[w] : 0;
            buf[r * words_per_row_ + w] = data_[r * words_per_row_ + w] & m;
        }
    }
    return eliminate(buf, rows_, words_per_row_);
}

std::size_t BitMatrix::rank_principal_masked(std::uint64_t mask) const {
    if (rows_ != cols_) throw std::invalid_argument("rank_principal_masked: matrix not square");
    if (rows_ > kWordBits) throw std::invalid_argument("rank_principal_masked: more than 64 rows");
    std::uint64_t basis[kWordBits] = {};
    std::size_t rank = 0;
    std::uint64_t rows_left = mask & (rows_ == kWordBits ? ~std::uint64_t{0}
                                                         : ((std::uint64_t{1} << rows_) - 1));
    while (rows_left != 0) {
        const int r = std::countr_zero(rows_left);
        rows_left &= rows_left - 1;
        std::uint64_t v = data_[static_cast<std::size_t>(r) * words_per_row_] & mask;
        while (v != 0) {
            const int b = std::countr_zero(v);
            if (basis[b] != 0) {
                v ^= basis[b];
            } else {
                basis[b] = v;
                ++rank;
                break;
            }
        }
    }
    return rank;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> idx) const {
    for (std::size_t c : idx) {
        if (c >= cols_) throw std::out_of_range("select_columns: column index out of range");
    }
    BitMatrix out(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (get(r, idx[j])) out.set(r, j, true);
        }
    }
    return out;
}

BitMatrix BitMatrix::principal_submatrix(std::span<const std::size_t> s) const {
    if (rows_ != cols_) throw std::invalid_argument("principal_submatrix: matrix not square");
    for (std::size_t i : s) {
        if (i >= rows_) throw std::out_of_range("principal_submatrix: index out of range");
    }
    std::vector<std::size_t> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    BitMatrix out(sorted.size(), sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            if (get(sorted[i], sorted[j])) out.set(i, j, true);
        }
    }
    return out;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& left, const BitMatrix& right) {
    if (left.rows_ != right.rows_) throw std::invalid_argument("hconcat: row-count mismatch");
    BitMatrix out(left.rows_, left.cols_ + right.cols_);
    for (std::size_t r = 0; r < left.rows_; ++r) {
        for (std::size_t c = 0; c < left.cols_; ++c)
            if (left.get(r, c)) out.set(r, c, true);
        for (std::size_t c = 0; c < right.cols_; ++c)
            if (right.get(r, c)) out.set(r, left.cols_ + c, true);
    }
    return out;
}

BitMatrix BitMatrix::delete_row_col(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw std::out_of_range("delete_row_col: index out of range");
    BitMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row) continue;
        const std::size_t rr = r < row ? r : r - 1;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c == col) continue;
            const std::size_t cc = c < col ? c : c - 1;
            if (get(r, c)) out.set(rr, cc, true);
        }
    }
    return out;
}

bool BitMatrix::column_is_zero(std::size_t c) const {
    if (c >= cols_) throw std::out_of_range("column_is_zero: index out of range");
    for (std::size_t r = 0; r < rows_; ++r) {
        if (get(r, c)) return false;
    }
    return true;
}

std::size_t BitMatrix::lowest_set_row(std::size_t c) const {
    if (c >= cols_) throw std::out_of_range("lowest_set_row: index out of range");
    for (std::size_t r = 0; r < rows_; ++r) {
        if (get(r, c)) return r;
    }
    return rows_;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    if (src >= rows_ || dst >= rows_) throw std::out_of_range("xor_row_into: index out of range");
    for (std::size_t w = 0; w < words_per_row_; ++w) {
        data_[dst * words_per_row_ + w] ^= data_[src * words_per_row_ + w];
    }
}

}  // namespace itp
