#include "symrect/sparse_matrix.hpp"

#include <algorithm>
#include <string>

namespace symrect {

SparseMatrix::SparseMatrix(vid_t n, std::vector<nnz_t> row_offsets, std::vector<vid_t> col_indices)
    : n_(n), row_offsets_(std::move(row_offsets)), col_indices_(std::move(col_indices)) {
    if (n_ < 0)
        throw std::invalid_argument("negative dimension");
    if (row_offsets_.size() != static_cast<std::size_t>(n_) + 1)
        throw std::invalid_argument("row_offsets must have n+1 entries");
    if (row_offsets_.front() != 0 || row_offsets_.back() != static_cast<nnz_t>(col_indices_.size()))
        throw std::invalid_argument("row_offsets must start at 0 and end at nnz");
    for (vid_t i = 0; i < n_; i++) {
        if (row_offsets_[i] > row_offsets_[i + 1])
            throw std::invalid_argument("row_offsets must be non-decreasing");
        for (nnz_t k = row_offsets_[i]; k < row_offsets_[i + 1]; k++) {
            const auto c = col_indices_[k];
            if (c < 0 || c >= n_)
                throw std::invalid_argument("column index " + std::to_string(c) + " out of range in row " +
                                            std::to_string(i));
            if (k > row_offsets_[i] && col_indices_[k - 1] >= c)
                throw std::invalid_argument("columns of row " + std::to_string(i) + " are not strictly increasing");
        }
    }
}

SparseMatrix SparseMatrix::from_entries(vid_t n, std::vector<std::pair<vid_t, vid_t>> entries) {
    for (const auto &[r, c] : entries)
        if (r < 0 || r >= n || c < 0 || c >= n)
            throw std::invalid_argument("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                        ") outside a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());

    std::vector<nnz_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    std::vector<vid_t> cols;
    cols.reserve(entries.size());
    for (const auto &[r, c] : entries) {
        offsets[r + 1]++;
        cols.push_back(c);
    }
    for (vid_t i = 0; i < n; i++)
        offsets[i + 1] += offsets[i];
    return SparseMatrix(n, std::move(offsets), std::move(cols));
}

bool SparseMatrix::contains(vid_t r, vid_t c) const noexcept {
    if (r < 0 || r >= n_)
        return false;
    const auto cols = row(r);
    return std::binary_search(cols.begin(), cols.end(), c);
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<nnz_t> offsets(static_cast<std::size_t>(n_) + 1, 0);
    for (auto c : col_indices_)
        offsets[c + 1]++;
    for (vid_t i = 0; i < n_; i++)
        offsets[i + 1] += offsets[i];
    std::vector<vid_t> cols(col_indices_.size());
    auto next = offsets;
    // Rows are visited in increasing order, so each transposed row comes out sorted.
    for (vid_t i = 0; i < n_; i++)
        for (auto c : row(i))
            cols[next[c]++] = i;
    return SparseMatrix(n_, std::move(offsets), std::move(cols));
}

SparseMatrix SparseMatrix::symmetrized() const {
    const auto t = transpose();
    std::vector<nnz_t> offsets(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<vid_t> cols;
    cols.reserve(col_indices_.size() * 2);
    for (vid_t i = 0; i < n_; i++) {
        const auto a = row(i);
        const auto b = t.row(i);
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(cols));
        offsets[i + 1] = static_cast<nnz_t>(cols.size());
    }
    return SparseMatrix(n_, std::move(offsets), std::move(cols));
}

SparseMatrix SparseMatrix::without_diagonal() const {
    std::vector<nnz_t> offsets(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<vid_t> cols;
    cols.reserve(col_indices_.size());
    for (vid_t i = 0; i < n_; i++) {
        for (auto c : row(i))
            if (c != i)
                cols.push_back(c);
        offsets[i + 1] = static_cast<nnz_t>(cols.size());
    }
    return SparseMatrix(n_, std::move(offsets), std::move(cols));
}

bool SparseMatrix::is_symmetric() const { return *this == transpose(); }

std::vector<std::pair<vid_t, vid_t>> SparseMatrix::entries() const {
    std::vector<std::pair<vid_t, vid_t>> out;
    out.reserve(col_indices_.size());
    for (vid_t i = 0; i < n_; i++)
        for (auto c : row(i))
            out.emplace_back(i, c);
    return out;
}

} // namespace symrect
