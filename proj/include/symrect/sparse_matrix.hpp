#pragma once

#include <span>
#include <utility>
#include <vector>

#include "symrect/common.hpp"

namespace symrect {

/**
 * @brief Square binary sparse matrix in compressed row form.
 *
 * Rows hold strictly increasing column indices in [0, n). Instances are
 * immutable once constructed and safe to share between threads.
 */
class SparseMatrix {
  public:
    SparseMatrix() : row_offsets_(1, 0) {}

    /// Takes ownership of CSR arrays; throws std::invalid_argument if they are malformed.
    SparseMatrix(vid_t n, std::vector<nnz_t> row_offsets, std::vector<vid_t> col_indices);

    /// Builds from an unordered (row, col) list; duplicates are collapsed.
    static SparseMatrix from_entries(vid_t n, std::vector<std::pair<vid_t, vid_t>> entries);

    vid_t n() const noexcept { return n_; }
    nnz_t nnz() const noexcept { return static_cast<nnz_t>(col_indices_.size()); }

    std::span<const nnz_t> row_offsets() const noexcept { return row_offsets_; }
    std::span<const vid_t> col_indices() const noexcept { return col_indices_; }

    std::span<const vid_t> row(vid_t i) const noexcept {
        return {col_indices_.data() + row_offsets_[i],
                static_cast<std::size_t>(row_offsets_[i + 1] - row_offsets_[i])};
    }

    vid_t degree(vid_t i) const noexcept {
        return static_cast<vid_t>(row_offsets_[i + 1] - row_offsets_[i]);
    }

    bool contains(vid_t r, vid_t c) const noexcept;

    SparseMatrix transpose() const;

    /// Union of the pattern with its transpose.
    SparseMatrix symmetrized() const;

    /// Copy without diagonal entries.
    SparseMatrix without_diagonal() const;

    bool is_symmetric() const;

    std::vector<std::pair<vid_t, vid_t>> entries() const;

    friend bool operator==(const SparseMatrix &, const SparseMatrix &) = default;

  private:
    vid_t n_ = 0;
    std::vector<nnz_t> row_offsets_;
    std::vector<vid_t> col_indices_;
};

} // namespace symrect
