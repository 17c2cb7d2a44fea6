#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symrect/sparse_matrix.hpp"

namespace symrect {

/// Prefix sums of a non-negative weight sequence: values[0] = 0, values[i+1] - values[i] >= 0.
class PrefixSum1D {
  public:
    PrefixSum1D() : values_(1, 0) {}
    /// Throws std::invalid_argument unless values[0] == 0 and the sequence is non-decreasing.
    explicit PrefixSum1D(std::vector<nnz_t> values);

    static PrefixSum1D from_weights(std::span<const nnz_t> weights);

    /// Number of items.
    vid_t size() const noexcept { return static_cast<vid_t>(values_.size() - 1); }
    nnz_t total() const noexcept { return values_.back(); }
    nnz_t operator[](vid_t i) const noexcept { return values_[i]; }
    /// Weight of items [begin, end).
    nnz_t sum(vid_t begin, vid_t end) const noexcept { return values_[end] - values_[begin]; }
    std::span<const nnz_t> values() const noexcept { return values_; }

  private:
    std::vector<nnz_t> values_;
};

struct PrefixSum2DOptions {
    /// Matrices with n at or below this use a dense (n+1)^2 table instead of the Fenwick layout.
    vid_t dense_threshold = 4096;
};

/**
 * @brief Rectangle nonzero counts over a static sparse matrix.
 *
 * Rows are grouped as in a Fenwick tree: node k (1-based) covers rows
 * [k - lowbit(k), k) and stores the sorted column indices of all its rows.
 * A row-prefix query visits O(log n) nodes and binary searches each, so a
 * rectangle count costs O(log^2 n). Every nonzero is stored once per node
 * covering its row, i.e. at most ceil(log2(n+1)) times.
 */
class PrefixSum2D {
  public:
    explicit PrefixSum2D(const SparseMatrix &A, PrefixSum2DOptions options = {});

    vid_t n() const noexcept { return n_; }
    nnz_t nnz() const noexcept { return nnz_; }
    bool dense() const noexcept { return !dense_.empty(); }

    /// Column indices held by the Fenwick nodes (0 when the dense table is used).
    nnz_t stored_index_count() const noexcept { return static_cast<nnz_t>(cols_.size()); }

    /// Nonzeros in rows [r_lo, r_hi] x columns [c_lo, c_hi]; throws std::out_of_range on bad bounds.
    nnz_t count(vid_t r_lo, vid_t r_hi, vid_t c_lo, vid_t c_hi) const;

    /// Half-open variant used on hot paths; empty ranges yield 0, bounds are not checked.
    nnz_t count_range(vid_t r_begin, vid_t r_end, vid_t c_begin, vid_t c_end) const noexcept {
        if (r_begin >= r_end || c_begin >= c_end)
            return 0;
        if (!dense_.empty()) {
            const auto w = static_cast<std::size_t>(n_) + 1;
            return static_cast<nnz_t>(dense_[r_end * w + c_end]) - dense_[r_begin * w + c_end] -
                   dense_[r_end * w + c_begin] + dense_[r_begin * w + c_begin];
        }
        return rows_prefix(r_end, c_begin, c_end) - rows_prefix(r_begin, c_begin, c_end);
    }

  private:
    nnz_t rows_prefix(vid_t rows, vid_t c_begin, vid_t c_end) const noexcept;

    vid_t n_ = 0;
    nnz_t nnz_ = 0;
    std::vector<nnz_t> node_offsets_; // size n+1, node k occupies [node_offsets_[k-1], node_offsets_[k])
    std::vector<vid_t> cols_;
    std::vector<std::uint32_t> dense_; // (n+1) x (n+1), entry [r][c] = nonzeros in rows < r, cols < c
};

inline PrefixSum2D build_prefix2d(const SparseMatrix &A, PrefixSum2DOptions options = {}) {
    return PrefixSum2D(A, options);
}

inline nnz_t count_rect(const PrefixSum2D &S, vid_t r_lo, vid_t r_hi, vid_t c_lo, vid_t c_hi) {
    return S.count(r_lo, r_hi, c_lo, c_hi);
}

} // namespace symrect
