#pragma once

#include <span>
#include <vector>

#include "symrect/prefix.hpp"
#include "symrect/sparse_matrix.hpp"

namespace symrect {

/**
 * @brief Cut sequence 0 = c_0 < c_1 < ... < c_p = n describing p intervals
 * [c_i, c_{i+1}).
 */
class PartitionVector {
  public:
    /// Throws std::invalid_argument unless cuts are strictly increasing from 0 with p >= 1.
    explicit PartitionVector(std::vector<vid_t> cuts);

    /// {0, n}
    static PartitionVector single(vid_t n);

    vid_t parts() const noexcept { return static_cast<vid_t>(cuts_.size() - 1); }
    vid_t extent() const noexcept { return cuts_.back(); }
    vid_t operator[](std::size_t i) const noexcept { return cuts_[i]; }
    std::span<const vid_t> cuts() const noexcept { return cuts_; }
    const std::vector<vid_t> &vector() const noexcept { return cuts_; }
    auto begin() const noexcept { return cuts_.begin(); }
    auto end() const noexcept { return cuts_.end(); }

    friend bool operator==(const PartitionVector &, const PartitionVector &) = default;

  private:
    std::vector<vid_t> cuts_;
};

/// Largest interval weight under the given cuts.
nnz_t bottleneck(const PrefixSum1D &prefix, std::span<const vid_t> cuts);

/// Minimum achievable bottleneck for p non-empty intervals.
nnz_t optimal_bottleneck(const PrefixSum1D &prefix, vid_t p);

/**
 * @brief Exact chains-on-chains partitioning into p non-empty intervals.
 *
 * The optimal bottleneck is found by bisection over integer loads with a
 * greedy probe; among all optimal vectors the lexicographically smallest
 * one is returned. Throws InfeasibleError if p < 1 or p > n.
 */
PartitionVector optimal_1d_partition(const PrefixSum1D &prefix, vid_t p);

/**
 * @brief Per-row weight for refinement: the largest number of nonzeros the
 * row holds inside any single column interval of `col_cuts`.
 *
 * `col_cuts` may contain repeated values (empty intervals); it must start at
 * 0 and end at n.
 */
std::vector<nnz_t> refinement_weights(const SparseMatrix &A, std::span<const vid_t> col_cuts);

/// Optimal row cuts of A into p intervals given fixed column cuts (one refinement step).
PartitionVector refine_rows(const SparseMatrix &A, std::span<const vid_t> col_cuts, vid_t p);

/// Which dimension the fixed vector partitions. The result partitions the other one.
enum class Direction {
    column, ///< fixed vector cuts columns, result cuts rows
    row,    ///< fixed vector cuts rows, result cuts columns (computed on A^T)
};

PartitionVector refinement(const SparseMatrix &A, const PartitionVector &fixed, vid_t p, Direction direction);

} // namespace symrect
