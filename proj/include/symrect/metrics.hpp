#pragma once

#include <span>
#include <vector>

#include "symrect/ccp.hpp"
#include "symrect/prefix.hpp"
#include "symrect/sparse_matrix.hpp"

namespace symrect {

/// Nonzero counts of the row_bands x col_bands tiles induced by two cut vectors.
struct TileLoads {
    vid_t row_bands = 0;
    vid_t col_bands = 0;
    std::vector<nnz_t> loads; ///< row-major
    nnz_t nnz = 0;
    nnz_t max_load = 0;

    nnz_t at(vid_t i, vid_t j) const noexcept { return loads[static_cast<std::size_t>(i) * col_bands + j]; }
    double avg_load() const noexcept;
    double imbalance() const noexcept;
};

/**
 * @brief L_max / L_avg - 1 with L_avg = nnz / tiles, evaluated as
 * max_load * tiles / nnz - 1. Defined as 0 for an empty matrix.
 *
 * All imbalance values in the library go through this function so that
 * comparisons between them are consistent.
 */
double imbalance_from_load(nnz_t max_load, nnz_t nnz, nnz_t tiles) noexcept;

/// Largest integer load L with imbalance_from_load(L, nnz, tiles) <= ell, clamped to [-1, nnz].
nnz_t load_cap_for_imbalance(double ell, nnz_t nnz, nnz_t tiles) noexcept;

/// loads[i][j] counts rows in [row_cuts[i], row_cuts[i+1]) and columns in [col_cuts[j], col_cuts[j+1]).
TileLoads tile_loads(const SparseMatrix &A, const PartitionVector &col_cuts, const PartitionVector &row_cuts);
TileLoads tile_loads(const PrefixSum2D &S, const PartitionVector &col_cuts, const PartitionVector &row_cuts);

nnz_t max_tile_load(const SparseMatrix &A, std::span<const vid_t> col_cuts, std::span<const vid_t> row_cuts);

double load_imbalance(const SparseMatrix &A, const PartitionVector &col_cuts, const PartitionVector &row_cuts);
inline double load_imbalance(const SparseMatrix &A, const PartitionVector &cuts) {
    return load_imbalance(A, cuts, cuts);
}

/**
 * @brief Imbalance restricted to the tiles T_{a,b} with a, b < k, i.e. those
 * fully determined once cuts[0..k] are fixed. The denominator is the global
 * average nnz / p^2 with p = cuts.size() - 1; entries after cuts[k] are ignored.
 * Returns 0 for k < 1.
 */
double restricted_imbalance(const SparseMatrix &A, std::span<const vid_t> cuts, vid_t k);
double restricted_imbalance(const PrefixSum2D &S, std::span<const vid_t> cuts, vid_t k);

} // namespace symrect
