#pragma once

#include <functional>

#include "symrect/ccp.hpp"
#include "symrect/common.hpp"
#include "symrect/prefix.hpp"
#include "symrect/sparse_matrix.hpp"

namespace symrect {

struct MncResult {
    PartitionVector cuts;
    vid_t p = 1;
    nnz_t max_tile_load = 0;
    /// max_tile_load <= Z
    bool bound_satisfied = false;
    /// BTL only: the downward scan after bisection found a smaller feasible p.
    bool hardened = false;
};

using SymmetricPartitioner = std::function<PartitionVector(const SparseMatrix &, vid_t)>;

/// ceil(n / sqrt(Z)) clamped to [1, n]: the part count at which even a dense tile fits.
vid_t initial_upper_bound(vid_t n, nnz_t z);

/**
 * @brief Bisection for the smallest p in [l, r] whose partition from `f`
 * has every symmetric tile load <= Z. Returns r when nothing in the range
 * qualifies. Feasibility is assumed monotone in p, as the bisection needs.
 */
vid_t find_upper_bound(const SparseMatrix &A, nnz_t z, vid_t l, vid_t r, const SymmetricPartitioner &f);

enum class BtlInner { pbd, pbi };

/**
 * @brief Bound target load (BTL): shrink the range with uniform cuts, bisect
 * again with the inner heuristic, then try up to three smaller p directly.
 * Never throws for an unreachable Z; check `bound_satisfied`.
 */
MncResult btl(const SparseMatrix &A, nnz_t z, BtlInner inner = BtlInner::pbd, const MliConfig &cfg = {});

/**
 * @brief Probe target load (PTL): greedy diagonal sweep under the absolute
 * bound Z until the last cut reaches n; p is whatever results.
 */
MncResult ptl(const PrefixSum2D &S, nnz_t z);
MncResult ptl(const SparseMatrix &A, nnz_t z);

} // namespace symrect
