#pragma once

#include "symrect/ccp.hpp"
#include "symrect/common.hpp"
#include "symrect/sparse_matrix.hpp"

namespace symrect {

/**
 * @brief Uniform (checker-board) cuts: c_i = floor(i * n / p).
 * Throws InfeasibleError unless 1 <= p <= n.
 */
PartitionVector uni(vid_t n, vid_t p);
inline PartitionVector uni(const SparseMatrix &A, vid_t p) { return uni(A.n(), p); }

struct NicResult {
    PartitionVector col_cuts; ///< p intervals
    PartitionVector row_cuts; ///< q intervals
    int iterations = 0;
    bool converged = false;
};

/**
 * @brief Nicol's rectilinear partitioning: starting from uniform column
 * cuts, alternately refine rows against the column cuts and columns
 * against the row cuts until neither changes or cfg.tau rounds ran.
 * Returns the lowest-max-load pair seen, UNI x UNI included, so it is never
 * worse than UNI. The output is generally not symmetric.
 */
NicResult nic(const SparseMatrix &A, vid_t p, vid_t q, const MliConfig &cfg = {});

struct BruteForceResult {
    PartitionVector cuts;
    nnz_t max_load = 0;
    double lambda = 0.0;
};

/**
 * @brief Exhaustive search over all symmetric cut vectors (test oracle).
 * The lexicographically first minimizer is returned. Refuses (InfeasibleError)
 * beyond n <= 20, p <= 5.
 */
BruteForceResult brute_force_symmetric(const SparseMatrix &A, vid_t p);

} // namespace symrect
