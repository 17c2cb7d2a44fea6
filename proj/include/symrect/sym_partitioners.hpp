#pragma once

#include <span>
#include <vector>

#include "symrect/ccp.hpp"
#include "symrect/common.hpp"
#include "symrect/prefix.hpp"
#include "symrect/sparse_matrix.hpp"

namespace symrect {

/// Optional instrumentation for the refinement based heuristics.
struct RefinementTrace {
    int row_refinements = 0;    ///< refinements of A (column cuts fixed, rows cut)
    int column_refinements = 0; ///< refinements of A^T
    int iterations = 0;
    /// Symmetric imbalance of every candidate vector produced, in order.
    std::vector<double> candidate_imbalances;
};

/**
 * @brief Pick best direction (PBD).
 *
 * Refines the trivial vector once on A and once on A^T, keeps the direction
 * whose symmetric imbalance is lower, and keeps refining in that direction
 * only until cfg.tau iterations or the cut vector stops moving (2-norm of
 * the change <= cfg.epsilon).
 */
PartitionVector pbd(const SparseMatrix &A, vid_t p, const MliConfig &cfg = {}, RefinementTrace *trace = nullptr);

/**
 * @brief Pick best (in each) iteration (PBI).
 *
 * Each of the cfg.tau iterations refines rows against the column vector and
 * columns against the new row vector, aligns both to the better of the two
 * and records it if it improves the best vector seen so far.
 */
PartitionVector pbi(const SparseMatrix &A, vid_t p, const MliConfig &cfg = {}, RefinementTrace *trace = nullptr);

/// Upper bound on every determined tile, as an absolute nonzero count.
struct TileBound {
    nnz_t cap = 0;

    static TileBound absolute(nnz_t z) { return {z}; }
    /// Tiles may hold at most the largest load whose imbalance (global average nnz / p^2) is <= ell.
    static TileBound imbalance(double ell, nnz_t nnz, vid_t p);
};

struct BetaResult {
    vid_t cut = 0;
    /// False when even cut = previous + 1 violates the bound; the cut is then previous + 1.
    bool feasible = true;
};

/**
 * @brief Greedy diagonal sweep shared by probe, PTC and PTL.
 *
 * Holds the cuts fixed so far and the largest load among the tiles they
 * fully determine (both bands already closed). `advance` places the next
 * cut as far right as the bound allows.
 */
class DiagonalSweep {
  public:
    explicit DiagonalSweep(const PrefixSum2D &S);
    /// Starts from already fixed cuts (fixed[0] == 0, strictly increasing).
    DiagonalSweep(const PrefixSum2D &S, std::span<const vid_t> fixed);

    /**
     * @brief Largest j in (back, upper] such that every tile in the new band
     * [back, j) x earlier bands (and its mirror) holds <= cap nonzeros. If
     * the minimal advance already breaks the bound, or an earlier tile does,
     * the cut becomes back + 1 and the result is flagged infeasible.
     */
    BetaResult advance(nnz_t cap, vid_t upper);

    /// Appends n as the final cut.
    void close();

    std::span<const vid_t> cuts() const noexcept { return cuts_; }
    vid_t back() const noexcept { return cuts_.back(); }
    nnz_t max_load() const noexcept { return max_load_; }

  private:
    nnz_t band_max(vid_t lo, vid_t hi) const noexcept;

    const PrefixSum2D *S_;
    std::vector<vid_t> cuts_;
    nnz_t max_load_ = 0;
};

/// beta(A, C, i, bound) with i = fixed.size(); `upper` limits the cut (n for the plain definition).
BetaResult beta(const PrefixSum2D &S, std::span<const vid_t> fixed, TileBound bound, vid_t upper);
inline BetaResult beta(const PrefixSum2D &S, std::span<const vid_t> fixed, TileBound bound) {
    return beta(S, fixed, bound, S.n());
}

/**
 * @brief 2D probe: place cuts 1..p-1 greedily under `cap`, each leaving room
 * for the remaining non-empty intervals, then test the full p x p tiling.
 * When `cuts_out` is given it receives the greedy vector (p+1 entries) on success.
 */
bool probe_load(const PrefixSum2D &S, vid_t p, nnz_t cap, std::vector<vid_t> *cuts_out = nullptr);

/// probe with an imbalance target ell (global average nnz / p^2).
bool probe(const PrefixSum2D &S, vid_t p, double ell);

struct PtcResult {
    PartitionVector cuts;
    /// False when no probe succeeded and the binary-search state was returned instead.
    bool converged = true;
    /// Smallest successful tile-load target (the load form of B_min).
    nnz_t target_load = 0;
};

/**
 * @brief Probe target cut (PTC).
 *
 * For each i, binary-searches the cut position m; the imbalance of the
 * determined tiles with C[i] = m becomes the target of a full 2D probe.
 * The smallest target for which a probe succeeded is then used to rebuild
 * the vector greedily.
 */
PtcResult ptc_run(const PrefixSum2D &S, vid_t p);
inline PartitionVector ptc(const PrefixSum2D &S, vid_t p) { return ptc_run(S, p).cuts; }
PartitionVector ptc(const SparseMatrix &A, vid_t p);

} // namespace symrect
