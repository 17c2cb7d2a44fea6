#include "symrect/baselines.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "symrect/metrics.hpp"

namespace symrect {

PartitionVector uni(vid_t n, vid_t p) {
    if (p < 1 || p > n)
        throw InfeasibleError("uniform partitioning needs 1 <= p <= n (p=" + std::to_string(p) +
                              ", n=" + std::to_string(n) + ")");
    std::vector<vid_t> cuts(static_cast<std::size_t>(p) + 1);
    for (vid_t i = 0; i <= p; i++)
        cuts[i] = static_cast<vid_t>(static_cast<nnz_t>(i) * n / p);
    return PartitionVector(std::move(cuts));
}

NicResult nic(const SparseMatrix &A, vid_t p, vid_t q, const MliConfig &cfg) {
    cfg.validate();
    if (p < 1 || q < 1 || p > A.n() || q > A.n())
        throw InfeasibleError("NIC needs 1 <= p, q <= n");
    if (A.nnz() == 0)
        return {uni(A.n(), p), uni(A.n(), q), 0, true};

    const auto At = A.transpose();
    // Refinement weights bound tile loads from above, so an iterate can be worse
    // than its predecessor; keep the best one, starting from UNI x UNI.
    NicResult result{uni(A.n(), p), uni(A.n(), q)};
    auto best = max_tile_load(A, result.col_cuts.cuts(), result.row_cuts.cuts());
    auto col = result.col_cuts.vector();
    std::vector<vid_t> row;
    for (int it = 0; it < cfg.tau; it++) {
        auto new_row = refine_rows(A, col, q).vector();
        auto new_col = refine_rows(At, new_row, p).vector();
        const bool unchanged = new_row == row && new_col == col;
        row = std::move(new_row);
        col = std::move(new_col);
        result.iterations = it + 1;
        if (unchanged) {
            result.converged = true;
            break;
        }
        const auto load = max_tile_load(A, col, row);
        if (load < best) {
            best = load;
            result.col_cuts = PartitionVector(col);
            result.row_cuts = PartitionVector(row);
        }
    }
    return result;
}

BruteForceResult brute_force_symmetric(const SparseMatrix &A, vid_t p) {
    const auto n = A.n();
    if (n > 20 || p > 5)
        throw InfeasibleError("exhaustive search is limited to n <= 20, p <= 5");
    if (p < 1 || p > n)
        throw InfeasibleError("brute force needs 1 <= p <= n");

    const auto w = static_cast<std::size_t>(n) + 1;
    std::vector<nnz_t> table(w * w, 0);
    for (vid_t r = 0; r < n; r++)
        for (vid_t c = 0; c < n; c++)
            table[(r + 1) * w + c + 1] = table[r * w + c + 1] + table[(r + 1) * w + c] - table[r * w + c] +
                                         (A.contains(r, c) ? 1 : 0);
    auto rect = [&](vid_t r0, vid_t r1, vid_t c0, vid_t c1) {
        return table[r1 * w + c1] - table[r0 * w + c1] - table[r1 * w + c0] + table[r0 * w + c0];
    };

    std::vector<vid_t> cuts(static_cast<std::size_t>(p) + 1);
    for (vid_t i = 0; i < p; i++)
        cuts[i] = i;
    cuts[p] = n;
    std::vector<vid_t> best_cuts;
    nnz_t best = std::numeric_limits<nnz_t>::max();
    while (true) {
        nnz_t load = 0;
        for (vid_t a = 0; a < p && load < best; a++)
            for (vid_t b = 0; b < p; b++)
                load = std::max(load, rect(cuts[a], cuts[a + 1], cuts[b], cuts[b + 1]));
        if (load < best) {
            best = load;
            best_cuts = cuts;
        }
        // Next combination of the interior cuts in lexicographic order.
        vid_t i = p - 1;
        while (i >= 1 && cuts[i] == n - (p - i))
            i--;
        if (i < 1)
            break;
        cuts[i]++;
        for (vid_t j = i + 1; j < p; j++)
            cuts[j] = cuts[j - 1] + 1;
    }
    return {PartitionVector(std::move(best_cuts)), best, imbalance_from_load(best, A.nnz(), static_cast<nnz_t>(p) * p)};
}

} // namespace symrect
