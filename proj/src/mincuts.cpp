#include "symrect/mincuts.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symrect/baselines.hpp"
#include "symrect/metrics.hpp"
#include "symrect/sym_partitioners.hpp"

namespace symrect {

namespace {

void check_bound(nnz_t z) {
    if (z < 1)
        throw InfeasibleError("max load Z must be >= 1");
}

bool fits(const SparseMatrix &A, const PartitionVector &c, nnz_t z) { return max_tile_load(A, c.cuts(), c.cuts()) <= z; }

} // namespace

vid_t initial_upper_bound(vid_t n, nnz_t z) {
    if (n <= 0)
        return 1;
    const auto u = std::ceil(static_cast<double>(n) / std::sqrt(static_cast<double>(std::max<nnz_t>(z, 1))));
    return static_cast<vid_t>(std::clamp(u, 1.0, static_cast<double>(n)));
}

vid_t find_upper_bound(const SparseMatrix &A, nnz_t z, vid_t l, vid_t r, const SymmetricPartitioner &f) {
    if (l < 1 || l > r)
        throw std::invalid_argument("find_upper_bound needs 1 <= l <= r");
    while (l < r) {
        const auto p = l + (r - l) / 2;
        if (fits(A, f(A, p), z))
            r = p;
        else
            l = p + 1;
    }
    return r;
}

MncResult btl(const SparseMatrix &A, nnz_t z, BtlInner inner, const MliConfig &cfg) {
    check_bound(z);
    if (A.n() == 0)
        throw InfeasibleError("empty matrix");
    SymmetricPartitioner uniform = [](const SparseMatrix &M, vid_t p) { return uni(M.n(), p); };
    SymmetricPartitioner heuristic = [inner, cfg](const SparseMatrix &M, vid_t p) {
        return inner == BtlInner::pbd ? pbd(M, p, cfg) : pbi(M, p, cfg);
    };

    auto u = initial_upper_bound(A.n(), z);
    u = find_upper_bound(A, z, 1, u, uniform);
    u = find_upper_bound(A, z, 1, u, heuristic);

    auto cuts = heuristic(A, u);
    MncResult result{cuts, u, max_tile_load(A, cuts.cuts(), cuts.cuts())};
    result.bound_satisfied = result.max_tile_load <= z;
    if (result.bound_satisfied) {
        // Feasibility need not be monotone in p for a heuristic; look a few steps below the bisection result.
        for (vid_t k = 1; k <= 3 && u - k >= 1; k++) {
            auto c = heuristic(A, u - k);
            const auto load = max_tile_load(A, c.cuts(), c.cuts());
            if (load <= z) {
                result = {std::move(c), u - k, load, true, true};
            }
        }
    }
    return result;
}

MncResult ptl(const PrefixSum2D &S, nnz_t z) {
    check_bound(z);
    if (S.n() == 0)
        throw InfeasibleError("empty matrix");
    DiagonalSweep sweep(S);
    while (sweep.back() != S.n())
        sweep.advance(z, S.n());
    PartitionVector cuts(std::vector<vid_t>(sweep.cuts().begin(), sweep.cuts().end()));
    const auto p = cuts.parts();
    return {std::move(cuts), p, sweep.max_load(), sweep.max_load() <= z};
}

MncResult ptl(const SparseMatrix &A, nnz_t z) { return ptl(PrefixSum2D(A), z); }

} // namespace symrect
