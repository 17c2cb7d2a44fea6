#include "symrect/ccp.hpp"

#include <algorithm>
#include <string>

namespace symrect {

PartitionVector::PartitionVector(std::vector<vid_t> cuts) : cuts_(std::move(cuts)) {
    if (cuts_.size() < 2)
        throw std::invalid_argument("partition vector needs at least two cuts");
    if (cuts_.front() != 0)
        throw std::invalid_argument("partition vector must start at 0");
    for (std::size_t i = 1; i < cuts_.size(); i++)
        if (cuts_[i] <= cuts_[i - 1])
            throw std::invalid_argument("partition vector must be strictly increasing (cut " + std::to_string(i) +
                                        ")");
}

PartitionVector PartitionVector::single(vid_t n) { return PartitionVector({0, n}); }

nnz_t bottleneck(const PrefixSum1D &prefix, std::span<const vid_t> cuts) {
    nnz_t best = 0;
    for (std::size_t i = 1; i < cuts.size(); i++)
        best = std::max(best, prefix.sum(cuts[i - 1], cuts[i]));
    return best;
}

namespace {

// Largest end with weight(start, end) <= bound.
vid_t reach(const PrefixSum1D &prefix, vid_t start, nnz_t bound) {
    const auto values = prefix.values();
    const auto limit = values[start] + bound;
    const auto it = std::upper_bound(values.begin() + start, values.end(), limit);
    return static_cast<vid_t>(it - values.begin()) - 1;
}

// Greedy interval count covering [start, n) with loads <= bound; returns limit + 1 once it exceeds limit.
vid_t min_parts(const PrefixSum1D &prefix, vid_t start, nnz_t bound, vid_t limit) {
    vid_t count = 0;
    while (start < prefix.size()) {
        const auto end = reach(prefix, start, bound);
        if (end == start || count == limit)
            return limit + 1;
        start = end;
        count++;
    }
    return count;
}

void check_parts(const PrefixSum1D &prefix, vid_t p) {
    if (p < 1)
        throw InfeasibleError("number of parts must be >= 1");
    if (p > prefix.size())
        throw InfeasibleError("cannot split " + std::to_string(prefix.size()) + " items into " + std::to_string(p) +
                              " non-empty intervals");
}

} // namespace

nnz_t optimal_bottleneck(const PrefixSum1D &prefix, vid_t p) {
    check_parts(prefix, p);
    nnz_t heaviest = 0;
    for (vid_t i = 0; i < prefix.size(); i++)
        heaviest = std::max(heaviest, prefix.sum(i, i + 1));
    auto lo = std::max(heaviest, (prefix.total() + p - 1) / p);
    auto hi = prefix.total();
    while (lo < hi) {
        const auto mid = lo + (hi - lo) / 2;
        if (min_parts(prefix, 0, mid, p) <= p)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

PartitionVector optimal_1d_partition(const PrefixSum1D &prefix, vid_t p) {
    const auto bound = optimal_bottleneck(prefix, p);
    const auto n = prefix.size();
    std::vector<vid_t> cuts;
    cuts.reserve(static_cast<std::size_t>(p) + 1);
    cuts.push_back(0);
    for (vid_t i = 1; i < p; i++) {
        const auto prev = cuts.back();
        const auto remaining = p - i;
        // Smallest cut whose suffix still fits into `remaining` intervals; feasibility is monotone in the cut.
        auto lo = prev + 1;
        auto hi = std::min(n - remaining, reach(prefix, prev, bound));
        while (lo < hi) {
            const auto mid = lo + (hi - lo) / 2;
            if (min_parts(prefix, mid, bound, remaining) <= remaining)
                hi = mid;
            else
                lo = mid + 1;
        }
        cuts.push_back(lo);
    }
    cuts.push_back(n);
    return PartitionVector(std::move(cuts));
}

std::vector<nnz_t> refinement_weights(const SparseMatrix &A, std::span<const vid_t> col_cuts) {
    if (col_cuts.empty() || col_cuts.front() != 0 || col_cuts.back() != A.n())
        throw DimensionError("fixed cuts must span [0, " + std::to_string(A.n()) + "]");
    std::vector<nnz_t> weights(A.n(), 0);
    for (vid_t i = 0; i < A.n(); i++) {
        const auto cols = A.row(i);
        nnz_t best = 0;
        auto it = cols.begin();
        while (it != cols.end()) {
            // Interval holding *it; upper_bound skips empty intervals created by repeated cuts.
            const auto k = std::upper_bound(col_cuts.begin(), col_cuts.end(), *it) - col_cuts.begin() - 1;
            const auto stop = std::lower_bound(it, cols.end(), col_cuts[k + 1]);
            best = std::max<nnz_t>(best, stop - it);
            it = stop;
        }
        weights[i] = best;
    }
    return weights;
}

PartitionVector refine_rows(const SparseMatrix &A, std::span<const vid_t> col_cuts, vid_t p) {
    const auto weights = refinement_weights(A, col_cuts);
    return optimal_1d_partition(PrefixSum1D::from_weights(weights), p);
}

PartitionVector refinement(const SparseMatrix &A, const PartitionVector &fixed, vid_t p, Direction direction) {
    if (direction == Direction::column)
        return refine_rows(A, fixed.cuts(), p);
    return refine_rows(A.transpose(), fixed.cuts(), p);
}

} // namespace symrect
