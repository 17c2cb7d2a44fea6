#include "symrect/sym_partitioners.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "symrect/baselines.hpp"
#include "symrect/metrics.hpp"

namespace symrect {

namespace {

void check_parts(const char *algo, vid_t n, vid_t p) {
    if (p < 1 || p > n)
        throw InfeasibleError(std::string(algo) + " needs 1 <= p <= n (p=" + std::to_string(p) +
                              ", n=" + std::to_string(n) + ")");
}

std::vector<vid_t> trivial_cuts(vid_t n, vid_t p) {
    std::vector<vid_t> c(static_cast<std::size_t>(p) + 1, n);
    c[0] = 0;
    return c;
}

nnz_t symmetric_max(const SparseMatrix &A, std::span<const vid_t> cuts) { return max_tile_load(A, cuts, cuts); }

double distance(std::span<const vid_t> a, std::span<const vid_t> b) {
    double sum = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        const double d = static_cast<double>(a[i]) - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

} // namespace

PartitionVector pbd(const SparseMatrix &A, vid_t p, const MliConfig &cfg, RefinementTrace *trace) {
    cfg.validate();
    check_parts("PBD", A.n(), p);
    if (A.nnz() == 0)
        return uni(A.n(), p);
    const auto At = A.transpose();
    const auto tiles = static_cast<nnz_t>(p) * p;
    RefinementTrace local;
    auto &tr = trace ? *trace : local;
    auto record = [&](std::span<const vid_t> c) {
        const auto load = symmetric_max(A, c);
        tr.candidate_imbalances.push_back(imbalance_from_load(load, A.nnz(), tiles));
        return load;
    };

    const auto start = trivial_cuts(A.n(), p);
    const auto by_rows = refine_rows(A, start, p).vector();
    tr.row_refinements++;
    const auto by_cols = refine_rows(At, start, p).vector();
    tr.column_refinements++;
    const bool rows = record(by_rows) < record(by_cols);

    auto cur = rows ? by_rows : by_cols;
    std::vector<vid_t> prev(cur.size(), A.n());
    int i = 0;
    while (i < cfg.tau && distance(cur, prev) > cfg.epsilon) {
        prev = cur;
        if (rows) {
            cur = refine_rows(A, cur, p).vector();
            tr.row_refinements++;
        } else {
            cur = refine_rows(At, cur, p).vector();
            tr.column_refinements++;
        }
        record(cur);
        i++;
    }
    tr.iterations = i;
    return PartitionVector(std::move(cur));
}

PartitionVector pbi(const SparseMatrix &A, vid_t p, const MliConfig &cfg, RefinementTrace *trace) {
    cfg.validate();
    check_parts("PBI", A.n(), p);
    if (A.nnz() == 0)
        return uni(A.n(), p);
    const auto At = A.transpose();
    const auto tiles = static_cast<nnz_t>(p) * p;
    RefinementTrace local;
    auto &tr = trace ? *trace : local;

    auto col = trivial_cuts(A.n(), p);
    std::vector<vid_t> row;
    std::optional<std::vector<vid_t>> best;
    nnz_t best_load = 0;
    int i = 0;
    while (i < cfg.tau) {
        const auto col_in = col;
        row = refine_rows(A, col, p).vector();
        tr.row_refinements++;
        col = refine_rows(At, row, p).vector();
        tr.column_refinements++;

        const auto row_load = symmetric_max(A, row);
        const auto col_load = symmetric_max(A, col);
        tr.candidate_imbalances.push_back(imbalance_from_load(row_load, A.nnz(), tiles));
        tr.candidate_imbalances.push_back(imbalance_from_load(col_load, A.nnz(), tiles));
        nnz_t load = 0;
        if (col_load < row_load) {
            row = col;
            load = col_load;
        } else {
            col = row;
            load = row_load;
        }
        // The trivial start vector has empty bands, so the first aligned vector always seeds the best.
        if (!best || load < best_load) {
            best = col;
            best_load = load;
        }
        i++;
        // Deterministic from here on: the remaining iterations would repeat this one.
        if (col == col_in)
            break;
    }
    tr.iterations = i;
    return PartitionVector(std::move(*best));
}

TileBound TileBound::imbalance(double ell, nnz_t nnz, vid_t p) {
    return {load_cap_for_imbalance(ell, nnz, static_cast<nnz_t>(p) * p)};
}

DiagonalSweep::DiagonalSweep(const PrefixSum2D &S) : S_(&S), cuts_{0} {}

DiagonalSweep::DiagonalSweep(const PrefixSum2D &S, std::span<const vid_t> fixed)
    : S_(&S), cuts_(fixed.begin(), fixed.end()) {
    if (cuts_.empty() || cuts_.front() != 0)
        throw std::invalid_argument("fixed cuts must start at 0");
    for (std::size_t i = 1; i < cuts_.size(); i++) {
        if (cuts_[i] <= cuts_[i - 1] || cuts_[i] > S.n())
            throw std::invalid_argument("fixed cuts must be strictly increasing within [0, n]");
        for (std::size_t b = 0; b < i; b++) {
            max_load_ = std::max(max_load_, S.count_range(cuts_[i - 1], cuts_[i], cuts_[b], cuts_[b + 1]));
            max_load_ = std::max(max_load_, S.count_range(cuts_[b], cuts_[b + 1], cuts_[i - 1], cuts_[i]));
        }
    }
}

nnz_t DiagonalSweep::band_max(vid_t lo, vid_t hi) const noexcept {
    nnz_t best = S_->count_range(lo, hi, lo, hi);
    for (std::size_t b = 0; b + 1 < cuts_.size(); b++) {
        best = std::max(best, S_->count_range(lo, hi, cuts_[b], cuts_[b + 1]));
        best = std::max(best, S_->count_range(cuts_[b], cuts_[b + 1], lo, hi));
    }
    return best;
}

BetaResult DiagonalSweep::advance(nnz_t cap, vid_t upper) {
    const auto from = cuts_.back();
    upper = std::min(upper, S_->n());
    if (from >= upper)
        throw std::logic_error("no room to place another cut after " + std::to_string(from));
    const auto minimal = band_max(from, from + 1);
    if (max_load_ > cap || minimal > cap) {
        cuts_.push_back(from + 1);
        max_load_ = std::max(max_load_, minimal);
        return {from + 1, false};
    }
    // Loads of the new band only grow with its width, so bisect for the last fitting cut.
    auto lo = from + 1;
    auto hi = upper;
    while (lo < hi) {
        const auto mid = lo + (hi - lo + 1) / 2;
        if (band_max(from, mid) <= cap)
            lo = mid;
        else
            hi = mid - 1;
    }
    cuts_.push_back(lo);
    max_load_ = std::max(max_load_, band_max(from, lo));
    return {lo, true};
}

void DiagonalSweep::close() {
    const auto from = cuts_.back();
    if (from >= S_->n())
        return;
    max_load_ = std::max(max_load_, band_max(from, S_->n()));
    cuts_.push_back(S_->n());
}

BetaResult beta(const PrefixSum2D &S, std::span<const vid_t> fixed, TileBound bound, vid_t upper) {
    DiagonalSweep sweep(S, fixed);
    return sweep.advance(bound.cap, upper);
}

bool probe_load(const PrefixSum2D &S, vid_t p, nnz_t cap, std::vector<vid_t> *cuts_out) {
    check_parts("probe", S.n(), p);
    DiagonalSweep sweep(S);
    for (vid_t i = 1; i < p; i++)
        if (!sweep.advance(cap, S.n() - (p - i)).feasible)
            return false;
    sweep.close();
    if (sweep.max_load() > cap)
        return false;
    if (cuts_out)
        cuts_out->assign(sweep.cuts().begin(), sweep.cuts().end());
    return true;
}

bool probe(const PrefixSum2D &S, vid_t p, double ell) {
    return probe_load(S, p, TileBound::imbalance(ell, S.nnz(), p).cap);
}

PtcResult ptc_run(const PrefixSum2D &S, vid_t p) {
    const auto n = S.n();
    check_parts("PTC", n, p);
    if (S.nnz() == 0 || p == 1)
        return {uni(n, p), true, S.nnz()};

    auto C = trivial_cuts(n, p);
    // B[i-1] as a tile load: the imbalance of the determined tiles maps one-to-one onto their max load.
    std::vector<std::optional<nnz_t>> B(p);
    for (vid_t i = 1; i < p; i++) {
        auto l = C[i - 1];
        auto r = n;
        while (l < r) {
            const auto m = l + (r - l) / 2;
            C[i] = m;
            nnz_t load = 0;
            for (vid_t a = 0; a < i; a++)
                for (vid_t b = 0; b < i; b++)
                    load = std::max(load, S.count_range(C[a], C[a + 1], C[b], C[b + 1]));
            if (probe_load(S, p, load)) {
                r = m;
                B[i - 1] = load;
            } else {
                l = m + 1;
            }
        }
        C[i] = r;
    }

    std::optional<nnz_t> best;
    for (const auto &b : B)
        if (b && (!best || *b < *best))
            best = b;

    if (!best) {
        // No probe succeeded: repair the search state into a valid vector.
        for (vid_t i = 1; i < p; i++)
            C[i] = std::clamp(C[i], C[i - 1] + 1, n - (p - i));
        C[p] = n;
        return {PartitionVector(std::move(C)), false, 0};
    }
    std::vector<vid_t> cuts;
    probe_load(S, p, *best, &cuts);
    return {PartitionVector(std::move(cuts)), true, *best};
}

PartitionVector ptc(const SparseMatrix &A, vid_t p) { return ptc(PrefixSum2D(A), p); }

} // namespace symrect
