#include "symrect/pipeline.hpp"

#include <chrono>

#include "symrect/baselines.hpp"
#include "symrect/metrics.hpp"
#include "symrect/mincuts.hpp"
#include "symrect/sym_partitioners.hpp"

namespace symrect {

namespace {

struct NameEntry {
    Algorithm algo;
    std::string_view name;
};

constexpr NameEntry kNames[] = {
    {Algorithm::uni, "uni"},         {Algorithm::nic, "nic"},         {Algorithm::pbd, "pbd"},
    {Algorithm::pbi, "pbi"},         {Algorithm::ptc, "ptc"},         {Algorithm::btl_pbd, "btl-pbd"},
    {Algorithm::btl_pbi, "btl-pbi"}, {Algorithm::ptl, "ptl"},
};

std::vector<std::vector<nnz_t>> grid(const TileLoads &t) {
    std::vector<std::vector<nnz_t>> g(static_cast<std::size_t>(t.row_bands));
    for (vid_t i = 0; i < t.row_bands; i++)
        for (vid_t j = 0; j < t.col_bands; j++)
            g[i].push_back(t.at(i, j));
    return g;
}

} // namespace

Algorithm algorithm_from_name(std::string_view name) {
    for (const auto &e : kNames)
        if (e.name == name)
            return e.algo;
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(Algorithm a) {
    for (const auto &e : kNames)
        if (e.algo == a)
            return e.name;
    return "?";
}

bool is_mincuts(Algorithm a) noexcept {
    return a == Algorithm::btl_pbd || a == Algorithm::btl_pbi || a == Algorithm::ptl;
}

PartitionReport run_algorithm(const SparseMatrix &A, const RunOptions &options) {
    options.config.validate();
    PartitionReport r;
    r.algorithm = std::string(to_string(options.algorithm));
    r.tau = options.config.tau;
    r.epsilon = options.config.epsilon;
    r.input.n = A.n();
    r.input.nnz = A.nnz();

    std::optional<PartitionVector> col, row;
    const auto start = std::chrono::steady_clock::now();
    switch (options.algorithm) {
    case Algorithm::uni:
        col = uni(A, options.parts);
        break;
    case Algorithm::nic: {
        auto res = nic(A, options.parts, options.parts, options.config);
        col = std::move(res.col_cuts);
        row = std::move(res.row_cuts);
        r.converged = res.converged;
        break;
    }
    case Algorithm::pbd:
        col = pbd(A, options.parts, options.config);
        break;
    case Algorithm::pbi:
        col = pbi(A, options.parts, options.config);
        break;
    case Algorithm::ptc: {
        auto res = ptc_run(PrefixSum2D(A, options.prefix), options.parts);
        col = std::move(res.cuts);
        r.converged = res.converged;
        break;
    }
    case Algorithm::btl_pbd:
    case Algorithm::btl_pbi:
    case Algorithm::ptl: {
        if (options.max_load < 1)
            throw InfeasibleError("max load Z must be >= 1");
        auto res = options.algorithm == Algorithm::ptl
                       ? ptl(PrefixSum2D(A, options.prefix), options.max_load)
                       : btl(A, options.max_load,
                             options.algorithm == Algorithm::btl_pbd ? BtlInner::pbd : BtlInner::pbi, options.config);
        col = std::move(res.cuts);
        r.max_load_bound = options.max_load;
        r.bound_satisfied = res.bound_satisfied;
        break;
    }
    }
    const auto stop = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

    r.symmetric = !row.has_value();
    if (!row)
        row = col;
    const auto loads = tile_loads(A, *col, *row);
    r.p = col->parts();
    r.q = row->parts();
    r.col_cuts = col->vector();
    r.row_cuts = row->vector();
    r.lambda = loads.imbalance();
    r.max_load = loads.max_load;
    r.avg_load = loads.avg_load();
    r.tile_loads = grid(loads);
    if (!r.symmetric) {
        r.lambda_row_symmetric = load_imbalance(A, *row);
        r.lambda_col_symmetric = load_imbalance(A, *col);
    }
    return r;
}

PartitionReport run_pipeline(const SparseMatrix &A, OrderingKind ordering, const RunOptions &options) {
    const auto ordered = apply_ordering(A, compute_ordering(A, ordering));
    auto r = run_algorithm(ordered, options);
    r.ordering = std::string(to_string(ordering));
    return r;
}

} // namespace symrect
