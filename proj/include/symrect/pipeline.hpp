#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "symrect/common.hpp"
#include "symrect/ordering.hpp"
#include "symrect/prefix.hpp"
#include "symrect/report.hpp"
#include "symrect/sparse_matrix.hpp"

namespace symrect {

enum class Algorithm { uni, nic, pbd, pbi, ptc, btl_pbd, btl_pbi, ptl };

/// "uni", "nic", "pbd", "pbi", "ptc", "btl-pbd", "btl-pbi", "ptl".
Algorithm algorithm_from_name(std::string_view name);
std::string_view to_string(Algorithm a);

/// True for the min-cuts solvers (BTL, PTL), which take a load bound instead of a part count.
bool is_mincuts(Algorithm a) noexcept;

struct RunOptions {
    Algorithm algorithm = Algorithm::ptc;
    /// mLI part count (p = q, also for NIC).
    vid_t parts = 1;
    /// mNC absolute tile-load bound Z.
    nnz_t max_load = 0;
    MliConfig config;
    PrefixSum2DOptions prefix;
};

/**
 * @brief Runs one algorithm on an already ordered matrix and fills every
 * report field except `instance`, `ordering` and `input.source`/`input.hash`.
 * Only the algorithm itself is timed.
 */
PartitionReport run_algorithm(const SparseMatrix &A, const RunOptions &options);

/// Relabels A with the requested ordering, then runs as above and records the ordering name.
PartitionReport run_pipeline(const SparseMatrix &A, OrderingKind ordering, const RunOptions &options);

} // namespace symrect
