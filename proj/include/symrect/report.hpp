#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "symrect/common.hpp"

namespace symrect {

inline constexpr int kReportSchema = 1;

struct InputDigest {
    std::string source;
    vid_t n = 0;
    nnz_t nnz = 0;
    std::string hash; ///< fnv1a64 of the input bytes, hex

    friend bool operator==(const InputDigest &, const InputDigest &) = default;
};

/**
 * @brief Outcome of one partitioning run.
 *
 * `p` counts column intervals and `q` row intervals; for symmetric runs they
 * are equal and both cut vectors coincide. `tile_loads` is q x p (row bands
 * first). Serialized as JSON with `schema: 1`; wall time lives under
 * "timing" so that the rest of the document is deterministic.
 */
struct PartitionReport {
    std::string instance;
    std::string algorithm;
    std::string ordering;
    vid_t p = 0;
    vid_t q = 0;
    bool symmetric = true;
    std::vector<vid_t> col_cuts;
    std::vector<vid_t> row_cuts;
    double lambda = 0.0;
    nnz_t max_load = 0;
    double avg_load = 0.0;
    std::vector<std::vector<nnz_t>> tile_loads;
    /// Asymmetric runs: lambda(A, C_r, C_r) and lambda(A, C_c, C_c).
    std::optional<double> lambda_row_symmetric;
    std::optional<double> lambda_col_symmetric;
    /// Min-cuts runs only.
    std::optional<nnz_t> max_load_bound;
    std::optional<bool> bound_satisfied;
    bool converged = true;
    int tau = 20;
    double epsilon = 0.0001;
    InputDigest input;
    double wall_ms = 0.0;

    friend bool operator==(const PartitionReport &, const PartitionReport &) = default;
};

nlohmann::json to_json(const PartitionReport &r);
PartitionReport report_from_json(const nlohmann::json &j);

/// One-line CSV view (header + row); cut vectors are space separated.
void write_report_csv(std::ostream &out, const PartitionReport &r);

/// Tile loads as percentages of nnz, q x p.
std::vector<std::vector<double>> density_percentages(const PartitionReport &r);

/// Header `row_band,0,1,...`, then one line per row band.
void write_density_csv(std::ostream &out, const std::vector<std::vector<double>> &grid);

/// Fixed-width table of percentages, each followed by a shade glyph scaled to the grid maximum.
void write_density_ascii(std::ostream &out, const std::vector<std::vector<double>> &grid);

struct ProfileSample {
    std::string instance;
    std::string algorithm;
    double value = 0.0;
};

struct PerformanceProfile {
    std::vector<double> x;
    std::vector<std::string> algorithms;
    /// fraction[a][k]: share of instances where algorithm a is within x[k] times the best value.
    std::vector<std::vector<double>> fraction;
    std::size_t instances = 0;
};

/**
 * @brief Dolan-More performance profile over per-instance values (lower is
 * better). When the best value of an instance is 0, only exact ties count
 * as within any factor. Throws Error naming the missing keys when the
 * algorithms were not all run on the same instances.
 */
PerformanceProfile performance_profile(std::span<const ProfileSample> samples, std::vector<double> x_grid);

/// Long format: `algorithm,x,fraction`.
void write_profile_csv(std::ostream &out, const PerformanceProfile &profile);

/// Reads `instance,algorithm,value` (or `lambda`) columns from a CSV with a header row.
std::vector<ProfileSample> read_profile_table(std::istream &in);

} // namespace symrect
