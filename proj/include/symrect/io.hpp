#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "symrect/sparse_matrix.hpp"

namespace symrect {

enum class MatrixFormat {
    matrix_market, ///< coordinate format, 1-based
    edge_list,     ///< "u v" per line, 0-based, '#' comments; "# n N" sets a minimum n
};

MatrixFormat format_from_name(std::string_view name);
std::string_view to_string(MatrixFormat f);

struct LoadOptions {
    /// Store (v,u) for every (u,v).
    bool symmetrize = false;
    bool drop_self_loops = false;
    /// Edge lists only: relabel the distinct ids to 0..k-1 in ascending order.
    bool compact_ids = false;
};

/**
 * @brief Parses a pattern matrix. Values in real/integer Matrix Market files
 * are ignored. A `symmetric` header stores both triangles.
 *
 * Throws ParseError (with line number) on malformed input and DimensionError
 * for a non-square Matrix Market header unless `symmetrize` is set, in which
 * case the matrix is padded to max(rows, cols).
 */
SparseMatrix load_matrix(std::istream &in, MatrixFormat format, const LoadOptions &options = {});
SparseMatrix load_matrix(std::string_view text, MatrixFormat format, const LoadOptions &options = {});
SparseMatrix load_matrix_file(const std::filesystem::path &path, MatrixFormat format,
                              const LoadOptions &options = {});

/// Writes a general pattern Matrix Market file or a 0-based edge list.
void write_matrix(std::ostream &out, const SparseMatrix &A, MatrixFormat format);

/// FNV-1a 64-bit digest, used to fingerprint input files in reports.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

std::string read_file(const std::filesystem::path &path);

} // namespace symrect
