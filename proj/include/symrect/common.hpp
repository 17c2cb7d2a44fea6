#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symrect {

/// Vertex (row/column) identifiers and cut positions.
using vid_t = std::int32_t;
/// Offsets, nonzero counts and tile loads.
using nnz_t = std::int64_t;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input; `line()` is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Requested number of parts cannot be realized (e.g. p > n).
class InfeasibleError : public Error {
  public:
    using Error::Error;
};

/**
 * @brief Iteration controls shared by the refinement based heuristics
 * (PBD, PBI) and Nicol's alternating baseline.
 */
struct MliConfig {
    int tau = 20;
    double epsilon = 0.0001;

    void validate() const {
        if (tau < 1)
            throw std::invalid_argument("tau must be >= 1");
        if (!(epsilon > 0))
            throw std::invalid_argument("epsilon must be > 0");
    }
};

} // namespace symrect
