#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "symrect/sparse_matrix.hpp"

namespace symrect {

enum class OrderingKind { natural, degree, rcm };

OrderingKind ordering_from_name(std::string_view name);
std::string_view to_string(OrderingKind kind);

/**
 * @brief A relabeling of [0, n): `perm()[old] == new`, `inv()[new] == old`.
 */
class OrderingPermutation {
  public:
    OrderingPermutation() = default;

    /// `order[k]` is the old id placed at position k. Throws if it is not a bijection.
    static OrderingPermutation from_order(OrderingKind kind, std::vector<vid_t> order);
    static OrderingPermutation identity(vid_t n);

    OrderingKind kind() const noexcept { return kind_; }
    vid_t n() const noexcept { return static_cast<vid_t>(perm_.size()); }
    std::span<const vid_t> perm() const noexcept { return perm_; }
    std::span<const vid_t> inv() const noexcept { return inv_; }

    bool is_identity() const noexcept;

  private:
    OrderingKind kind_ = OrderingKind::natural;
    std::vector<vid_t> perm_;
    std::vector<vid_t> inv_;
};

OrderingPermutation natural_order(const SparseMatrix &A);

/// Stable sort by non-decreasing row degree; ties keep natural order.
OrderingPermutation degree_order(const SparseMatrix &A);

/**
 * @brief Reverse Cuthill-McKee on the symmetrized pattern (diagonal ignored).
 *
 * Components are handled in ascending order of their smallest vertex id.
 * Each is traversed breadth-first from a pseudo-peripheral vertex found by
 * repeated BFS, with unvisited neighbours queued by ascending degree, and
 * its visit order is reversed in place. Isolated vertices therefore keep
 * their relative natural position.
 */
OrderingPermutation rcm_order(const SparseMatrix &A);

OrderingPermutation compute_ordering(const SparseMatrix &A, OrderingKind kind);

/// Symmetric relabeling P A P^T; throws DimensionError on size mismatch.
SparseMatrix apply_ordering(const SparseMatrix &A, const OrderingPermutation &perm);

/// max |i - j| over stored entries; 0 for an empty matrix.
vid_t bandwidth(const SparseMatrix &A);

} // namespace symrect
