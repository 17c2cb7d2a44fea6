#include "symrect/prefix.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace symrect {

PrefixSum1D::PrefixSum1D(std::vector<nnz_t> values) : values_(std::move(values)) {
    if (values_.empty() || values_.front() != 0)
        throw std::invalid_argument("prefix sum must start with 0");
    for (std::size_t i = 1; i < values_.size(); i++)
        if (values_[i] < values_[i - 1])
            throw std::invalid_argument("prefix sum must be non-decreasing (negative weight at " +
                                        std::to_string(i - 1) + ")");
}

PrefixSum1D PrefixSum1D::from_weights(std::span<const nnz_t> weights) {
    std::vector<nnz_t> values(weights.size() + 1, 0);
    for (std::size_t i = 0; i < weights.size(); i++)
        values[i + 1] = values[i] + weights[i];
    return PrefixSum1D(std::move(values));
}

namespace {

constexpr vid_t lowbit(vid_t k) noexcept { return k & -k; }

} // namespace

PrefixSum2D::PrefixSum2D(const SparseMatrix &A, PrefixSum2DOptions options) : n_(A.n()), nnz_(A.nnz()) {
    const auto w = static_cast<std::size_t>(n_) + 1;
    if (n_ > 0 && n_ <= options.dense_threshold && nnz_ <= std::numeric_limits<std::uint32_t>::max()) {
        dense_.assign(w * w, 0);
        for (vid_t r = 0; r < n_; r++) {
            auto *above = &dense_[r * w];
            auto *cur = &dense_[(r + 1) * w];
            std::uint32_t run = 0;
            auto cols = A.row(r);
            auto it = cols.begin();
            for (vid_t c = 0; c < n_; c++) {
                while (it != cols.end() && *it == c) {
                    run++;
                    ++it;
                }
                cur[c + 1] = above[c + 1] + run;
            }
        }
        return;
    }

    node_offsets_.assign(w, 0);
    for (vid_t k = 1; k <= n_; k++) {
        const auto first = k - lowbit(k);
        node_offsets_[k] = node_offsets_[k - 1] + (A.row_offsets()[k] - A.row_offsets()[first]);
    }
    cols_.resize(static_cast<std::size_t>(node_offsets_.back()));
    for (vid_t k = 1; k <= n_; k++) {
        const auto first = k - lowbit(k);
        const auto src = A.col_indices().subspan(static_cast<std::size_t>(A.row_offsets()[first]),
                                                 static_cast<std::size_t>(A.row_offsets()[k] - A.row_offsets()[first]));
        auto dst = cols_.begin() + node_offsets_[k - 1];
        std::copy(src.begin(), src.end(), dst);
        std::sort(dst, dst + static_cast<std::ptrdiff_t>(src.size()));
    }
}

nnz_t PrefixSum2D::rows_prefix(vid_t rows, vid_t c_begin, vid_t c_end) const noexcept {
    nnz_t total = 0;
    for (auto k = rows; k > 0; k -= lowbit(k)) {
        const auto first = cols_.begin() + node_offsets_[k - 1];
        const auto last = cols_.begin() + node_offsets_[k];
        total += std::lower_bound(first, last, c_end) - std::lower_bound(first, last, c_begin);
    }
    return total;
}

nnz_t PrefixSum2D::count(vid_t r_lo, vid_t r_hi, vid_t c_lo, vid_t c_hi) const {
    if (r_lo < 0 || c_lo < 0 || r_hi >= n_ || c_hi >= n_ || r_lo > r_hi || c_lo > c_hi)
        throw std::out_of_range("rectangle [" + std::to_string(r_lo) + "," + std::to_string(r_hi) + "]x[" +
                                std::to_string(c_lo) + "," + std::to_string(c_hi) + "] outside 0.." +
                                std::to_string(n_ - 1));
    return count_range(r_lo, r_hi + 1, c_lo, c_hi + 1);
}

} // namespace symrect
