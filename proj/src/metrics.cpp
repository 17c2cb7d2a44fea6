#include "symrect/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace symrect {

double TileLoads::avg_load() const noexcept {
    const auto tiles = static_cast<double>(row_bands) * col_bands;
    return tiles > 0 ? static_cast<double>(nnz) / tiles : 0.0;
}

double TileLoads::imbalance() const noexcept {
    return imbalance_from_load(max_load, nnz, static_cast<nnz_t>(row_bands) * col_bands);
}

double imbalance_from_load(nnz_t max_load, nnz_t nnz, nnz_t tiles) noexcept {
    if (nnz <= 0)
        return 0.0;
    return static_cast<double>(max_load) * static_cast<double>(tiles) / static_cast<double>(nnz) - 1.0;
}

nnz_t load_cap_for_imbalance(double ell, nnz_t nnz, nnz_t tiles) noexcept {
    if (nnz <= 0)
        return ell >= 0 ? std::numeric_limits<nnz_t>::max() : -1;
    const auto guess = std::floor((ell + 1.0) * static_cast<double>(nnz) / static_cast<double>(tiles));
    auto cap = static_cast<nnz_t>(std::clamp(guess, -1.0, static_cast<double>(nnz)));
    // Settle on exactly the comparison imbalance_from_load makes, whatever the rounding of the guess.
    while (cap < nnz && imbalance_from_load(cap + 1, nnz, tiles) <= ell)
        cap++;
    while (cap >= 0 && imbalance_from_load(cap, nnz, tiles) > ell)
        cap--;
    return cap;
}

namespace {

void check_extent(const SparseMatrix &A, std::span<const vid_t> cuts, const char *what) {
    if (cuts.size() < 2 || cuts.front() != 0 || cuts.back() != A.n())
        throw DimensionError(std::string(what) + " cuts must span [0, " + std::to_string(A.n()) + "]");
}

// Row-major tile counts; tolerates repeated cut values (empty bands).
std::vector<nnz_t> accumulate(const SparseMatrix &A, std::span<const vid_t> col_cuts, std::span<const vid_t> row_cuts) {
    const auto q = col_cuts.size() - 1;
    std::vector<nnz_t> loads((row_cuts.size() - 1) * q, 0);
    for (std::size_t i = 0; i + 1 < row_cuts.size(); i++) {
        auto *tile_row = &loads[i * q];
        for (auto r = row_cuts[i]; r < row_cuts[i + 1]; r++) {
            const auto cols = A.row(r);
            auto it = cols.begin();
            while (it != cols.end()) {
                const auto k = std::upper_bound(col_cuts.begin(), col_cuts.end(), *it) - col_cuts.begin() - 1;
                const auto stop = std::lower_bound(it, cols.end(), col_cuts[k + 1]);
                tile_row[k] += stop - it;
                it = stop;
            }
        }
    }
    return loads;
}

TileLoads pack(std::vector<nnz_t> loads, vid_t row_bands, vid_t col_bands, nnz_t nnz) {
    TileLoads t;
    t.row_bands = row_bands;
    t.col_bands = col_bands;
    t.nnz = nnz;
    t.max_load = loads.empty() ? 0 : *std::max_element(loads.begin(), loads.end());
    t.loads = std::move(loads);
    return t;
}

} // namespace

TileLoads tile_loads(const SparseMatrix &A, const PartitionVector &col_cuts, const PartitionVector &row_cuts) {
    check_extent(A, col_cuts.cuts(), "column");
    check_extent(A, row_cuts.cuts(), "row");
    return pack(accumulate(A, col_cuts.cuts(), row_cuts.cuts()), row_cuts.parts(), col_cuts.parts(), A.nnz());
}

TileLoads tile_loads(const PrefixSum2D &S, const PartitionVector &col_cuts, const PartitionVector &row_cuts) {
    if (col_cuts.extent() != S.n() || row_cuts.extent() != S.n())
        throw DimensionError("cuts must span [0, " + std::to_string(S.n()) + "]");
    std::vector<nnz_t> loads;
    loads.reserve(static_cast<std::size_t>(row_cuts.parts()) * col_cuts.parts());
    for (vid_t i = 0; i < row_cuts.parts(); i++)
        for (vid_t j = 0; j < col_cuts.parts(); j++)
            loads.push_back(S.count_range(row_cuts[i], row_cuts[i + 1], col_cuts[j], col_cuts[j + 1]));
    return pack(std::move(loads), row_cuts.parts(), col_cuts.parts(), S.nnz());
}

nnz_t max_tile_load(const SparseMatrix &A, std::span<const vid_t> col_cuts, std::span<const vid_t> row_cuts) {
    check_extent(A, col_cuts, "column");
    check_extent(A, row_cuts, "row");
    const auto loads = accumulate(A, col_cuts, row_cuts);
    return loads.empty() ? 0 : *std::max_element(loads.begin(), loads.end());
}

double load_imbalance(const SparseMatrix &A, const PartitionVector &col_cuts, const PartitionVector &row_cuts) {
    return tile_loads(A, col_cuts, row_cuts).imbalance();
}

double restricted_imbalance(const SparseMatrix &A, std::span<const vid_t> cuts, vid_t k) {
    if (k < 1)
        return 0.0;
    const auto p = static_cast<nnz_t>(cuts.size()) - 1;
    if (k > p)
        throw std::out_of_range("step k exceeds the number of parts");
    const auto fixed = cuts.first(static_cast<std::size_t>(k) + 1);
    const auto limit = fixed.back();
    nnz_t best = 0;
    std::vector<nnz_t> band(static_cast<std::size_t>(k), 0);
    for (vid_t a = 0; a < k; a++) {
        std::fill(band.begin(), band.end(), 0);
        for (auto r = fixed[a]; r < fixed[a + 1]; r++) {
            const auto cols = A.row(r);
            auto it = cols.begin();
            const auto last = std::lower_bound(cols.begin(), cols.end(), limit);
            while (it != last) {
                const auto b = std::upper_bound(fixed.begin(), fixed.end(), *it) - fixed.begin() - 1;
                const auto stop = std::lower_bound(it, last, fixed[b + 1]);
                band[b] += stop - it;
                it = stop;
            }
        }
        best = std::max(best, *std::max_element(band.begin(), band.end()));
    }
    return imbalance_from_load(best, A.nnz(), p * p);
}

double restricted_imbalance(const PrefixSum2D &S, std::span<const vid_t> cuts, vid_t k) {
    if (k < 1)
        return 0.0;
    const auto p = static_cast<nnz_t>(cuts.size()) - 1;
    if (k > p)
        throw std::out_of_range("step k exceeds the number of parts");
    nnz_t best = 0;
    for (vid_t a = 0; a < k; a++)
        for (vid_t b = 0; b < k; b++)
            best = std::max(best, S.count_range(cuts[a], cuts[a + 1], cuts[b], cuts[b + 1]));
    return imbalance_from_load(best, S.nnz(), p * p);
}

} // namespace symrect
