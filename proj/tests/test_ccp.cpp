#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symrect/ccp.hpp"

using namespace symrect;

namespace {

PrefixSum1D prefix_of(const std::vector<nnz_t> &w) { return PrefixSum1D::from_weights(w); }

// Lexicographically first optimal vector by enumeration.
std::vector<vid_t> first_optimal(const std::vector<nnz_t> &w, vid_t p) {
    const auto best = oracle::ccp_bottleneck(w, p);
    std::vector<vid_t> found;
    oracle::for_each_cut_vector(static_cast<vid_t>(w.size()), p, [&](const std::vector<vid_t> &c) {
        if (found.empty() && oracle::interval_bottleneck(w, c) == best)
            found = c;
    });
    return found;
}

} // namespace

TEST_SUITE("ccp-1d") {
    TEST_CASE("PartitionVector invariants") {
        CHECK_THROWS_AS(PartitionVector({0}), std::invalid_argument);
        CHECK_THROWS_AS(PartitionVector({1, 3}), std::invalid_argument);
        CHECK_THROWS_AS(PartitionVector({0, 2, 2, 4}), std::invalid_argument);
        const PartitionVector c({0, 2, 5});
        CHECK(c.parts() == 2);
        CHECK(c.extent() == 5);
        CHECK(PartitionVector::single(7).vector() == std::vector<vid_t>{0, 7});
    }

    TEST_CASE("even split of unit weights") {
        const auto c = optimal_1d_partition(prefix_of(std::vector<nnz_t>(10, 1)), 2);
        CHECK(c.vector() == std::vector<vid_t>{0, 5, 10});
        CHECK(bottleneck(prefix_of(std::vector<nnz_t>(10, 1)), c.cuts()) == 5);
    }

    TEST_CASE("dominant item forces the first cut") {
        const std::vector<nnz_t> w{9, 1, 1, 1};
        const auto c = optimal_1d_partition(prefix_of(w), 2);
        CHECK(c.vector() == std::vector<vid_t>{0, 1, 4});
        CHECK(optimal_bottleneck(prefix_of(w), 2) == 9);
    }

    TEST_CASE("zero weights still give non-empty intervals") {
        const auto c = optimal_1d_partition(prefix_of(std::vector<nnz_t>(5, 0)), 5);
        CHECK(c.vector() == std::vector<vid_t>{0, 1, 2, 3, 4, 5});
        CHECK(optimal_1d_partition(prefix_of({0, 0, 7}), 2).vector() == std::vector<vid_t>{0, 1, 3});
    }

    TEST_CASE("infeasible part counts") {
        CHECK_THROWS_AS(optimal_1d_partition(prefix_of({1, 2}), 3), InfeasibleError);
        CHECK_THROWS_AS(optimal_1d_partition(prefix_of({1, 2}), 0), InfeasibleError);
    }

    TEST_CASE("random arrays match enumeration, including the tie-break") {
        std::mt19937_64 rng(12);
        std::uniform_int_distribution<int> len(1, 12), wt(0, 9);
        for (int t = 0; t < 300; t++) {
            std::vector<nnz_t> w(len(rng));
            for (auto &x : w)
                x = wt(rng);
            const auto n = static_cast<vid_t>(w.size());
            for (vid_t p = 1; p <= std::min<vid_t>(5, n); p++) {
                const auto c = optimal_1d_partition(prefix_of(w), p);
                CHECK(c.parts() == p);
                CHECK(c.extent() == n);
                CHECK(bottleneck(prefix_of(w), c.cuts()) == oracle::ccp_bottleneck(w, p));
                CHECK(c.vector() == first_optimal(w, p));
            }
        }
    }

    TEST_CASE("optimal bottleneck is non-increasing in p") {
        std::mt19937_64 rng(13);
        std::uniform_int_distribution<int> wt(0, 20);
        for (int t = 0; t < 50; t++) {
            std::vector<nnz_t> w(30);
            for (auto &x : w)
                x = wt(rng);
            for (vid_t p = 1; p < 30; p++)
                CHECK(optimal_bottleneck(prefix_of(w), p + 1) <= optimal_bottleneck(prefix_of(w), p));
        }
    }

    TEST_CASE("refinement on the identity") {
        const auto I = oracle::identity(4);
        const PartitionVector fixed({0, 2, 4});
        CHECK(refinement_weights(I, fixed.cuts()) == std::vector<nnz_t>{1, 1, 1, 1});
        CHECK(refinement(I, fixed, 2, Direction::column).vector() == std::vector<vid_t>{0, 2, 4});
    }

    TEST_CASE("refinement with one dense row matches enumeration") {
        std::vector<std::pair<vid_t, vid_t>> e;
        for (vid_t c = 0; c < 6; c++)
            e.emplace_back(2, c);
        e.emplace_back(0, 0);
        e.emplace_back(4, 5);
        const auto A = SparseMatrix::from_entries(6, e);
        const PartitionVector fixed({0, 3, 6});
        const auto w = refinement_weights(A, fixed.cuts());
        CHECK(w == std::vector<nnz_t>{1, 0, 3, 0, 1, 0});
        const auto rows = refinement(A, fixed, 2, Direction::column);
        CHECK(oracle::interval_bottleneck(w, rows.vector()) == oracle::ccp_bottleneck(w, 2));
        // Tile maximum under (fixed columns, refined rows) equals the 1D bottleneck.
        CHECK(oracle::scan_max(A, fixed.vector(), rows.vector()) == oracle::ccp_bottleneck(w, 2));
    }

    TEST_CASE("refinement weights are bounded by the degree") {
        std::mt19937_64 rng(14);
        for (int t = 0; t < 30; t++) {
            const auto A = oracle::random_matrix(rng, 15, 0.25);
            const PartitionVector fixed({0, 4, 9, 15});
            const auto w = refinement_weights(A, fixed.cuts());
            for (vid_t i = 0; i < A.n(); i++) {
                CHECK(w[i] <= A.degree(i));
                int bands_hit = 0;
                for (vid_t k = 0; k < 3; k++) {
                    bool hit = false;
                    for (auto c : A.row(i))
                        hit |= c >= fixed[k] && c < fixed[k + 1];
                    bands_hit += hit;
                }
                CHECK((w[i] == A.degree(i)) == (bands_hit <= 1));
            }
        }
    }

    TEST_CASE("refinement tolerates empty fixed intervals") {
        const auto I = oracle::identity(4);
        const std::vector<vid_t> trivial{0, 4, 4};
        CHECK(refinement_weights(I, trivial) == std::vector<nnz_t>{1, 1, 1, 1});
        CHECK_THROWS_AS(refinement_weights(I, std::vector<vid_t>{0, 3}), DimensionError);
    }

    TEST_CASE("row direction refines the transpose") {
        std::mt19937_64 rng(15);
        const auto A = oracle::random_matrix(rng, 12, 0.3);
        const PartitionVector fixed({0, 6, 12});
        CHECK(refinement(A, fixed, 3, Direction::row) == refinement(A.transpose(), fixed, 3, Direction::column));
    }
}
