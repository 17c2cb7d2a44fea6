#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symrect/baselines.hpp"
#include "symrect/metrics.hpp"

using namespace symrect;

namespace {

std::vector<vid_t> random_cuts(std::mt19937_64 &rng, vid_t n, vid_t p) {
    std::vector<vid_t> pool(n - 1);
    for (vid_t i = 0; i < n - 1; i++)
        pool[i] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<vid_t> c(pool.begin(), pool.begin() + (p - 1));
    c.push_back(0);
    c.push_back(n);
    std::sort(c.begin(), c.end());
    return c;
}

} // namespace

TEST_SUITE("baselines-metrics") {
    TEST_CASE("tile loads on the identity") {
        const auto I = oracle::identity(6);
        const PartitionVector c({0, 3, 6});
        const auto t = tile_loads(I, c, c);
        CHECK(t.loads == std::vector<nnz_t>{3, 0, 0, 3});
        CHECK(t.max_load == 3);
        CHECK(t.avg_load() == doctest::Approx(1.5));
        const auto one = tile_loads(I, PartitionVector::single(6), PartitionVector::single(6));
        CHECK(one.loads == std::vector<nnz_t>{6});
    }

    TEST_CASE("tile loads agree with a direct scan and with the prefix structure") {
        std::mt19937_64 rng(31);
        for (int t = 0; t < 40; t++) {
            const auto A = oracle::random_matrix(rng, 20, 0.2);
            const auto cc = random_cuts(rng, 20, 1 + t % 5);
            const auto cr = random_cuts(rng, 20, 1 + (t / 5) % 4);
            const auto want = oracle::scan_tiles(A, cc, cr);
            const auto got = tile_loads(A, PartitionVector(cc), PartitionVector(cr));
            const auto via_prefix = tile_loads(PrefixSum2D(A, {0}), PartitionVector(cc), PartitionVector(cr));
            nnz_t sum = 0;
            for (vid_t i = 0; i < got.row_bands; i++)
                for (vid_t j = 0; j < got.col_bands; j++) {
                    CHECK(got.at(i, j) == want[i][j]);
                    CHECK(via_prefix.at(i, j) == want[i][j]);
                    sum += got.at(i, j);
                }
            CHECK(sum == A.nnz());
            CHECK(static_cast<double>(got.max_load) >= got.avg_load());
            CHECK(got.imbalance() >= 0.0);
            CHECK(max_tile_load(A, cc, cr) == got.max_load);
        }
    }

    TEST_CASE("imbalance arithmetic") {
        // L_max = 5 against L_avg = 3.6 (18 nonzeros over 5 tiles).
        CHECK(imbalance_from_load(5, 18, 5) == doctest::Approx(5.0 / 3.6 - 1.0));
        CHECK(imbalance_from_load(5, 18, 5) == doctest::Approx(0.39).epsilon(0.01));
        const auto I = oracle::identity(6);
        // Off-diagonal tiles of a symmetric split of the identity are empty.
        CHECK(load_imbalance(I, PartitionVector({0, 3, 6})) == 1.0);
        std::vector<std::pair<vid_t, vid_t>> all;
        for (vid_t r = 0; r < 6; r++)
            for (vid_t c = 0; c < 6; c++)
                all.emplace_back(r, c);
        CHECK(load_imbalance(SparseMatrix::from_entries(6, all), PartitionVector({0, 3, 6})) == 0.0);
        CHECK(load_imbalance(I, PartitionVector({0, 1, 6})) == doctest::Approx(5.0 / 1.5 - 1.0));
        CHECK(load_imbalance(SparseMatrix::from_entries(4, {}), PartitionVector({0, 2, 4})) == 0.0);
    }

    TEST_CASE("zero imbalance exactly when all tiles are equal") {
        std::mt19937_64 rng(32);
        for (int t = 0; t < 40; t++) {
            const auto A = oracle::random_matrix(rng, 8, 0.5);
            const auto c = random_cuts(rng, 8, 2);
            const auto loads = tile_loads(A, PartitionVector(c), PartitionVector(c));
            const bool equal = std::all_of(loads.loads.begin(), loads.loads.end(),
                                           [&](nnz_t x) { return x == loads.loads.front(); });
            CHECK((loads.imbalance() == 0.0) == (equal || A.nnz() == 0));
        }
    }

    TEST_CASE("load caps invert the imbalance") {
        for (nnz_t nnz : {1, 7, 100, 12345})
            for (nnz_t tiles : {1, 4, 9, 64})
                for (double ell : {0.0, 0.1, 0.39, 1.0, 2.5}) {
                    const auto cap = load_cap_for_imbalance(ell, nnz, tiles);
                    if (cap >= 0)
                        CHECK(imbalance_from_load(cap, nnz, tiles) <= ell);
                    if (cap < nnz)
                        CHECK(imbalance_from_load(cap + 1, nnz, tiles) > ell);
                }
        CHECK(load_cap_for_imbalance(-1.5, 10, 1) == -1);
    }

    TEST_CASE("restricted imbalance") {
        const auto I = oracle::identity(6);
        const std::vector<vid_t> c{0, 3, 6};
        CHECK(restricted_imbalance(I, c, 2) == doctest::Approx(load_imbalance(I, PartitionVector(c))));
        // One 3-nonzero tile against L_avg = 6 / 4.
        CHECK(restricted_imbalance(I, c, 1) == doctest::Approx(3.0 / 1.5 - 1.0));
        CHECK(restricted_imbalance(I, c, 0) == 0.0);
        CHECK_THROWS_AS(restricted_imbalance(I, c, 3), std::out_of_range);

        std::mt19937_64 rng(33);
        for (int t = 0; t < 30; t++) {
            const auto A = oracle::random_matrix(rng, 16, 0.25);
            const auto cuts = random_cuts(rng, 16, 5);
            const PrefixSum2D S(A);
            double prev = -1.0;
            for (vid_t k = 1; k <= 5; k++) {
                const auto v = restricted_imbalance(A, cuts, k);
                CHECK(v == doctest::Approx(restricted_imbalance(S, cuts, k)));
                CHECK(v >= prev);
                prev = v;
            }
        }
    }

    TEST_CASE("uniform cuts") {
        CHECK(uni(10, 3).vector() == std::vector<vid_t>{0, 3, 6, 10});
        CHECK(uni(8, 8).vector() == std::vector<vid_t>{0, 1, 2, 3, 4, 5, 6, 7, 8});
        CHECK(uni(7, 3).vector() == std::vector<vid_t>{0, 2, 4, 7});
        CHECK_THROWS_AS(uni(3, 4), InfeasibleError);
        CHECK_THROWS_AS(uni(3, 0), InfeasibleError);
    }

    TEST_CASE("nic") {
        const auto I = oracle::identity(6);
        const auto one = nic(I, 1, 1);
        CHECK(one.col_cuts.vector() == std::vector<vid_t>{0, 6});
        CHECK(one.row_cuts.vector() == std::vector<vid_t>{0, 6});

        const auto r = nic(oracle::block_diagonal(16, 4), 4, 4);
        CHECK(r.converged);
        CHECK(load_imbalance(oracle::block_diagonal(16, 4), r.col_cuts, r.row_cuts) <= 3.0);

        const auto rect = nic(I, 3, 2);
        CHECK(rect.col_cuts.parts() == 3);
        CHECK(rect.row_cuts.parts() == 2);
        CHECK_THROWS_AS(nic(I, 7, 1), InfeasibleError);
        CHECK_THROWS_AS(nic(I, 2, 2, MliConfig{0, 0.1}), std::invalid_argument);
    }

    TEST_CASE("nic is no worse than uni on the frozen fixtures") {
        std::mt19937_64 rng(34);
        for (int t = 0; t < 20; t++) {
            const auto A = oracle::random_matrix(rng, 16, 0.2 + 0.01 * t, true);
            const auto r = nic(A, 4, 4);
            CAPTURE(t);
            CHECK(load_imbalance(A, r.col_cuts, r.row_cuts) <= load_imbalance(A, uni(16, 4)));
        }
    }

    TEST_CASE("brute force") {
        const auto I = oracle::identity(6);
        const auto r = brute_force_symmetric(I, 2);
        CHECK(r.lambda == 1.0);
        CHECK(r.cuts.vector() == std::vector<vid_t>{0, 3, 6});
        CHECK(brute_force_symmetric(I, 1).lambda == 0.0);
        CHECK_THROWS_AS(brute_force_symmetric(oracle::identity(21), 2), InfeasibleError);
        CHECK_THROWS_AS(brute_force_symmetric(I, 6), InfeasibleError);

        std::mt19937_64 rng(35);
        for (int t = 0; t < 30; t++) {
            const auto A = oracle::random_matrix(rng, 10 + t % 5, 0.3);
            for (vid_t p = 1; p <= 4; p++) {
                const auto bf = brute_force_symmetric(A, p);
                const auto want = oracle::symmetric_optimum(A, p);
                CHECK(bf.max_load == want.max_load);
                CHECK(bf.cuts.vector() == want.cuts);
                CHECK(bf.lambda == doctest::Approx(oracle::lambda(want.max_load, A.nnz(), p * p)));
            }
        }
    }
}
