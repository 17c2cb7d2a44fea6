import itertools
import random

import pytest

import symrect


def identity(n):
    return symrect.SparseMatrix(n, [(i, i) for i in range(n)])


def random_symmetric(n, density, seed):
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return symrect.SparseMatrix(n, edges, symmetrize=True)


def test_matrix_basics():
    A = symrect.SparseMatrix(3, [(0, 1), (1, 2)], symmetrize=True)
    assert A.n == 3
    assert A.nnz == 4
    assert A.is_symmetric()
    assert A.contains(1, 0)
    assert not A.contains(0, 2)
    assert A.degree(1) == 2
    assert A.transpose() == A
    assert "n=3" in repr(A)


def test_load_and_dump_round_trip():
    A = symrect.load_matrix("0 1\n1 2\n# trailing comment\n", format="edges")
    assert A.nnz == 4
    text = symrect.dump_matrix(A, "mtx")
    assert symrect.load_matrix(text, "mtx") == A


def test_parse_errors_are_value_errors():
    with pytest.raises(symrect.ParseError):
        symrect.load_matrix("0 x\n", format="edges")
    assert issubclass(symrect.ParseError, ValueError)
    assert issubclass(symrect.InfeasibleError, ValueError)


def test_orderings_are_permutations():
    A = random_symmetric(30, 0.1, 7)
    for kind in ("nat", "deg", "rcm"):
        perm = symrect.ordering(A, kind)
        assert sorted(perm) == list(range(30))
    assert symrect.ordering(A, "nat") == list(range(30))
    assert symrect.bandwidth(symrect.reorder(A, "rcm")) <= A.n


def test_count_rect_matches_entries():
    A = random_symmetric(12, 0.3, 3)
    entries = A.entries()
    for r0, r1, c0, c1 in [(0, 11, 0, 11), (2, 5, 3, 9), (7, 7, 0, 11)]:
        want = sum(1 for r, c in entries if r0 <= r <= r1 and c0 <= c <= c1)
        assert symrect.count_rect(A, r0, r1, c0, c1) == want


def test_ccp_against_enumeration():
    rng = random.Random(11)
    for _ in range(50):
        w = [rng.randint(0, 9) for _ in range(rng.randint(1, 9))]
        p = rng.randint(1, min(4, len(w)))
        cuts, bottleneck = symrect.optimal_1d_partition(w, p)
        best = min(
            max(sum(w[a:b]) for a, b in zip((0,) + inner, inner + (len(w),)))
            for inner in itertools.combinations(range(1, len(w)), p - 1)
        )
        assert bottleneck == best
        assert cuts[0] == 0 and cuts[-1] == len(w) and len(cuts) == p + 1


def test_uni_example():
    assert symrect.uni(10, 2) == [0, 5, 10]
    with pytest.raises(symrect.InfeasibleError):
        symrect.uni(3, 4)


def test_heuristics_respect_the_brute_force_floor():
    for seed in range(10):
        A = random_symmetric(12, 0.3, seed)
        for p in (2, 3):
            _, best = symrect.brute_force_symmetric(A, p)
            for cuts in (symrect.uni(A.n, p), symrect.pbd(A, p), symrect.pbi(A, p), symrect.ptc(A, p)):
                assert symrect.load_imbalance(A, cuts) >= best - 1e-12
            col, row = symrect.nic(A, p)
            assert len(col) == len(row) == p + 1


def test_tile_loads_identity():
    assert symrect.tile_loads(identity(6), [0, 3, 6], [0, 3, 6]) == [[3, 0], [0, 3]]
    assert symrect.load_imbalance(identity(6), [0, 1, 6]) == pytest.approx(5 / 1.5 - 1)


def test_probe_huge_target():
    A = random_symmetric(10, 0.3, 5)
    assert symrect.probe(A, 3, 9.0)


def test_mincuts_dicts():
    r = symrect.ptl(identity(8), 2)
    assert r["p"] == 4
    assert r["cuts"] == [0, 2, 4, 6, 8]
    assert r["bound_satisfied"]
    b = symrect.btl(identity(8), 8, inner="pbi")
    assert b["p"] == 1
    with pytest.raises(ValueError):
        symrect.btl(identity(8), 2, inner="nic")
    with pytest.raises(symrect.InfeasibleError):
        symrect.ptl(identity(3), 0)


def test_run_report():
    A = random_symmetric(40, 0.1, 9)
    r = symrect.run(A, "ptc", parts=4, order="rcm")
    assert r["algorithm"] == "ptc"
    assert r["ordering"] == "rcm"
    assert r["p"] == r["q"] == 4
    assert sum(map(sum, r["tile_loads"])) == A.nnz
    assert r["col_cuts"] == r["row_cuts"]
    m = symrect.run(A, "ptl", max_load=A.nnz // 8)
    assert m["bound_satisfied"] == (m["max_load"] <= m["max_load_bound"])
