import random
from fractions import Fraction

import numpy as np
import pytest

from zklat.intmat import det, hnf, inv_fraction, lll_reduce, solve_fraction, vec_gcd


def random_unimodular(n, rng, steps=20):
    m = np.eye(n, dtype=object)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        m[i] = m[i] + rng.randint(-2, 2) * m[j]
    return [list(map(int, row)) for row in m]


def test_det_small():
    assert det([[2, 0], [0, 3]]) == 6
    assert det([[1, 2], [3, 4]]) == -2
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[1, 1], [2, 2]]) == 0


def test_det_agrees_with_numpy():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(2, 6)
        a = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert det(a) == round(np.linalg.det(np.array(a, dtype=float)))


def test_hnf_shape_and_span():
    h = hnf([[2, 0], [0, 2], [1, 1]])
    # index-2 sublattice of Z^2 spanned by (1,1) and (0,2)
    assert h == [[1, 1], [0, 2]]


def test_hnf_invariant_under_unimodular_row_ops():
    rng = random.Random(3)
    base = [[4, 1, 0], [0, 2, 1], [0, 0, 3]]
    h0 = hnf(base)
    for _ in range(10):
        u = random_unimodular(3, rng)
        mixed = (np.array(u, dtype=object) @ np.array(base, dtype=object)).tolist()
        assert hnf([list(map(int, r)) for r in mixed]) == h0


def test_solve_fraction_roundtrip():
    a = [[2, 1], [1, 1]]
    x = solve_fraction(a, [5, 3])
    assert x == [Fraction(2), Fraction(1)]  # (2,1)·A = (5,3)
    assert solve_fraction([[1, 0], [2, 0]], [0, 1]) is None


def test_inv_fraction():
    a = [[2, 1], [1, 1]]
    inv = inv_fraction(a)
    prod = [[sum(a[i][t] * inv[t][j] for t in range(2)) for j in range(2)] for i in range(2)]
    assert prod == [[1, 0], [0, 1]]
    assert inv_fraction([[1, 2], [2, 4]]) is None


def test_vec_gcd():
    assert vec_gcd([4, 6, 10]) == 2
    assert vec_gcd([0, 0]) == 0


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_lll_preserves_lattice_and_shortens(seed):
    rng = random.Random(seed)
    n = 5
    basis = [[rng.randint(-30, 30) for _ in range(n)] for _ in range(n)]
    if det(basis) == 0:
        pytest.skip("degenerate draw")
    red = lll_reduce(basis)
    assert abs(det(red)) == abs(det(basis))
    # every reduced row lies in the original lattice
    for row in red:
        sol = solve_fraction(basis, row)
        assert sol is not None and all(x.denominator == 1 for x in sol)
    # reduction never increases the shortest basis-vector norm
    norm = lambda rows: min(sum(x * x for x in r) for r in rows)
    assert norm(red) <= norm(basis)
