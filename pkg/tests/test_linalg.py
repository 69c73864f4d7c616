import random

import numpy as np
from sympy import Matrix

from tetrahedral import linalg
from tetrahedral.scalars import Field


def _random_matrix(fld, rng, r, c, rank):
    a = linalg.as_matrix(fld, [[fld.random(rng) for _ in range(rank)] for _ in range(r)])
    b = linalg.as_matrix(fld, [[fld.random(rng) for _ in range(c)] for _ in range(rank)])
    return linalg.matmul(fld, a, b)


def test_rank_matches_sympy_over_rationals():
    q = Field.rational()
    rng = random.Random(1)
    for r, c, k in ((5, 7, 3), (6, 4, 4), (4, 4, 1)):
        m = _random_matrix(q, rng, r, c, k)
        assert linalg.rank(q, m) == Matrix(m.tolist()).rank()


def test_rank_matches_sympy_mod_p():
    f = Field.prime(101)
    rng = random.Random(2)
    for r, c, k in ((8, 9, 5), (7, 7, 7)):
        m = _random_matrix(f, rng, r, c, k)
        ref = Matrix(m.tolist()).rank(iszerofunc=lambda x: x % 101 == 0)
        assert linalg.rank(f, m) == min(ref, k) == k


def test_nullspace_and_inverse():
    f = Field.prime(1000003)
    rng = random.Random(4)
    m = _random_matrix(f, rng, 4, 6, 3)
    ns = linalg.nullspace(f, m)
    assert ns.shape[0] == 3
    assert not linalg.reduce(f, linalg.matmul(f, m, ns.T)).any()
    a = _random_matrix(f, rng, 5, 5, 5)
    assert np.array_equal(linalg.matmul(f, a, linalg.inverse(f, a)), linalg.identity(f, 5))


def test_solve_left_any_with_dependent_rows():
    f = Field.prime(101)
    m = linalg.as_matrix(f, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    v = linalg.as_matrix(f, [[3, 7, 10]])[0]
    c = linalg.solve_left_any(f, m, v)
    assert c is not None
    assert np.array_equal(linalg.reduce(f, c @ m), v)
    assert linalg.solve_left_any(f, m, linalg.as_matrix(f, [[0, 0, 1]])[0]) is None


def test_sparse_rank():
    f = Field.prime(7)
    assert linalg.sparse_rank(f, [{0: 1, 1: 2}, {0: 2, 1: 4}, {2: 1}]) == 2
