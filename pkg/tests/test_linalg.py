import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ternary_roberts.linalg import (INCONSISTENT, UNDERDETERMINED, UNIQUE, DimensionError,
                                    EchelonBasis, RationalMatrix, rank, rref, solve)


def test_identity_solve():
    report = solve(RationalMatrix.identity(3), [1, 2, 3])
    assert report.status == UNIQUE
    assert report.solution == [1, 2, 3]


def test_rational_solution():
    m = RationalMatrix.from_rows([[2, 1], [1, 3]])
    report = solve(m, [1, 0])
    assert report.solution == [Fraction(3, 5), Fraction(-1, 5)]


def test_inconsistent():
    m = RationalMatrix.from_rows([[1, 1], [2, 2]])
    report = solve(m, [1, 3])
    assert report.status == INCONSISTENT
    assert report.solution is None


def test_underdetermined_particular_solution():
    m = RationalMatrix.from_rows([[1, 1, 0]])
    report = solve(m, [2])
    assert report.status == UNDERDETERMINED
    assert report.free_columns == [1, 2]
    assert report.solution == [2, 0, 0]


def test_rank_and_rref():
    m = RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, k, pivots = rref(m)
    assert k == 2
    assert pivots == [0, 1]
    assert r.to_rows() == [[1, 0, 1], [0, 1, 1], [0, 0, 0]]


def test_dimension_errors():
    with pytest.raises(DimensionError):
        solve(RationalMatrix.identity(2), [1])
    with pytest.raises(DimensionError):
        RationalMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionError):
        RationalMatrix(2, 2, {(2, 0): 1})
    with pytest.raises(DimensionError):
        RationalMatrix.identity(2).matmul(RationalMatrix.identity(3))


def test_matmul_and_apply():
    a = RationalMatrix.from_rows([[1, 2], [0, 1]])
    b = RationalMatrix.from_rows([[3], [4]])
    assert a.matmul(b).to_rows() == [[11], [4]]
    assert a.apply([1, 1]) == [3, 1]


def _random_matrix(rng, rows, cols, r):
    """L (rows x r) times U (r x cols) with small integer entries."""
    left = RationalMatrix.from_rows([[rng.randint(-3, 3) for _ in range(r)] for _ in range(rows)])
    right = RationalMatrix.from_rows([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(r)])
    return left.matmul(right)


@pytest.mark.parametrize("seed", range(20))
def test_rank_matches_sympy(seed):
    rng = random.Random(seed)
    m = _random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7), rng.randint(1, 5))
    assert rank(m) == sympy.Matrix(m.to_rows()).rank()
    r, _, _ = rref(m)
    expected, _ = sympy.Matrix(m.to_rows()).rref()
    assert r.to_rows() == [[Fraction(int(v.p), int(v.q)) for v in row]
                           for row in expected.tolist()]


@pytest.mark.parametrize("seed", range(50))
def test_rref_idempotent(seed):
    rng = random.Random(1000 + seed)
    m = _random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6), rng.randint(1, 4))
    r, k, pivots = rref(m)
    r2, k2, pivots2 = rref(r)
    assert r2 == r and k2 == k and pivots2 == pivots


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.randoms(use_true_random=False))
def test_solve_verifies(rows, cols, rnd):
    m = RationalMatrix.from_rows([[Fraction(rnd.randint(-4, 4), rnd.randint(1, 3))
                                   for _ in range(cols)] for _ in range(rows)])
    b = [Fraction(rnd.randint(-4, 4)) for _ in range(rows)]
    report = solve(m, b)
    if report.status == INCONSISTENT:
        assert rank(m) < rank(RationalMatrix.from_rows([r + [v] for r, v in zip(m.to_rows(), b)]))
    else:
        assert m.apply(report.solution) == b
        assert report.rank + len(report.free_columns) == cols


def test_echelon_basis_detects_dependence():
    eb = EchelonBasis()
    assert eb.add({"a": 1, "b": 1})
    assert eb.add({"b": 2})
    assert not eb.add({"a": 3, "b": -4})
    assert eb.rank == 2
    assert eb.reduce({"a": 1}) == {}
