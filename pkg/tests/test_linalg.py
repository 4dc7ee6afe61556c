from fractions import Fraction
from itertools import combinations
import math
import random

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from itersum.errors import DimensionError, SingularMatrixError
from itersum.linalg import (
    adjugate,
    det_int,
    from_columns,
    lattice_index,
    matvec,
    solve_rational,
)


def laplace_det(m):
    """Cofactor expansion along the first row; the oracle for det_int."""
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * laplace_det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)))


def minors_gcd_index(vectors):
    d = len(vectors[0])
    g = 0
    for rows in combinations(vectors, d):
        g = math.gcd(g, laplace_det([list(r) for r in rows]))
    return g if g else math.inf


def square(n, lo=-9, hi=9):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)


def test_det_examples():
    assert det_int([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert det_int(from_columns([(-1, 1), (2, 1)])) == -3
    assert abs(det_int(from_columns([(1, 1, 1), (1, -2, 1), (-2, 1, 1)]))) == 9


def test_det_rejects_non_square():
    with pytest.raises(DimensionError):
        det_int([[1, 2, 3], [4, 5, 6]])


def test_det_big_integers():
    m = [[10**40, 1], [3, 10**40 + 7]]
    assert det_int(m) == 10**40 * (10**40 + 7) - 3


@settings(max_examples=150)
@given(st.integers(1, 6).flatmap(square))
def test_det_matches_laplace(m):
    assert det_int(m) == laplace_det(m)


def test_det_alternating_on_random_4x4():
    rng = random.Random(11)
    for _ in range(120):
        m = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        i, j = rng.sample(range(4), 2)
        swapped = [row[:] for row in m]
        for row in swapped:
            row[i], row[j] = row[j], row[i]
        assert det_int(swapped) == -det_int(m)


def test_solve_examples():
    assert solve_rational([[1, 0, 0], [0, 1, 0], [0, 0, 1]], (1, 0, 0)) == (1, 0, 0)
    assert solve_rational(from_columns([(-1, 1), (2, 1)]), (0, 1)) == (Fraction(2, 3), Fraction(1, 3))
    sol = solve_rational(from_columns([(1, 1, 1), (1, -2, 1), (-2, 1, 1)]), (0, 0, 1))
    assert sol == (Fraction(1, 3),) * 3


def test_solve_errors():
    with pytest.raises(SingularMatrixError):
        solve_rational([[1, 2], [2, 4]], (1, 1))
    with pytest.raises(DimensionError):
        solve_rational([[1, 0], [0, 1]], (1, 2, 3))


@settings(max_examples=150)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(square(n), st.lists(
    st.integers(-20, 20), min_size=n, max_size=n))))
def test_solve_reproduces_rhs(case):
    m, rhs = case
    if laplace_det(m) == 0:
        return
    x = solve_rational(m, rhs)
    assert all(isinstance(c, Fraction) and math.gcd(c.numerator, c.denominator) == 1 for c in x)
    assert matvec(m, x) == tuple(rhs)


@settings(max_examples=60)
@given(st.integers(1, 5).flatmap(square))
def test_adjugate_identity(m):
    adj = adjugate(m)
    det = det_int(m)
    n = len(m)
    prod = [[sum(m[i][k] * adj[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert prod == [[det if i == j else 0 for j in range(n)] for i in range(n)]


def test_lattice_index_examples():
    assert lattice_index([(1, 0), (0, 1)]) == 1
    assert lattice_index([(2, 0), (0, 2)]) == 4
    assert lattice_index([(1, 1), (1, -2), (-2, 1)]) == 3
    assert lattice_index([(1, 2), (2, 4)]) == math.inf
    assert lattice_index([(0, 0, 0)]) == math.inf


@settings(max_examples=150)
@given(st.integers(1, 3).flatmap(lambda d: st.lists(
    st.lists(st.integers(-6, 6), min_size=d, max_size=d), min_size=1, max_size=5)))
def test_lattice_index_matches_minor_gcd(vectors):
    vectors = [tuple(v) for v in vectors]
    assert lattice_index(vectors) == minors_gcd_index(vectors)


@settings(max_examples=100)
@given(st.integers(1, 4).flatmap(square))
def test_lattice_index_of_square_set_is_abs_det(m):
    det = det_int(m)
    assert lattice_index(m) == (abs(det) if det else math.inf)


@settings(max_examples=100)
@given(st.integers(1, 3).flatmap(lambda d: st.lists(
    st.lists(st.integers(-6, 6), min_size=d, max_size=d), min_size=1, max_size=4)),
    st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_lattice_index_unchanged_by_integer_combinations(vectors, coeffs):
    extra = tuple(sum(c * v[k] for c, v in zip(coeffs, vectors)) for k in range(len(vectors[0])))
    assert lattice_index(vectors + [extra]) == lattice_index(vectors)
