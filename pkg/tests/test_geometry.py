from fractions import Fraction
import random

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from conftest import QUAD, RADON4
from itersum.errors import DegenerateHullError, DimensionError, SingularMatrixError
from itersum.geometry import (
    BOUNDARY,
    INTERIOR,
    OUTSIDE,
    PointSet,
    barycentric_in_simplex,
    classify_hull,
    hull_membership,
    hull_volume_dfact,
)

TRIANGLE = PointSet.of([(1, 1), (1, -2), (-2, 1)])


def random_unimodular(d, rng, steps=6):
    u = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(steps):
        i, j = rng.sample(range(d), 2) if d > 1 else (0, 0)
        if i == j:
            u = [[-x for x in row] for row in u]
            continue
        c = rng.choice([-2, -1, 1, 2])
        u[i] = [a + c * b for a, b in zip(u[i], u[j])]
    return u


def apply(u, p):
    return tuple(sum(a * b for a, b in zip(row, p)) for row in u)


def shoelace_twice_area(polygon):
    """Twice the area of the convex hull of 2-D points (gift wrapping + shoelace)."""
    pts = sorted(set(polygon))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return abs(sum(hull[i][0] * hull[i - 1][1] - hull[i - 1][0] * hull[i][1]
                   for i in range(len(hull))))


def test_pointset_validation():
    with pytest.raises(DimensionError):
        PointSet.of([(0, 0), (0, 0)])
    with pytest.raises(DimensionError):
        PointSet(2, ((0, 0), (1,)))
    with pytest.raises(DimensionError):
        PointSet.of([])


def test_membership_examples():
    assert hull_membership((5, 5), TRIANGLE) == OUTSIDE
    assert hull_membership((0, 0), TRIANGLE) == INTERIOR
    assert hull_membership((0, 1), TRIANGLE) == BOUNDARY
    assert hull_membership((1, 1), TRIANGLE) == BOUNDARY


def test_membership_on_internal_diagonal_is_interior():
    # every triangle of the square's corners has (1, 1) on an edge
    square = PointSet.of([(0, 0), (2, 0), (2, 2), (0, 2)])
    assert hull_membership((1, 1), square) == INTERIOR


def test_membership_lower_dimensional_set():
    segment = PointSet.of([(0, 0), (2, 2)])
    assert hull_membership((1, 1), segment) == BOUNDARY
    assert hull_membership((1, 0), segment) == OUTSIDE


def test_membership_rejects_wrong_dimension():
    with pytest.raises(DimensionError):
        hull_membership((0, 0, 0), TRIANGLE)


def test_classify_examples():
    c = classify_hull(PointSet.of([(0,), (1,), (3,)]))
    assert c.vertex_indices == (0, 2) and c.interior_indices == (1,) and c.is_simplex
    c = classify_hull(PointSet.of(QUAD))
    assert len(c.vertex_indices) == 4 and not c.is_simplex
    c = classify_hull(PointSet.of(RADON4))
    assert len(c.vertex_indices) == 6 and not c.is_simplex


def test_classify_degenerate():
    with pytest.raises(DegenerateHullError):
        classify_hull(PointSet.of([(0, 0), (1, 1), (2, 2)]))


def test_barycentric_examples():
    b = barycentric_in_simplex((1, 1), [(1, 1), (1, -2), (-2, 1)])
    assert b.coords == (1, 0, 0) and b.location == BOUNDARY
    b = barycentric_in_simplex((0, 0), [(1, 1), (1, -2), (-2, 1)])
    assert b.coords == (Fraction(1, 3),) * 3 and b.location == INTERIOR
    b = barycentric_in_simplex((0,), [(-1,), (2,)])
    assert b.coords == (Fraction(2, 3), Fraction(1, 3)) and b.location == INTERIOR
    with pytest.raises(SingularMatrixError):
        barycentric_in_simplex((0, 0), [(0, 0), (1, 1), (2, 2)])


@settings(max_examples=100)
@given(st.integers(1, 3).flatmap(lambda d: st.tuples(
    st.lists(st.tuples(*[st.integers(-5, 5)] * d), min_size=d + 1, max_size=d + 1),
    st.tuples(*[st.integers(-6, 6)] * d))))
def test_barycentric_sums_to_one_and_reproduces(case):
    verts, p = case
    try:
        b = barycentric_in_simplex(p, verts)
    except SingularMatrixError:
        return
    assert sum(b.coords) == 1
    d = len(p)
    assert tuple(sum(c * v[k] for c, v in zip(b.coords, verts)) for k in range(d)) == p


def test_volume_examples():
    for d in range(1, 5):
        unit = [(0,) * d] + [tuple(int(i == j) for j in range(d)) for i in range(d)]
        assert hull_volume_dfact(PointSet.of(unit)) == 1
    assert hull_volume_dfact(PointSet.of([(0,), (3,)])) == 3
    assert hull_volume_dfact(PointSet.of(QUAD)) == 3


@settings(max_examples=80)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=3, max_size=6, unique=True))
def test_volume_matches_shoelace(pts):
    s = PointSet.of(pts)
    if not s.is_full_dimensional():
        return
    assert hull_volume_dfact(s) == shoelace_twice_area(pts)


def test_volume_1d_is_length():
    rng = random.Random(3)
    for _ in range(30):
        xs = rng.sample(range(-20, 20), rng.randint(2, 4))
        assert hull_volume_dfact(PointSet.of([(x,) for x in xs])) == max(xs) - min(xs)


def test_invariance_under_translation_and_unimodular_maps():
    rng = random.Random(5)
    checked = 0
    while checked < 60:
        d = rng.randint(1, 3)
        pts = list({tuple(rng.randint(-4, 4) for _ in range(d)) for _ in range(rng.randint(d + 1, d + 3))})
        s = PointSet.of(pts)
        if not s.is_full_dimensional():
            continue
        p = tuple(rng.randint(-4, 4) for _ in range(d))
        t = tuple(rng.randint(-7, 7) for _ in range(d))
        u = random_unimodular(d, rng)
        loc = hull_membership(p, s)
        vol = hull_volume_dfact(s)
        moved = s.translate(t)
        assert hull_membership(tuple(a + b for a, b in zip(p, t)), moved) == loc
        assert hull_volume_dfact(moved) == vol
        mapped = PointSet.of([apply(u, q) for q in pts])
        assert hull_membership(apply(u, p), mapped) == loc
        assert hull_volume_dfact(mapped) == vol
        checked += 1


def test_classification_vertex_rule():
    rng = random.Random(8)
    for _ in range(40):
        d = rng.randint(1, 3)
        pts = list({tuple(rng.randint(-3, 3) for _ in range(d)) for _ in range(d + 3)})
        s = PointSet.of(pts)
        if not s.is_full_dimensional():
            continue
        c = classify_hull(s)
        for i, p in enumerate(pts):
            rest = PointSet.of(pts[:i] + pts[i + 1:]) if len(pts) > 1 else None
            outside = hull_membership(p, rest) == OUTSIDE
            assert outside == (i in c.vertex_indices)
        if c.is_simplex:
            assert len(c.vertex_indices) == d + 1
            vol = hull_volume_dfact(PointSet.of([pts[i] for i in c.vertex_indices]))
            assert vol == hull_volume_dfact(s) and vol > 0
