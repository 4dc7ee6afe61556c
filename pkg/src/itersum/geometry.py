"""Exact convex-position geometry for small point sets.

Everything works on lifted points ``(v, 1)`` so that affine questions
become linear ones over the integers.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
import math
import random

from .errors import DegenerateHullError, DimensionError, SingularMatrixError
from .linalg import (
    MAX_SIZE,
    det_int,
    from_columns,
    rank,
    solve_full_column_rank,
    solve_rational,
)

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside"


def lift(p, height=1):
    return tuple(p) + (height,)


@dataclass(frozen=True)
class PointSet:
    """Distinct integer points in Z^d."""

    d: int
    points: tuple

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise DimensionError(f"dimension must be a positive integer, got {self.d!r}")
        if self.d + 1 > MAX_SIZE:
            raise DimensionError(f"dimension {self.d} exceeds the supported maximum")
        pts = tuple(tuple(p) for p in self.points)
        if not pts:
            raise DimensionError("point set is empty")
        for p in pts:
            if len(p) != self.d:
                raise DimensionError(f"point {p} does not have dimension {self.d}")
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in p):
                raise DimensionError(f"point {p} has non-integer coordinates")
        if len(set(pts)) != len(pts):
            raise DimensionError("points are not distinct")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, points):
        points = [tuple(p) for p in points]
        if not points:
            raise DimensionError("point set is empty")
        return cls(len(points[0]), tuple(points))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def lifts(self):
        return [lift(p) for p in self.points]

    def translate(self, t):
        return PointSet(self.d, tuple(tuple(a + b for a, b in zip(p, t)) for p in self.points))

    def is_full_dimensional(self):
        return len(self) >= self.d + 1 and rank(from_columns(self.lifts())) == self.d + 1


@dataclass(frozen=True)
class HullClassification:
    vertex_indices: tuple
    interior_indices: tuple
    is_simplex: bool


@dataclass(frozen=True)
class BarycentricCoords:
    coords: tuple
    location: str


def _location_from_coords(coords):
    if any(c < 0 for c in coords):
        return OUTSIDE
    if any(c == 0 for c in coords):
        return BOUNDARY
    return INTERIOR


def _contains(p, points):
    """Carathéodory search: is ``p`` in conv(points)?

    Tries every affinely independent subset of at most d+1 points and
    checks the sign of the exact barycentric solution.
    """
    target = lift(p)
    d = len(p)
    for k in range(1, min(len(points), d + 1) + 1):
        for subset in combinations(points, k):
            try:
                coef = solve_full_column_rank(from_columns([lift(q) for q in subset]), target)
            except SingularMatrixError:
                continue
            if coef is not None and all(c >= 0 for c in coef):
                return True
    return False


def _hyperplane(points):
    """Integer (normal, offset) with normal . x == offset on d affinely independent points.

    Returns ``None`` if the points do not span a hyperplane.
    """
    d = len(points[0])
    lifted = [lift(q) for q in points]
    # cofactor expansion of the (d+1)x(d+1) matrix with a symbolic first row
    coeffs = []
    for j in range(d + 1):
        minor = [row[:j] + row[j + 1:] for row in lifted]
        coeffs.append((-1) ** j * det_int(minor))
    if all(c == 0 for c in coeffs):
        return None
    g = math.gcd(*coeffs)
    coeffs = [c // g for c in coeffs]
    return tuple(coeffs[:d]), -coeffs[d]


def facets(points):
    """Supporting hyperplanes ``normal . x <= offset`` of a full-dimensional set.

    Each hyperplane passes through d affinely independent points of the set;
    duplicates are removed.
    """
    pts = list(points)
    d = len(pts[0])
    found = set()
    for subset in combinations(pts, d):
        hp = _hyperplane(subset)
        if hp is None:
            continue
        normal, offset = hp
        values = [sum(a * b for a, b in zip(normal, q)) - offset for q in pts]
        if all(v <= 0 for v in values):
            found.add((normal, offset))
        elif all(v >= 0 for v in values):
            found.add((tuple(-a for a in normal), -offset))
    return sorted(found)


def hull_membership(p, s):
    """Locate ``p`` relative to conv(s): interior, boundary or outside.

    Containment is decided by Carathéodory search. For a full-dimensional
    hull, a contained point is on the boundary iff it lies on a facet; a
    lower-dimensional hull has empty interior, so every member is boundary.
    """
    if not isinstance(s, PointSet):
        s = PointSet.of(s)
    p = tuple(p)
    if len(p) != s.d:
        raise DimensionError(f"point {p} does not have dimension {s.d}")
    if not _contains(p, s.points):
        return OUTSIDE
    if not s.is_full_dimensional():
        return BOUNDARY
    for normal, offset in facets(s.points):
        if sum(a * b for a, b in zip(normal, p)) == offset:
            return BOUNDARY
    return INTERIOR


def classify_hull(s):
    """Vertices, non-vertices and simplex flag of a full-dimensional point set."""
    if len(s) < s.d + 1 or not s.is_full_dimensional():
        raise DegenerateHullError("hull is not full-dimensional")
    vertices = []
    others = []
    for i, p in enumerate(s.points):
        rest = s.points[:i] + s.points[i + 1:]
        (others if _contains(p, rest) else vertices).append(i)
    is_simplex = len(vertices) == s.d + 1 and det_int(
        from_columns([lift(s.points[i]) for i in vertices])) != 0
    return HullClassification(tuple(vertices), tuple(others), is_simplex)


def barycentric_in_simplex(p, vertices):
    """Exact barycentric coordinates of ``p`` with respect to d+1 vertices."""
    vertices = [tuple(v) for v in vertices]
    if len(vertices) != len(p) + 1:
        raise DimensionError(f"a {len(p)}-simplex needs {len(p) + 1} vertices")
    coords = solve_rational(from_columns([lift(v) for v in vertices]), lift(p))
    return BarycentricCoords(coords, _location_from_coords(coords))


def _lower_cells(points, heights):
    """Cells of the regular subdivision induced by ``heights``.

    Returns the lower facets as index tuples, or ``None`` when some point
    lies exactly on a candidate facet (heights not generic).
    """
    n = len(points)
    d = len(points[0])
    lifted = [lift(q) for q in points]
    cells = []
    for subset in combinations(range(n), d + 1):
        m = from_columns([lifted[i] for i in subset])
        if det_int(m) == 0:
            continue
        lower = True
        for j in range(n):
            if j in subset:
                continue
            beta = solve_rational(m, lifted[j])
            interp = sum(b * heights[i] for b, i in zip(beta, subset))
            if heights[j] == interp:
                return None
            if heights[j] < interp:
                lower = False
                break
        if lower:
            cells.append(subset)
    return cells


def regular_triangulation(s, seed=0):
    """A triangulation of conv(s) by d-simplices on points of ``s``.

    Points are lifted to pseudo-random integer heights; the lower facets of
    the lifted set project to a triangulation. Heights are redrawn until
    they are generic.
    """
    if not s.is_full_dimensional():
        raise DegenerateHullError("hull is not full-dimensional")
    rng = random.Random(seed)
    for _ in range(100):
        heights = [rng.randrange(1, 10**12) for _ in s.points]
        cells = _lower_cells(s.points, heights)
        if cells is not None:
            return cells
    raise DegenerateHullError("could not find generic lifting heights")  # pragma: no cover


def hull_volume_dfact(s):
    """vol(conv(s)) * d! as an exact integer."""
    if not isinstance(s, PointSet):
        s = PointSet.of(s)
    total = 0
    for cell in regular_triangulation(s):
        total += abs(det_int(from_columns([lift(s.points[i]) for i in cell])))
    return total


def simplex_volume_dfact(vertices):
    return abs(det_int(from_columns([lift(v) for v in vertices])))


def barycenter(points):
    n = len(points)
    return tuple(Fraction(sum(c), n) for c in zip(*points))
