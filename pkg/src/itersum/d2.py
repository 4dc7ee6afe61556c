"""Sets of d+2 points: the affine dependency and the closed formula for |hA|.

The lifts of d+2 points in Z^d satisfy exactly one integer relation up to
scaling. Its positive part sums to r = vol(conv A) * d!, and

    |hA| = C(h+d+1, d+1)                         for h < r,
    |hA| = C(h+d+1, d+1) - C(h-r+d+1, d+1)       for h >= r,

whenever A - A generates Z^d.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from .combinat import binom, binomial_poly, poly_add, poly_scale, poly_trim
from .errors import ConsistencyError, DegenerateHullError, HypothesisError
from .geometry import PointSet, lift
from .linalg import det_int, lattice_index


def difference_lattice_index(a):
    """Index in Z^d of the lattice generated by A - A."""
    base = a.points[0]
    diffs = [tuple(x - y for x, y in zip(p, base)) for p in a.points[1:]]
    if not diffs:
        return math.inf
    return lattice_index(diffs)


@dataclass(frozen=True)
class InstanceD2:
    base: PointSet
    generation_index: int

    @classmethod
    def from_points(cls, points):
        a = points if isinstance(points, PointSet) else PointSet.of(points)
        if len(a) != a.d + 2:
            raise HypothesisError("size", f"expected {a.d + 2} points in dimension {a.d}, got {len(a)}")
        index = difference_lattice_index(a)
        if index != 1:
            raise HypothesisError(
                "difference_lattice_index",
                f"A - A generates a sublattice of index {index}, not Z^{a.d}")
        return cls(a, index)

    @property
    def d(self):
        return self.base.d


@dataclass(frozen=True)
class RadonData:
    lam: tuple
    x1: tuple
    x2: tuple
    zero_set: tuple
    r: int
    covering: tuple  # for i in x1, the indices of the simplex omitting point i

    def flipped(self):
        lam = tuple(-x for x in self.lam)
        return _radon_from_lambda(lam)


def _radon_from_lambda(lam):
    n = len(lam)
    x1 = tuple(i for i in range(n) if lam[i] > 0)
    x2 = tuple(i for i in range(n) if lam[i] < 0)
    zero = tuple(i for i in range(n) if lam[i] == 0)
    r = sum(lam[i] for i in x1)
    covering = tuple(tuple(j for j in range(n) if j != i) for i in x1)
    return RadonData(tuple(lam), x1, x2, zero, r, covering)


def affine_dependency(inst):
    """The primitive integer relation among the lifted points.

    Entry i is the signed cofactor (-1)^i det(lifts without point i), so the
    relation holds by construction; it is checked anyway. The sign is fixed
    so that the first nonzero entry is positive.
    """
    a = inst.base if isinstance(inst, InstanceD2) else inst
    lifts = a.lifts()
    n = len(lifts)
    lam = []
    for i in range(n):
        cols = lifts[:i] + lifts[i + 1:]
        minor = [[c[row] for c in cols] for row in range(a.d + 1)]
        lam.append((-1) ** i * det_int(minor))
    if all(x == 0 for x in lam):
        raise DegenerateHullError("every d+1 subset of the lifts is singular")
    g = math.gcd(*lam)
    lam = [x // g for x in lam]
    first = next(x for x in lam if x != 0)
    if first < 0:
        lam = [-x for x in lam]
    residual = [sum(l * v[k] for l, v in zip(lam, lifts)) for k in range(a.d + 1)]
    if any(residual):
        raise ConsistencyError(f"dependency residual {residual} is not zero")
    return _radon_from_lambda(lam)


def radon_point(inst, radon):
    """The common point of conv(X1) and conv(X2), checked from both sides."""
    pts = inst.base.points
    r = radon.r
    left = tuple(sum(Fraction(radon.lam[i], r) * pts[i][k] for i in radon.x1)
                 for k in range(inst.d))
    right = tuple(sum(Fraction(-radon.lam[i], r) * pts[i][k] for i in radon.x2)
                  for k in range(inst.d))
    if left != right:
        raise ConsistencyError("Radon parts do not meet")
    return left


def card_d2(inst, h, radon=None):
    """Exact |hA| for a valid d+2 instance."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    if radon is None:
        radon = affine_dependency(inst)
    d = inst.d
    total = binom(h + d + 1, d + 1)
    if h >= radon.r:
        total -= binom(h - radon.r + d + 1, d + 1)
    return total


def d2_polynomial(d, r):
    """Ascending coefficients of the h >= r branch as a polynomial in h."""
    p = poly_add(binomial_poly(d + 1, d + 1), poly_scale(binomial_poly(d + 1 - r, d + 1), -1))
    return poly_trim(p)


def lift_matrix(a):
    return [lift(p) for p in a.points]
