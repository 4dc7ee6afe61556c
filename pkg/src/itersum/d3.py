"""Sets {0, v_1, ..., v_{d+1}, w} whose hull is the simplex on the v_i.

Notation used throughout:

* ``n_lambda``: |det| of the lifted vertices, the index of the vertex
  lattice L = span_Z(v~_i) in Z^{d+1}.
* ``mu``: coordinates of (0, 1) in the basis v~_i; ``q`` their reduced
  denominators and ``lcc = lcm(q)``, the order of (0, 1) modulo L.
* ``n_prime = n_lambda / lcc``: the index of L' = span_Z((0,1), v~_i).
* L'+ is the monoid generated by (0, 1) and the v~_i.

The cone over A is the union of the translates (m w, m) + L'+ for
0 <= m < M_w * n_prime, and the first n_prime of them are disjoint. Since
L'+ is generated by d+2 vectors tied by one primitive relation whose
(0, 1)-coefficient is lcc, its height-h slice has
C(h+d+1, d+1) - C(h-lcc+d+1, d+1) points, which gives the counts below.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from .combinat import binom
from .d2 import difference_lattice_index
from .errors import ConsistencyError, ContractError, HypothesisError
from .geometry import (
    BOUNDARY,
    INTERIOR,
    PointSet,
    barycentric_in_simplex,
    classify_hull,
    lift,
)
from .linalg import adjugate, det_int, from_columns, lattice_index


@dataclass(frozen=True)
class InstanceD3:
    base: PointSet
    vertex_indices: tuple
    origin_index: int
    w_index: int

    @classmethod
    def from_points(cls, points, origin_index=None, w_index=None):
        """Validate a d+3 instance.

        The origin is the zero vector unless ``origin_index`` names a
        non-vertex point, in which case that point must be the zero vector.
        """
        a = points if isinstance(points, PointSet) else PointSet.of(points)
        if len(a) != a.d + 3:
            raise HypothesisError("size", f"expected {a.d + 3} points in dimension {a.d}, got {len(a)}")
        hull = classify_hull(a)
        if not hull.is_simplex:
            raise HypothesisError("hull_is_simplex", "the convex hull is not a simplex")
        zero = (0,) * a.d
        others = hull.interior_indices
        if origin_index is None:
            if zero not in a.points or a.points.index(zero) not in others:
                raise HypothesisError(
                    "origin_in_hull", "the zero vector must be one of the two non-vertex points")
            origin_index = a.points.index(zero)
        elif origin_index not in others or a.points[origin_index] != zero:
            raise HypothesisError("origin_in_hull", "origin role must be a non-vertex zero point")
        if w_index is None:
            w_index = next(i for i in others if i != origin_index)
        elif w_index not in others or w_index == origin_index:
            raise HypothesisError("w_in_hull", "w role must be the other non-vertex point")
        index = difference_lattice_index(a)
        if index != 1:
            raise HypothesisError(
                "difference_lattice_index",
                f"A - A generates a sublattice of index {index}, not Z^{a.d}")
        return cls(a, hull.vertex_indices, origin_index, w_index)

    @property
    def d(self):
        return self.base.d

    @property
    def vertices(self):
        return [self.base.points[i] for i in self.vertex_indices]

    @property
    def w(self):
        return self.base.points[self.w_index]

    def vertex_lattice_index(self):
        """Index of span_Z(v_1, ..., v_{d+1}) in Z^d."""
        return lattice_index(self.vertices)

    def w_location(self):
        return barycentric_in_simplex(self.w, self.vertices).location


@dataclass(frozen=True)
class LatticeInvariants:
    n_lambda: int
    mu: tuple
    q: tuple
    lcc: int
    n_prime: int
    lambda_ints: tuple
    origin_on_boundary: bool
    # integer adjugate of the lifted vertex matrix, for exact coordinates
    _adj: tuple
    _det: int

    def coordinates(self, x):
        """Coordinates of the integer point ``x`` in the lifted vertex basis."""
        return tuple(Fraction(sum(a * b for a, b in zip(row, x)), self._det) for row in self._adj)


def analyze_lattice(inst):
    m = from_columns([lift(v) for v in inst.vertices])
    det = det_int(m)
    bary = barycentric_in_simplex((0,) * inst.d, inst.vertices)
    mu = bary.coords
    if any(c < 0 for c in mu):
        raise HypothesisError("origin_in_hull", "the origin lies outside the simplex")
    q = tuple(c.denominator for c in mu)
    lcc = math.lcm(*q)
    n_lambda = abs(det)
    if n_lambda % lcc:
        raise ConsistencyError(f"lcc {lcc} does not divide N = {n_lambda}")
    n_prime = n_lambda // lcc
    scaled = [n_lambda * c for c in mu]
    if any(s.denominator != 1 for s in scaled):
        raise ConsistencyError("N * mu is not integral")
    lambda_ints = tuple(int(s) for s in scaled)
    if sum(lambda_ints) != n_lambda or math.gcd(*lambda_ints) != n_prime:
        raise ConsistencyError("lattice invariants are inconsistent")
    return LatticeInvariants(
        n_lambda=n_lambda, mu=mu, q=q, lcc=lcc, n_prime=n_prime, lambda_ints=lambda_ints,
        origin_on_boundary=bary.location == BOUNDARY, _adj=adjugate(m), _det=det)


@dataclass(frozen=True)
class MembershipCert:
    member: bool
    k: int = 0
    c: tuple = ()


def pos_span_membership(target, inst, inv):
    """Is ``target`` in the monoid generated by (0, 1) and the lifted vertices?

    Writing target = k (0,1) + sum c_i v~_i forces c = t - k mu where t are
    the coordinates of the target, and k <= height, so k is searched upward.
    """
    target = tuple(target)
    height = target[-1]
    if height < 0:
        return MembershipCert(False)
    t = inv.coordinates(target)
    for k in range(height + 1):
        c = [ti - k * mi for ti, mi in zip(t, inv.mu)]
        if all(ci >= 0 and ci.denominator == 1 for ci in c):
            cert = MembershipCert(True, k, tuple(int(ci) for ci in c))
            _check_cert(target, inst, cert)
            return cert
    return MembershipCert(False)


def _check_cert(target, inst, cert):
    total = [0] * inst.d + [cert.k]
    for ci, v in zip(cert.c, inst.vertices):
        for j, x in enumerate(lift(v)):
            total[j] += ci * x
    if tuple(total) != tuple(target) or cert.k + sum(cert.c) != target[-1]:
        raise ConsistencyError(f"certificate {cert} does not reproduce {target}")


def w_multiple(inst, m):
    return tuple(m * x for x in lift(inst.w))


def equality_condition(inst, inv):
    return pos_span_membership(w_multiple(inst, inv.n_prime), inst, inv).member


def compute_m_w(inst, inv):
    """Least M >= 1 with M * n_prime * w~ in the monoid; never above lcc."""
    m = 1
    while m * inv.n_prime <= inv.n_lambda:
        if pos_span_membership(w_multiple(inst, m * inv.n_prime), inst, inv).member:
            return m
        m += 1
    raise ConsistencyError("M_w * n_prime exceeded N; the bound from the minimal-element lemma failed")


def staircase_count(h, d, terms, period):
    """Height-h count of the union of ``terms`` shifted copies of the monoid.

    Evaluated in four regimes, with C(n, k) = 0 for n < k:

        h <= terms-1:            sum_{m=0}^{h} C(m+d+1, m)
        terms <= h <= period-1:  sum_{m<terms} C(h+d+1-m, h-m)
        period <= h:             the same minus
                                 sum_{m=0}^{min(terms-1, h-period)} C(h-m-period+d+1, h-m-period)
    """
    if h < 0:
        return 0
    if h <= terms - 1:
        total = sum(binom(m + d + 1, m) for m in range(h + 1))
    else:
        total = sum(binom(h + d + 1 - m, h - m) for m in range(terms))
    if h >= period:
        top = min(terms - 1, h - period)
        total -= sum(binom(h - m - period + d + 1, h - m - period) for m in range(top + 1))
    return total


def regime(h, terms, period):
    """Which of the four displayed regimes ``h`` falls in (1-based)."""
    if h <= terms - 1 and h < period:
        return 1
    if h <= period - 1:
        return 2
    if h <= period + terms - 1:
        return 3
    return 4


def card_d3_exact(inst, inv, h, equality=None):
    """Exact |hA|, valid only when n_prime * w~ lies in the monoid."""
    if equality is None:
        equality = equality_condition(inst, inv)
    if not equality:
        raise ContractError("the exact formula needs n_prime * w~ in the monoid")
    return staircase_count(h, inst.d, inv.n_prime, inv.lcc)


@dataclass(frozen=True)
class BoundsReport:
    h: int
    lower: int
    upper: int
    exact: object = None


def card_d3_bounds(inst, inv, h, m_w=None, equality=None):
    if m_w is None:
        m_w = compute_m_w(inst, inv)
    if equality is None:
        equality = m_w == 1
    lower = staircase_count(h, inst.d, inv.n_prime, inv.lcc)
    upper = staircase_count(h, inst.d, m_w * inv.n_prime, inv.lcc)
    exact = lower if (equality or h <= inv.n_prime - 1) else None
    return BoundsReport(h, lower, upper, exact)


def default_h_max(inst, inv, m_w):
    return inv.n_lambda + m_w * inv.n_prime + inst.d + 3


def origin_location(inst):
    return BOUNDARY if analyze_lattice(inst).origin_on_boundary else INTERIOR
