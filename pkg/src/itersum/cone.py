"""Diagnostics on the cone over A and the lattice of its simplex vertices.

Cone membership is always decided through the brute-force sumset layers:
(g, N) is in the cone iff g is in NA.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import BudgetError, SingularMatrixError
from .d3 import pos_span_membership, compute_m_w
from .linalg import adjugate, det_int, from_columns
from .sumsets import DEFAULT_BUDGET_POINTS, sumset_layers

MAX_DET = 10**4
MAX_BOX = 10**7


@dataclass(frozen=True)
class FundamentalDomain:
    basis: tuple
    points: frozenset
    count: int
    det: int
    adj: tuple

    def numerators(self, p):
        """det * (coordinates of p in the basis), as integers."""
        return tuple(sum(a * b for a, b in zip(row, p)) for row in self.adj)


def fundamental_domain_points(basis, max_det=MAX_DET):
    """Integer points of the half-open parallelepiped spanned by ``basis``."""
    basis = tuple(tuple(b) for b in basis)
    m = from_columns(basis)
    det = det_int(m)
    if det == 0:
        raise SingularMatrixError("basis is singular")
    if abs(det) > max_det:
        raise BudgetError(f"|det| = {abs(det)} exceeds the budget of {max_det}")
    adj = adjugate(m)
    n = len(basis)
    corners = [tuple(sum(e * b[k] for e, b in zip(eps, basis)) for k in range(n))
               for eps in product((0, 1), repeat=n)]
    lo = [min(c[k] for c in corners) for k in range(n)]
    hi = [max(c[k] for c in corners) for k in range(n)]
    size = 1
    for a, b in zip(lo, hi):
        size *= b - a + 1
    if size > MAX_BOX:
        raise BudgetError(f"bounding box of {size} points exceeds the budget")
    axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo, hi)]
    grid = np.stack([g.ravel() for g in np.meshgrid(*axes, indexing="ij")], axis=1)
    num = grid @ np.array(adj, dtype=np.int64).T
    if det < 0:
        num = -num
    keep = np.all((num >= 0) & (num < abs(det)), axis=1)
    points = frozenset(tuple(int(x) for x in row) for row in grid[keep])
    if len(points) != abs(det):
        raise AssertionError(f"found {len(points)} points, expected |det| = {abs(det)}")
    return FundamentalDomain(basis, points, len(points), det, adj)


def residue_of(p, fd):
    """The representative in the fundamental domain congruent to ``p``."""
    shifts = [x // fd.det for x in fd.numerators(p)]
    out = list(p)
    for s, b in zip(shifts, fd.basis):
        for k, x in enumerate(b):
            out[k] -= s * x
    return tuple(out)


@dataclass(frozen=True)
class MinimalElement:
    point: tuple
    height: int
    residue: tuple


def minimal_elements(a, basis, height_limit, budget_points=DEFAULT_BUDGET_POINTS):
    """Cone points up to ``height_limit`` that leave the cone when any basis vector is removed.

    Sorted by residue, then height, then point.
    """
    fd = fundamental_domain_points(basis)
    layers = sumset_layers(a, height_limit, budget_points)
    found = []
    for n, layer in enumerate(layers):
        for g in sorted(layer):
            p = g + (n,)
            minimal = True
            for b in fd.basis:
                q = tuple(x - y for x, y in zip(p, b))
                if q[-1] >= 0 and q[-1] <= height_limit and q[:-1] in layers[q[-1]]:
                    minimal = False
                    break
            if minimal:
                found.append(MinimalElement(p, n, residue_of(p, fd)))
    found.sort(key=lambda e: (e.residue, e.height, e.point))
    return found


@dataclass(frozen=True)
class DecompositionReport:
    height_limit: int
    n_translates: int  # M_w * n_prime
    n_first: int       # n_prime
    multiplicity: dict
    first_multiplicity: dict
    disjoint: bool
    covering: bool
    covering_first: bool


def verify_decomposition(inst, inv, height_limit, m_w=None, budget_points=DEFAULT_BUDGET_POINTS):
    """Count, for each cone point, the translates (m w, m) + monoid containing it.

    Translates range over 0 <= m < M_w * n_prime; the first n_prime of them
    are tracked separately.
    """
    if m_w is None:
        m_w = compute_m_w(inst, inv)
    total = m_w * inv.n_prime
    w = inst.w
    layers = sumset_layers(inst.base, height_limit, budget_points)
    mult = {}
    first = {}
    for n, layer in enumerate(layers):
        for g in sorted(layer):
            p = g + (n,)
            count = count_first = 0
            for m in range(min(total - 1, n) + 1):
                q = tuple(x - m * y for x, y in zip(g, w)) + (n - m,)
                if pos_span_membership(q, inst, inv).member:
                    count += 1
                    if m < inv.n_prime:
                        count_first += 1
            mult[p] = count
            first[p] = count_first
    return DecompositionReport(
        height_limit=height_limit,
        n_translates=total,
        n_first=inv.n_prime,
        multiplicity=mult,
        first_multiplicity=first,
        disjoint=all(c <= 1 for c in first.values()),
        covering=all(c >= 1 for c in mult.values()),
        covering_first=all(c >= 1 for c in first.values()),
    )
