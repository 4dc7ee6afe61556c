"""Reproducible random instances.

The generator is SplitMix64 (state advanced by 0x9E3779B97F4A7C15, output
mixed with the constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB and
shifts 30, 27, 31). ``randint(lo, hi)`` is ``lo + next() % (hi - lo + 1)``.
Both are simple enough to reproduce bit-for-bit in any language.
"""

from .d2 import InstanceD2, affine_dependency, difference_lattice_index
from .d3 import InstanceD3, analyze_lattice, compute_m_w, default_h_max
from .errors import HypothesisError
from .geometry import PointSet, barycentric_in_simplex, lift
from .linalg import det_int, from_columns, rank
from .sumsets import MAX_H

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def randint(self, lo, hi):
        return lo + self.next() % (hi - lo + 1)

    def point(self, d, bound):
        return tuple(self.randint(-bound, bound) for _ in range(d))


def random_d2_instance(rng, d, bound, max_h=MAX_H, max_tries=100_000):
    """Rejection-sample d+2 distinct points in [-bound, bound]^d.

    Accepted instances have a full-dimensional hull, A - A generating Z^d,
    and r + d + 3 <= max_h so that brute-force verification fits the budget.
    """
    for _ in range(max_tries):
        pts = [rng.point(d, bound) for _ in range(d + 2)]
        if len(set(pts)) != len(pts):
            continue
        if rank(from_columns([lift(p) for p in pts])) != d + 1:
            continue
        a = PointSet(d, tuple(pts))
        if difference_lattice_index(a) != 1:
            continue
        inst = InstanceD2.from_points(a)
        if affine_dependency(inst).r + d + 3 > max_h:
            continue
        return inst
    raise RuntimeError("no valid d+2 instance found")


def _inside(p, verts):
    return all(c >= 0 for c in barycentric_in_simplex(p, verts).coords)


def random_d3_instance(rng, d, bound, max_h=MAX_H, max_tries=100_000):
    """Rejection-sample a simplex in [-bound, bound]^d plus two lattice points in it.

    The first extra point is translated to the origin. Accepted instances
    satisfy every hypothesis checked by :class:`InstanceD3` and have
    N + M_w * n_prime + d + 3 <= max_h.
    """
    for _ in range(max_tries):
        verts = [rng.point(d, bound) for _ in range(d + 1)]
        if det_int(from_columns([lift(v) for v in verts])) == 0:
            continue
        lo = [min(v[k] for v in verts) for k in range(d)]
        hi = [max(v[k] for v in verts) for k in range(d)]
        extra = []
        for _ in range(200):
            p = tuple(rng.randint(lo[k], hi[k]) for k in range(d))
            if p in verts or p in extra or not _inside(p, verts):
                continue
            extra.append(p)
            if len(extra) == 2:
                break
        if len(extra) < 2:
            continue
        o = extra[0]
        pts = [tuple(x - y for x, y in zip(p, o)) for p in verts + extra]
        try:
            inst = InstanceD3.from_points(PointSet(d, tuple(pts)))
        except HypothesisError:
            continue
        inv = analyze_lattice(inst)
        if default_h_max(inst, inv, compute_m_w(inst, inv)) > max_h:
            continue
        return inst
    raise RuntimeError("no valid d+3 instance found")
