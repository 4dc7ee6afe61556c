"""Brute-force h-fold sumsets and polynomial stabilization of |hA|.

Layers are expanded one at a time, ``(h+1)A = hA + A``, with duplicate
removal. Points are packed into int64 keys (mixed radix over the bounding
box of h_max * A) so each layer is a sorted numpy array; when the box does
not fit in 63 bits the engine falls back to Python sets of tuples.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from .combinat import binom, newton_to_monomial
from .errors import BudgetError, NotStabilizedError
from .geometry import PointSet

MAX_H = 100
MAX_DIM = 6
DEFAULT_BUDGET_POINTS = 10**7


@dataclass(frozen=True)
class SumsetLayer:
    h: int
    points: frozenset

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class CardinalitySequence:
    values: tuple

    @property
    def h_max(self):
        return len(self.values) - 1

    def __getitem__(self, h):
        return self.values[h]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class KhovanskiiFit:
    h0: int
    coefficients: tuple  # ascending powers of h
    degree: int
    leading_coefficient_times_dfact: int
    d: int

    def __call__(self, h):
        return sum(c * h**k for k, c in enumerate(self.coefficients))


def _as_pointset(a):
    return a if isinstance(a, PointSet) else PointSet.of(a)


class _Codec:
    """Mixed-radix int64 packing for points of kA, 0 <= k <= h_max."""

    def __init__(self, a, h_max):
        self.lo = [min(p[i] for p in a.points) for i in range(a.d)]
        hi = [max(p[i] for p in a.points) for i in range(a.d)]
        self.radix = [h_max * (h - l) + 1 for h, l in zip(hi, self.lo)]
        self.strides = []
        s = 1
        for r in self.radix:
            self.strides.append(s)
            s *= r
        self.fits = s < 2**62

    def key_of_shifted(self, p):
        return sum((x - l) * st for x, l, st in zip(p, self.lo, self.strides))

    def decode(self, keys, h):
        out = []
        for k in keys.tolist():
            p = []
            for l, r in zip(self.lo, self.radix):
                k, rem = divmod(k, r)
                p.append(rem + h * l)
            out.append(tuple(p))
        return out


def _merge_shifted(layer, step):
    """Sorted distinct elements of layer + s over s in step.

    Each shifted copy is already sorted, so a stable (run-aware) sort of the
    concatenation is cheaper than a general unique.
    """
    merged = np.concatenate([layer + s for s in step])
    merged.sort(kind="stable")
    keep = np.empty(merged.size, dtype=bool)
    keep[0] = True
    np.not_equal(merged[1:], merged[:-1], out=keep[1:])
    return merged[keep]


def _check_inputs(a, h, budget_points):
    if h < 0:
        raise ValueError("h must be nonnegative")
    if h > MAX_H:
        raise BudgetError(f"h = {h} exceeds the maximum of {MAX_H}", h=h)
    if a.d > MAX_DIM:
        raise BudgetError(f"dimension {a.d} exceeds the brute-force maximum of {MAX_DIM}")
    if budget_points < 1:
        raise ValueError("budget_points must be positive")


def iter_layers(a, h_max, budget_points=DEFAULT_BUDGET_POINTS):
    """Yield ``(h, layer)`` for h = 0..h_max.

    ``layer`` is a sorted int64 key array when packing fits, else a set of
    tuples; use :func:`iterated_sumset` for decoded points.
    """
    a = _as_pointset(a)
    _check_inputs(a, h_max, budget_points)
    codec = _Codec(a, max(h_max, 1))
    if codec.fits:
        step = np.array([codec.key_of_shifted(p) for p in a.points], dtype=np.int64)
        layer = np.zeros(1, dtype=np.int64)
        yield 0, layer, codec
        for h in range(1, h_max + 1):
            if layer.size * len(a) > 8 * budget_points:
                raise BudgetError(f"layer h = {h} exceeds the point budget", h=h)
            layer = _merge_shifted(layer, step)
            if layer.size > budget_points:
                raise BudgetError(
                    f"layer h = {h} has {layer.size} points, budget is {budget_points}", h=h)
            yield h, layer, codec
    else:
        layer = {(0,) * a.d}
        yield 0, layer, None
        for h in range(1, h_max + 1):
            layer = {tuple(x + y for x, y in zip(p, q)) for p in layer for q in a.points}
            if len(layer) > budget_points:
                raise BudgetError(
                    f"layer h = {h} has {len(layer)} points, budget is {budget_points}", h=h)
            yield h, layer, None


def _decode(layer, codec, h):
    if codec is None:
        return frozenset(layer)
    return frozenset(codec.decode(layer, h))


def iterated_sumset(a, h, budget_points=DEFAULT_BUDGET_POINTS):
    """The exact set hA as a :class:`SumsetLayer`."""
    for k, layer, codec in iter_layers(a, h, budget_points):
        if k == h:
            return SumsetLayer(h, _decode(layer, codec, h))


def sumset_layers(a, h_max, budget_points=DEFAULT_BUDGET_POINTS):
    """Decoded layers 0A, 1A, ..., h_max A as a list of frozensets."""
    return [_decode(layer, codec, k) for k, layer, codec in iter_layers(a, h_max, budget_points)]


def cardinality_sequence(a, h_max, budget_points=DEFAULT_BUDGET_POINTS):
    """|hA| for h = 0..h_max."""
    return CardinalitySequence(tuple(
        int(len(layer)) for _, layer, _ in iter_layers(a, h_max, budget_points)))


def finite_differences(values, order):
    diffs = list(values)
    for _ in range(order):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    return diffs


def khovanskii_fit(seq, d):
    """Least h0 after which |hA| agrees with one polynomial of degree <= d.

    The tail of the sequence must already be polynomial: the last d+2
    differences of order d+1 have to vanish, otherwise the window is too
    short to tell and :class:`NotStabilizedError` is raised.
    """
    values = list(seq.values if isinstance(seq, CardinalitySequence) else seq)
    h_max = len(values) - 1
    diffs = finite_differences(values, d + 1)
    if len(diffs) < d + 2 or any(diffs[-(d + 2):]):
        raise NotStabilizedError(
            f"no stabilization detected for h <= {h_max} (need {2 * d + 3} trailing "
            f"values on one polynomial of degree <= {d})", window=h_max)
    h0 = 0
    for j, x in enumerate(diffs):
        if x != 0:
            h0 = j + 1
    # Newton forward form at h0, then shift to monomials in h
    newton = [finite_differences(values[h0:h0 + d + 1], k)[0] for k in range(d + 1)]
    coeffs = newton_to_monomial(newton, h0)
    degree = max((k for k, c in enumerate(coeffs) if c != 0), default=0)
    lead = coeffs[d] * math.factorial(d) if d < len(coeffs) else Fraction(0)
    if lead.denominator != 1:  # pragma: no cover - integer-valued polynomial
        raise ArithmeticError("leading coefficient times d! is not an integer")
    fit = KhovanskiiFit(h0, tuple(coeffs), degree, int(lead), d)
    for h in range(h0, h_max + 1):
        assert fit(h) == values[h]
    return fit


def multiset_count(n, h):
    """Number of h-multisets from n items, the trivial upper bound on |hA|."""
    return binom(h + n - 1, h)
