"""Binomial coefficients and small exact polynomial helpers.

Polynomials are tuples of :class:`~fractions.Fraction` coefficients in
ascending powers.
"""

from fractions import Fraction
import math


def binom(n, k):
    """C(n, k), taken to be 0 whenever k < 0 or n < k (including n < 0)."""
    if k < 0 or n < k:
        return 0
    return math.comb(n, k)


def poly_add(p, q):
    n = max(len(p), len(q))
    p = list(p) + [Fraction(0)] * (n - len(p))
    q = list(q) + [Fraction(0)] * (n - len(q))
    return tuple(a + b for a, b in zip(p, q))


def poly_scale(p, c):
    return tuple(c * a for a in p)


def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def poly_trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def binomial_poly(shift, k):
    """Coefficients of C(x + shift, k) as a polynomial in x."""
    p = (Fraction(1),)
    for j in range(k):
        p = poly_mul(p, (Fraction(shift - j), Fraction(1)))
    return poly_scale(p, Fraction(1, math.factorial(k)))


def newton_to_monomial(newton, x0):
    """Expand sum_k newton[k] * C(x - x0, k) into monomial coefficients."""
    out = (Fraction(0),)
    for k, c in enumerate(newton):
        out = poly_add(out, poly_scale(binomial_poly(-x0, k), Fraction(c)))
    return out


def poly_eval(p, x):
    return sum(c * x**k for k, c in enumerate(p))
