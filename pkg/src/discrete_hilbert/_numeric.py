"""High-precision numerics and the rational-reconstruction oracle.

Numeric values are diagnostics only. Every admissibility decision in the
package is made on exact rationals; these helpers exist to display values
and to cross-check exact verdicts.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import mpmath

DIGITS = 60

# Private context so callers' global mpmath precision is never touched.
MP = mpmath.MPContext()
MP.dps = DIGITS


def mpf(x):
    if isinstance(x, Rational):
        return MP.mpf(x.numerator) / x.denominator
    return MP.mpf(x)


def to_fraction(x) -> Fraction:
    """Exact conversion of an int, float, Fraction or mpf to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, float)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    v = MP.mpf(x)
    if not MP.isfinite(v):
        raise ValueError(f"cannot convert {x!r} to a fraction")
    man, exp = v.man_exp  # magnitude only; sign is separate
    if v < 0:
        man = -man
    if exp >= 0:
        return Fraction(man << exp)
    return Fraction(man, 1 << -exp)


def cos_turns(turns) -> mpmath.mpf:
    """cos(2*pi*turns) at DIGITS significant digits."""
    return MP.cospi(2 * mpf(turns))


def continued_fraction(x: Fraction, max_terms: int = 10_000):
    """Yield partial quotients of a (finite) rational's continued fraction."""
    num, den = x.numerator, x.denominator
    for _ in range(max_terms):
        if den == 0:
            return
        a, r = divmod(num, den)
        yield a
        num, den = den, r


def convergents(x: Fraction):
    h0, h1 = 0, 1
    k0, k1 = 1, 0
    for a in continued_fraction(x):
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        yield Fraction(h1, k1)


def reconstruct_rational(x, max_den: int = 10**6, tol=None) -> Fraction | None:
    """Return the rational with denominator <= max_den matching x, if any.

    Walks the convergents of x's continued fraction. By Legendre's theorem any
    rational a/b with |x - a/b| < 1/(2 b^2) is a convergent, so with a
    tolerance far below 1/(2 max_den^2) checking convergents is exhaustive.
    Returns None when no candidate lies within tol (default 10^-(DIGITS-20)).
    """
    if tol is None:
        tol = Fraction(1, 10 ** (DIGITS - 20))
    else:
        tol = to_fraction(tol)
    xf = to_fraction(x)
    for c in convergents(xf):
        if c.denominator > max_den:
            return None
        if abs(xf - c) <= tol:
            return c
    return None
