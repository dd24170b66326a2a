"""Exact rationals, primality, angles in turns, and the Niven classifier.

Rationals are plain :class:`fractions.Fraction` values. An angle is stored
as a fraction of a full turn, so ``AngleTurns(Fraction(1, 6))`` is pi/3.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from . import _numeric
from .errors import InvalidParameter

MAX_P = 2**63

# Reduced-denominator table: the only rational turns with rational cosine.
_NIVEN_TABLE = {
    Fraction(0): Fraction(1),
    Fraction(1, 6): Fraction(1, 2),
    Fraction(1, 4): Fraction(0),
    Fraction(1, 3): Fraction(-1, 2),
    Fraction(1, 2): Fraction(-1),
    Fraction(2, 3): Fraction(-1, 2),
    Fraction(3, 4): Fraction(0),
    Fraction(5, 6): Fraction(1, 2),
}
NIVEN_DENOMINATORS = frozenset({1, 2, 3, 4, 6})
NIVEN_VALUES = frozenset(_NIVEN_TABLE.values())


def normalize(numerator: int, denominator: int) -> Fraction:
    """Reduced fraction with positive denominator.

    >>> normalize(-4, -6)
    Fraction(2, 3)
    """
    if denominator == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Fraction:
    """Parse ``"n/d"`` or an integer string into a Fraction."""
    num, sep, den = text.strip().partition("/")
    try:
        return normalize(int(num), int(den) if sep else 1)
    except ValueError:
        raise ValueError(f"not a rational of the form n/d: {text!r}") from None


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# Deterministic Miller-Rabin. The first twelve prime bases are exact for
# every n < 3.3 * 10**24, which covers all 64-bit integers.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    n = max(n, 2)
    while not is_prime(n):
        n += 1
    return n


def validate_param(p: int) -> int:
    """Return p if it is an admissible discretisation parameter.

    Admissible means prime, greater than 12 and below 2**63.
    """
    if isinstance(p, bool) or not isinstance(p, int):
        raise InvalidParameter(f"p must be an integer, got {p!r}")
    return _checked_prime(int(p))


# every label and state revalidates its p, so the Miller-Rabin run is cached
@functools.lru_cache(maxsize=256)
def _checked_prime(p: int) -> int:
    if p >= MAX_P:
        raise InvalidParameter("p must fit in 63 bits")
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    if p <= 12:
        raise InvalidParameter(f"p must exceed 12, got {p}")
    return p


@dataclass(frozen=True)
class AngleTurns:
    """An angle 2*pi*turns with turns reduced into [0, 1)."""

    turns: Fraction

    def __post_init__(self):
        object.__setattr__(self, "turns", _numeric.to_fraction(self.turns) % 1)

    @classmethod
    def of(cls, n: int, d: int) -> AngleTurns:
        return cls(normalize(n, d))

    @property
    def denominator(self) -> int:
        return self.turns.denominator

    def doubled(self) -> AngleTurns:
        return AngleTurns(2 * self.turns)

    def radians(self):
        return 2 * _numeric.MP.pi * _numeric.mpf(self.turns)

    def __str__(self):
        return f"2pi*{format_rational(self.turns)}"


@dataclass(frozen=True)
class RationalCos:
    value: Fraction


@dataclass(frozen=True)
class IrrationalCos:
    """Marker for an irrational cosine; ``approx`` is a diagnostic only."""

    angle: AngleTurns

    @property
    def approx(self):
        return _numeric.cos_turns(self.angle.turns)


NivenClass = RationalCos | IrrationalCos


def classify_cos(angle: AngleTurns) -> NivenClass:
    """Decide whether cos of a rational-turn angle is rational (Niven)."""
    if angle.denominator in NIVEN_DENOMINATORS:
        return RationalCos(_NIVEN_TABLE[angle.turns])
    return IrrationalCos(angle)


def cos_exact(angle: AngleTurns) -> Fraction | IrrationalCos:
    """Exact cosine where one exists, else the irrational marker."""
    cls = classify_cos(angle)
    if isinstance(cls, RationalCos):
        return cls.value
    return cls
