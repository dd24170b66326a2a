"""The discretised Bloch sphere.

A state is a triple (p, m, n) with cos^2(theta/2) = m/p and phi/2pi = n/p,
so cos theta = 2m/p - 1 is rational and the phase is a rational turn.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import _numeric
from ._numeric import MP
from .exact import AngleTurns, validate_param


@dataclass(frozen=True)
class DiscreteQubit:
    p: int
    m: int
    n: int

    def __post_init__(self):
        validate_param(self.p)
        if not 0 <= self.m <= self.p:
            raise ValueError(f"m must lie in [0, {self.p}], got {self.m}")
        if not 0 <= self.n <= self.p:
            raise ValueError(f"n must lie in [0, {self.p}], got {self.n}")

    @property
    def cos_theta(self) -> Fraction:
        return Fraction(2 * self.m, self.p) - 1

    @property
    def phase(self) -> AngleTurns:
        # n = p is the full turn, identical to n = 0
        return AngleTurns(Fraction(self.n, self.p))

    def same_ray(self, other: DiscreteQubit) -> bool:
        """Equality up to global phase: (m, n mod p) match at equal p."""
        return (self.p, self.m, self.phase) == (other.p, other.m, other.phase)


def make_state(p: int, m: int, n: int) -> DiscreteQubit:
    return DiscreteQubit(p, m, n)


def amplitudes(q: DiscreteQubit):
    """(a0, Re a1, Im a1) with a0 = sqrt(m/p) and a1 = sqrt((p-m)/p) e^{2 pi i n/p}."""
    a0 = MP.sqrt(_numeric.mpf(Fraction(q.m, q.p)))
    r1 = MP.sqrt(_numeric.mpf(Fraction(q.p - q.m, q.p)))
    t = 2 * _numeric.mpf(q.phase.turns)
    return a0, r1 * MP.cospi(t), r1 * MP.sinpi(t)


def born_probabilities(q: DiscreteQubit) -> tuple[Fraction, Fraction]:
    return Fraction(q.m, q.p), Fraction(q.p - q.m, q.p)


def nearest_admissible(p: int, target_cos_theta, target_turns) -> DiscreteQubit:
    """Snap a target point to the lattice at resolution 1/p.

    Rounding is half-to-even on the exact value of the target, so the result
    does not depend on float rounding of p * target.
    """
    validate_param(p)
    c = _numeric.to_fraction(target_cos_theta)
    t = _numeric.to_fraction(target_turns)
    if abs(c) > 1:
        raise ValueError("target cos theta outside [-1, 1]")
    if not 0 <= t < 1:
        raise ValueError("target turns outside [0, 1)")
    m = min(max(round(p * (1 + c) / 2), 0), p)
    n = round(p * t) % p
    return DiscreteQubit(p, m, n)


def enumerate_grid(p: int) -> Iterator[DiscreteQubit]:
    """All (p+1)^2 index pairs, m-major, starting at (m=0, n=0)."""
    validate_param(p)
    for m in range(p + 1):
        for n in range(p + 1):
            yield DiscreteQubit(p, m, n)
