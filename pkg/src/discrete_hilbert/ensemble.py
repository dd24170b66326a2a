"""Bit-string ensembles S(n, m) and their exact statistics.

``bit_string(p, m)`` is m entries of +1 followed by p - m entries of -1.
Rotating by n shifts every entry n places to the right (cyclically), so
entry i of the rotated string is entry (i - n) mod p of the base string.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ._numeric import MP
from .bloch import DiscreteQubit
from .errors import InvariantBreach
from .exact import AngleTurns, validate_param
from .spherical import (
    SphericalTriangle,
    ThirdSideVerdict,
    classify_third_side,
    orthogonal_colatitudes,
)

# Above this length strings are never materialised.
MATERIALISE_LIMIT = 10**6
# Window length for summation spot checks on implicit strings.
SPOT_WINDOW = 4096

UNCERTAINTY_TOL = 1e-12


@dataclass(frozen=True)
class BitString:
    p: int
    m: int
    offset: int = 0

    def __post_init__(self):
        validate_param(self.p)
        if not 0 <= self.m <= self.p:
            raise ValueError(f"m must lie in [0, {self.p}], got {self.m}")
        object.__setattr__(self, "offset", self.offset % self.p)

    @property
    def materialised(self) -> bool:
        return self.p <= MATERIALISE_LIMIT

    def entry(self, i: int) -> int:
        return 1 if (i - self.offset) % self.p < self.m else -1

    @property
    def entries(self) -> tuple[int, ...]:
        if not self.materialised:
            raise ValueError(f"p = {self.p} exceeds the materialisation limit")
        head = (1,) * self.m + (-1,) * (self.p - self.m)
        k = self.offset
        return head[-k:] + head[:-k] if k else head

    def equivalent(self, other: BitString) -> bool:
        """Equality modulo a global permutation (rotation)."""
        return (self.p, self.m) == (other.p, other.m)


@dataclass(frozen=True)
class ScaledBitString:
    """Dimensional bit string with entries +-scale (scale = hbar/2, hbar = 1)."""

    base: BitString
    scale: Fraction = Fraction(1, 2)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(e * self.scale for e in self.base.entries)

    def mean(self) -> Fraction:
        return self.scale * mean(self.base)

    def variance(self) -> Fraction:
        return self.scale**2 * variance(self.base)


def bit_string(p: int, m: int) -> BitString:
    return BitString(p, m, 0)


def rotate(s: BitString, n: int) -> BitString:
    return BitString(s.p, s.m, s.offset + n)


def _closed_mean(s: BitString) -> Fraction:
    return Fraction(2 * s.m, s.p) - 1


def _spot_check(s: BitString) -> None:
    # the +1 block starts at the offset: a window there holds min(w, m)
    # ones, a window ending there holds ones only if the -1 block is short
    w = min(SPOT_WINDOW, s.p)
    after = sum(1 for i in range(s.offset, s.offset + w) if s.entry(i) == 1)
    before = sum(1 for i in range(s.offset - w, s.offset) if s.entry(i) == 1)
    if after != min(w, s.m) or before != max(0, w - (s.p - s.m)):
        raise InvariantBreach(f"bit string layout broken for {s}")


def mean(s: BitString) -> Fraction:
    """Exact mean; direct summation when the string is materialised."""
    if not s.materialised:
        _spot_check(s)
        return _closed_mean(s)
    value = Fraction(sum(s.entries), s.p)
    if value != _closed_mean(s):
        raise InvariantBreach(f"summed mean {value} != closed form for {s}")
    return value


def variance(s: BitString) -> Fraction:
    """Exact <S^2> - <S>^2, equal to sin^2 theta for the associated state."""
    closed = 1 - _closed_mean(s) ** 2
    if not s.materialised:
        _spot_check(s)
        return closed
    entries = s.entries
    mu = Fraction(sum(entries), s.p)
    value = Fraction(sum(e * e for e in entries), s.p) - mu * mu
    if value != closed:
        raise InvariantBreach(f"summed variance {value} != closed form for {s}")
    return value


def from_qubit(q: DiscreteQubit) -> BitString:
    return rotate(bit_string(q.p, q.m), q.n)


class UncertaintyCheck(NamedTuple):
    lhs: object
    rhs: object
    holds: bool
    tight: bool


def uncertainty_product(q: DiscreteQubit, scale: Fraction = Fraction(1, 2)) -> UncertaintyCheck:
    """Compare Delta S_x Delta S_y with (hbar/2) |<S_z>| for a grid state.

    Both sides carry the dimensional scale: Delta S_x = scale |sin theta'|
    and <S_z> = scale cos theta, so at the poles lhs = rhs = scale^2.
    ``tight`` marks numerical equality (within tolerance).
    """
    c = q.cos_theta
    theta = MP.acos(MP.mpf(c.numerator) / c.denominator)
    cz, cx, cy = orthogonal_colatitudes(theta, q.phase.radians())
    s2 = MP.mpf(scale.numerator) ** 2 / scale.denominator**2
    lhs = s2 * MP.sqrt(1 - cx * cx) * MP.sqrt(1 - cy * cy)
    rhs = s2 * abs(cz)
    gap = lhs - rhs
    return UncertaintyCheck(lhs, rhs, gap >= -UNCERTAINTY_TOL, abs(gap) <= UNCERTAINTY_TOL)


def complementarity_check(
    cos_theta: Fraction, cos_pole_sep: Fraction, vertex_angle: AngleTurns, p: int
) -> ThirdSideVerdict:
    """Can a point with rational cos theta also have rational cos theta'?

    Works on the triangle (point, p_z, p_x): sides point-p_z and p_z-p_x
    meet at p_z with the given vertex angle; the third side is point-p_x.
    """
    return classify_third_side(SphericalTriangle(cos_theta, cos_pole_sep, vertex_angle), p)
