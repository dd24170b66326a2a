"""p-adic labels for trajectories and the piecewise state-space metric.

A trajectory on the invariant set is labelled by a truncated p-adic integer:
digit k picks one of the p strands at fractal level k (level 0 coarsest).
Two labelled points are p^-(k+1) apart when their labels first differ at
digit k. Any pair involving a point off the invariant set is p apart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .exact import validate_param

DEFAULT_DEPTH = 8
# radius shrink per fractal level in the helix cross-section embedding
HELIX_SHRINK = 0.25


def valuation(x: int, p: int) -> int | float:
    """Largest k with p^k | x; ``math.inf`` for x = 0."""
    validate_param(p)
    if x == 0:
        return math.inf
    x = abs(x)
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


@dataclass(frozen=True)
class PAdicLabel:
    p: int
    digits: tuple[int, ...]

    def __post_init__(self):
        validate_param(self.p)
        object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits:
            raise ValueError("a label needs at least one digit")
        for d in self.digits:
            if not 0 <= d < self.p:
                raise ValueError(f"digit {d} outside [0, {self.p - 1}]")

    @property
    def depth(self) -> int:
        return len(self.digits)

    def extend(self, digit: int) -> PAdicLabel:
        return PAdicLabel(self.p, self.digits + (digit,))

    def as_integer(self) -> int:
        """The truncated p-adic integer sum(d_k p^k)."""
        return sum(d * self.p**k for k, d in enumerate(self.digits))


def label_distance(a: PAdicLabel, b: PAdicLabel) -> Fraction:
    if a.p != b.p:
        raise ValueError(f"labels use different primes ({a.p}, {b.p})")
    if a.depth != b.depth:
        raise ValueError(f"labels have different depths ({a.depth}, {b.depth})")
    for k, (x, y) in enumerate(zip(a.digits, b.digits)):
        if x != y:
            return Fraction(1, a.p ** (k + 1))
    return Fraction(0)


def helix_embedding(label: PAdicLabel) -> tuple[float, float]:
    """Cross-section coordinates of a labelled strand.

    Level k contributes a point on a circle of radius HELIX_SHRINK**k at angle
    2*pi*d_k/p, giving the nested Cantor-like picture of a helix cut.
    """
    x = y = 0.0
    for k, d in enumerate(label.digits):
        r = HELIX_SHRINK**k
        x += r * math.cos(2 * math.pi * d / label.p)
        y += r * math.sin(2 * math.pi * d / label.p)
    return x, y


@dataclass(frozen=True)
class StatePoint:
    """A point of the embedding space; ``label`` is None off the invariant set.

    On-set points are identified by their label. Their embedding is derived
    from it (see :func:`on_set`) and serves only for Euclidean comparison.
    """

    embedding: tuple[float, ...]
    label: PAdicLabel | None = None

    @property
    def on_set(self) -> bool:
        return self.label is not None


def on_set(label: PAdicLabel) -> StatePoint:
    return StatePoint(helix_embedding(label), label)


def off_set(embedding: Sequence[float]) -> StatePoint:
    return StatePoint(tuple(float(v) for v in embedding), None)


def _same_point(x: StatePoint, y: StatePoint) -> bool:
    if x.on_set and y.on_set:
        return x.label == y.label
    return x == y


def state_distance(x: StatePoint, y: StatePoint, p: int) -> Fraction:
    """0 for the same point, label distance on the set, p otherwise."""
    if _same_point(x, y):
        return Fraction(0)
    if x.on_set and y.on_set:
        if x.label.p != p or y.label.p != p:
            raise ValueError("labels do not match the metric's prime")
        return label_distance(x.label, y.label)
    return Fraction(p)


def euclidean_distance(x: StatePoint, y: StatePoint) -> float:
    return math.dist(x.embedding, y.embedding)


class FineTuningReport(NamedTuple):
    epsilon: float
    euclidean_distance: float
    state_distance: Fraction
    ratio: float

    @property
    def within_epsilon(self) -> bool:
        return self.euclidean_distance <= self.epsilon


def fine_tuning_demo(x: StatePoint, epsilon: float) -> FineTuningReport:
    """Perturb an on-set point by epsilon/2 and measure both distances.

    The perturbed point carries no label, so the state metric puts it p away
    no matter how small epsilon is.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if not x.on_set:
        raise ValueError("fine_tuning_demo needs an on-set point")
    p = x.label.p
    shifted = list(x.embedding)
    shifted[0] += epsilon / 2
    y = off_set(shifted)
    e = euclidean_distance(x, y)
    if e == 0:
        raise ValueError(f"epsilon {epsilon} is below float resolution at this point")
    d = state_distance(x, y, p)
    return FineTuningReport(epsilon, e, d, float(d) / e)
