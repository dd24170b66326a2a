"""Interferometric versus which-way admissibility of a phase difference.

An interferometric run needs cos(dphi) rational; a which-way run needs
dphi/2pi rational. For a phase 2*pi*n/p (p prime > 12, dphi != 0) Niven's
theorem makes these mutually exclusive, and the hidden-variable support
rho(lambda | X) therefore excludes the other setting X' = 1 - X.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InadmissibleConfiguration, InvariantBreach
from .exact import NIVEN_VALUES, AngleTurns, RationalCos, classify_cos, validate_param


class MZConfig(enum.IntEnum):
    """Value is the setting label X."""

    WHICH_WAY = 0
    INTERFEROMETRIC = 1

    def other(self) -> MZConfig:
        return MZConfig(1 - self)


@dataclass(frozen=True)
class RationalTurns:
    angle: AngleTurns

    def __post_init__(self):
        if self.angle.turns == 0:
            raise ValueError("phase difference must be nonzero")
        validate_param(self.angle.denominator)


@dataclass(frozen=True)
class RationalCosine:
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        if abs(self.c) > 1:
            raise ValueError(f"cosine {self.c} outside [-1, 1]")
        if self.c in NIVEN_VALUES:
            raise ValueError(f"cosine {self.c} is a Niven exceptional value")


PhaseSpec = RationalTurns | RationalCosine


def admissible(phase: PhaseSpec, config: MZConfig) -> bool:
    if isinstance(phase, RationalTurns):
        if config is MZConfig.WHICH_WAY:
            return True
        return isinstance(classify_cos(phase.angle), RationalCos)
    # rational cosine outside the Niven set: the angle is not a rational turn
    return config is MZConfig.INTERFEROMETRIC


def interferometer_probabilities(phase: PhaseSpec) -> tuple[Fraction, Fraction]:
    """Output-port probabilities (cos^2(dphi/2), sin^2(dphi/2))."""
    if not isinstance(phase, RationalCosine):
        raise InadmissibleConfiguration("inadmissible configuration")
    return (1 + phase.c) / 2, (1 - phase.c) / 2


@dataclass(frozen=True)
class SIRecord:
    """Support indicators rho(lambda | X) and rho(lambda | X')."""

    rho_given_x: int
    rho_given_x_prime: int
    violates_si: bool


def support_record(rho_x: int, rho_x_prime: int) -> SIRecord:
    if rho_x and rho_x_prime:
        raise InvariantBreach("support on both X and X': Statistical Independence restored")
    return SIRecord(rho_x, rho_x_prime, rho_x != rho_x_prime)


def statistical_independence_check(phase: PhaseSpec, x: MZConfig) -> SIRecord:
    return support_record(int(admissible(phase, x)), int(admissible(phase, x.other())))


def sample_phase(rng: random.Random, variant: type, primes=(13, 17, 19, 101, 1009), max_den=1000) -> PhaseSpec:
    """Draw a phase of the requested variant.

    RationalTurns: p from ``primes``, n uniform in 1..p-1.
    RationalCosine: denominator uniform in 1..max_den, numerator uniform over
    the admissible range, redrawn if it hits a Niven value.
    """
    if variant is RationalTurns:
        p = rng.choice(primes)
        return RationalTurns(AngleTurns(Fraction(rng.randint(1, p - 1), p)))
    if variant is RationalCosine:
        while True:
            d = rng.randint(1, max_den)
            c = Fraction(rng.randint(-d, d), d)
            if c not in NIVEN_VALUES:
                return RationalCosine(c)
    raise TypeError(f"unknown phase variant {variant!r}")
