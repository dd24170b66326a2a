"""CHSH trials on the discretised sphere and the look-up table gap.

A trial geometry is stored relative to the settings actually chosen:

* ``cos_actual_pair``  Alice's actual direction to Bob's actual direction
* ``cos_bob_pair``     Bob's actual direction to Bob's counterfactual one
* ``cos_alice_pair``   Alice's actual direction to Alice's counterfactual one
* ``vertex_angle_at_bob``  angle at Bob's actual direction between the arcs
  to Alice's actual and Bob's counterfactual directions

All three cosines are snapped to the lattice 2m/p - 1 and the vertex angle to
2*pi*n/p. The double counterfactual "Alice measuring in Bob's counterfactual
direction" needs the third side of that triangle to have a rational cosine,
which the impossible-triangle test rules out.

Singlet correlations use nearest-lattice rounding of the quantum value
-cos(theta_ab). That rounding rule is a modelling choice, not a derived law.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from . import _numeric
from ._numeric import MP
from .errors import GeometryError, InvariantBreach
from .exact import AngleTurns, validate_param
from .mach_zehnder import SIRecord, support_record
from .spherical import (
    ExceptionPossible,
    ProvablyIrrational,
    SphericalTriangle,
    ThirdSideVerdict,
    classify_third_side,
)

JITTER = 1e-3
ROWS = ("X=0", "X=1", "Y=0", "Y=1")

# a0, a1, b0, b1 as angles in a common great circle
OPTIMAL_ANGLES = (MP.mpf(0), MP.pi / 2, MP.pi / 4, -MP.pi / 4)
TSIRELSON = 2 * MP.sqrt(2)


class SettingPair(NamedTuple):
    alice: int
    bob: int


ALL_SETTINGS = tuple(SettingPair(x, y) for x in (0, 1) for y in (0, 1))


# -- small 3-vector helpers -------------------------------------------------

def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _unit(u):
    r = math.sqrt(_dot(u, u))
    return (u[0] / r, u[1] / r, u[2] / r)


def _direction(angle: float):
    """Unit vector at ``angle`` radians from +z in the x-z plane."""
    return (math.sin(angle), 0.0, math.cos(angle))


def _jitter(v, rng: random.Random, magnitude: float):
    """Displace v by a uniform draw from the spherical cap of the given radius."""
    if magnitude == 0:
        return v
    helper = (1.0, 0.0, 0.0) if abs(v[0]) < 0.9 else (0.0, 1.0, 0.0)
    e1 = _unit(_cross(v, helper))
    e2 = _cross(v, e1)
    psi = 2 * math.pi * rng.random()
    delta = magnitude * math.sqrt(rng.random())
    c, s = math.cos(delta), math.sin(delta)
    cp, sp = math.cos(psi), math.sin(psi)
    return _unit(tuple(c * v[i] + s * (cp * e1[i] + sp * e2[i]) for i in range(3)))


def _clamp(x: float) -> float:
    return min(1.0, max(-1.0, x))


def _vertex_turns(at, towards_a, towards_b) -> float:
    """Angle at ``at`` from the arc towards_a to the arc towards_b, in turns."""
    t1 = tuple(towards_a[i] - _dot(towards_a, at) * at[i] for i in range(3))
    t2 = tuple(towards_b[i] - _dot(towards_b, at) * at[i] for i in range(3))
    angle = math.atan2(_dot(_cross(t1, t2), at), _dot(t1, t2))
    return (angle / (2 * math.pi)) % 1.0


# -- snapping ---------------------------------------------------------------

def snap_cos(p: int, c) -> Fraction:
    """Nearest lattice cosine 2m/p - 1, stepping off the poles if needed."""
    m = min(max(round(p * (1 + _numeric.to_fraction(c)) / 2), 0), p)
    if m == p:
        m = p - 1
    elif m == 0:
        m = 1
    value = Fraction(2 * m, p) - 1
    if abs(value) >= 1:
        raise GeometryError(f"no non-degenerate lattice cosine near {c} at p = {p}")
    return value


def snap_turns(p: int, t) -> AngleTurns:
    """Nearest angle 2*pi*n/p, stepping to an adjacent point if n = 0."""
    t = _numeric.to_fraction(t) % 1
    n = round(p * t) % p
    if n == 0:
        n = 1 if t < Fraction(1, 2) else p - 1
    angle = AngleTurns(Fraction(n, p))
    if angle.turns in (0, Fraction(1, 2)):
        raise GeometryError(f"no non-degenerate vertex angle near {t} at p = {p}")
    return angle


# -- geometry ---------------------------------------------------------------

@dataclass(frozen=True)
class TrialGeometry:
    p: int
    cos_actual_pair: Fraction
    cos_bob_pair: Fraction
    cos_alice_pair: Fraction
    vertex_angle_at_bob: AngleTurns
    # unsnapped cosine of the actual pair, kept for error diagnostics
    precise_cos_actual: float | None = field(default=None, compare=False)

    def __post_init__(self):
        for name in ("cos_actual_pair", "cos_bob_pair", "cos_alice_pair"):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                raise TypeError(f"{name} must be an exact Fraction")
            if abs(value) >= 1:
                raise GeometryError(f"degenerate: {name} = {value}")
        if self.vertex_angle_at_bob.turns in (0, Fraction(1, 2)):
            raise GeometryError("degenerate: vertex angle at Bob is 0 or pi")

    @property
    def triangle(self) -> SphericalTriangle:
        """(Alice actual, Bob actual, Bob counterfactual), vertex at Bob actual."""
        return SphericalTriangle(self.cos_actual_pair, self.cos_bob_pair, self.vertex_angle_at_bob)

    def third_side(self) -> ThirdSideVerdict:
        return classify_third_side(self.triangle, self.p)


def build_trial_geometry(
    p: int,
    nominal: Sequence = OPTIMAL_ANGLES,
    jitter_seed=0,
    chosen: SettingPair = SettingPair(0, 0),
    jitter: float = JITTER,
) -> TrialGeometry:
    """Jitter the four nominal directions and snap the trial to the lattice.

    ``nominal`` holds the angles (radians, common great circle) of
    a0, a1, b0, b1. Each direction is displaced by at most ``jitter`` radians,
    drawn from ``random.Random(jitter_seed)``, so a seed fixes the geometry.
    """
    validate_param(p)
    if len(nominal) != 4:
        raise ValueError("need four nominal directions: a0, a1, b0, b1")
    rng = random.Random(jitter_seed)
    dirs = [_jitter(_direction(float(a)), rng, jitter) for a in nominal]
    alice, alice_cf = dirs[chosen.alice], dirs[1 - chosen.alice]
    bob, bob_cf = dirs[2 + chosen.bob], dirs[3 - chosen.bob]
    precise = _clamp(_dot(alice, bob))
    return TrialGeometry(
        p=p,
        cos_actual_pair=snap_cos(p, precise),
        cos_bob_pair=snap_cos(p, _clamp(_dot(bob, bob_cf))),
        cos_alice_pair=snap_cos(p, _clamp(_dot(alice, alice_cf))),
        vertex_angle_at_bob=snap_turns(p, _vertex_turns(bob, alice, bob_cf)),
        precise_cos_actual=precise,
    )


# -- look-up table ----------------------------------------------------------

class CellKind(enum.Enum):
    OBSERVED = "observed"
    INFERRED = "inferred"
    DEFINITE_UNKNOWN = "definite-unknown"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class Cell:
    kind: CellKind
    sign: int | None = None

    def symbol(self) -> str:
        if self.sign is not None:
            return "+" if self.sign > 0 else "-"
        return "?" if self.kind is CellKind.DEFINITE_UNKNOWN else " "


def _check_sign(s: int) -> int:
    if s not in (1, -1):
        raise ValueError(f"outcome must be +1 or -1, got {s}")
    return s


def fill_column(g: TrialGeometry, chosen: SettingPair, alice_outcome: int, bob_outcome: int) -> tuple[Cell, ...]:
    """One look-up-table column, rows ordered X=0, X=1, Y=0, Y=1."""
    _check_sign(alice_outcome)
    _check_sign(bob_outcome)
    verdict = g.third_side()
    if not isinstance(verdict, ProvablyIrrational):
        raise GeometryError(f"nonconforming geometry: {verdict.reason}")
    column = [None] * 4
    column[chosen.alice] = Cell(CellKind.OBSERVED, alice_outcome)
    # singlet: Alice at Bob's precise direction would see the opposite sign
    column[2 + chosen.bob] = Cell(CellKind.INFERRED, -bob_outcome)
    # cos_alice_pair is rational, so this counterfactual is definite
    column[1 - chosen.alice] = Cell(CellKind.DEFINITE_UNKNOWN)
    column[3 - chosen.bob] = Cell(CellKind.UNDEFINED)
    return tuple(column)


@dataclass
class LookupTable:
    columns: list[tuple[Cell, ...]] = field(default_factory=list)

    def append(self, column: tuple[Cell, ...]) -> None:
        blanks = sum(c.kind is CellKind.UNDEFINED for c in column)
        if blanks != 1:
            raise InvariantBreach(f"column has {blanks} undefined cells, expected exactly 1")
        self.columns.append(column)

    def completable_fraction(self) -> Fraction:
        if not self.columns:
            return Fraction(0)
        full = sum(all(c.kind is not CellKind.UNDEFINED for c in col) for col in self.columns)
        return Fraction(full, len(self.columns))

    def undefined_fraction(self) -> Fraction:
        cells = [c for col in self.columns for c in col]
        if not cells:
            return Fraction(0)
        return Fraction(sum(c.kind is CellKind.UNDEFINED for c in cells), len(cells))

    def render(self) -> str:
        lines = []
        for r, label in enumerate(ROWS):
            lines.append(f"{label:4} |" + "".join(f" {col[r].symbol()}" for col in self.columns))
        return "\n".join(lines)


# -- correlations -----------------------------------------------------------

def singlet_correlation(p: int, target_separation_cos) -> Fraction:
    """Lattice singlet correlation: -(2m/p - 1), m = round(p (1 + cos)/2)."""
    c = _numeric.to_fraction(target_separation_cos)
    if abs(c) > 1:
        raise ValueError(f"separation cosine {target_separation_cos} outside [-1, 1]")
    m = round(p * (1 + c) / 2)
    return 1 - Fraction(2 * m, p)


def _separation_cos(a, b):
    return MP.cos(_numeric.mpf(a) - _numeric.mpf(b))


def chsh_s_value(p: int, angles: Sequence = OPTIMAL_ANGLES) -> Fraction:
    """S = E(a0,b0) + E(a0,b1) + E(a1,b0) - E(a1,b1) on the lattice."""
    validate_param(p)
    a0, a1, b0, b1 = angles
    e = lambda a, b: singlet_correlation(p, _separation_cos(a, b))  # noqa: E731
    return e(a0, b0) + e(a0, b1) + e(a1, b0) - e(a1, b1)


def s_error(s: Fraction):
    return abs(abs(_numeric.mpf(s)) - TSIRELSON)


# -- statistical independence ----------------------------------------------

def si_violation_chsh(g: TrialGeometry, xy: SettingPair) -> SIRecord | ExceptionPossible:
    """Support of lambda on (X, Y) versus (X, 1 - Y).

    The actual settings are consistent by construction. The partner setting
    needs the third side of the trial triangle to be rational; when the
    geometry is nonconforming the indicator is undecided and the
    ExceptionPossible verdict is returned instead.
    """
    verdict = g.third_side()
    if isinstance(verdict, ExceptionPossible):
        return verdict
    return support_record(1, 0)


# -- trials -----------------------------------------------------------------

class Trial(NamedTuple):
    geometry: TrialGeometry
    chosen: SettingPair
    alice_outcome: int
    bob_outcome: int
    column: tuple[Cell, ...]


def sample_outcomes(g: TrialGeometry, rng: random.Random) -> tuple[int, int]:
    """Draw (alice, bob) with P(equal) = (1 + E)/2, E = -cos_actual_pair.

    (1 + E)/2 = (p - m)/p for cos = 2m/p - 1, so the draw is an index into
    the p-member ensemble rather than a float comparison.
    """
    alice = 1 if rng.randrange(2) else -1
    m = (g.cos_actual_pair + 1) * g.p / 2
    same = rng.randrange(g.p) < g.p - m
    return alice, alice if same else -alice


def run_trials(p: int, n_trials: int, seed=0, nominal: Sequence = OPTIMAL_ANGLES) -> Iterator[Trial]:
    """Seeded trials; trial i depends only on (seed, p, i)."""
    validate_param(p)
    for i in range(n_trials):
        rng = random.Random(f"{seed}:{p}:{i}:settings")
        chosen = SettingPair(rng.randrange(2), rng.randrange(2))
        g = build_trial_geometry(p, nominal, f"{seed}:{p}:{i}:jitter", chosen)
        alice, bob = sample_outcomes(g, rng)
        yield Trial(g, chosen, alice, bob, fill_column(g, chosen, alice, bob))


def build_table(p: int, n_trials: int, seed=0) -> LookupTable:
    table = LookupTable()
    for trial in run_trials(p, n_trials, seed):
        table.append(trial.column)
    return table


def completability_scan(p: int, n_trials: int, seed=0) -> Fraction:
    """Fraction of trial columns with all four rows definite. Always 0."""
    return build_table(p, n_trials, seed).completable_fraction()
