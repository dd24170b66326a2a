"""Spherical triangles: cosine rule, the impossible-triangle test, colatitudes.

Sides are carried by the cosines of their angular lengths. A triangle whose
two sides have rational cosines and whose included angle is 2*pi*n/p (p a
prime above 12) cannot have a third side with rational cosine. The check
below verifies those preconditions itself before issuing that verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _numeric
from ._numeric import MP
from .errors import DegenerateTriangle, InvalidParameter
from .exact import AngleTurns, IrrationalCos, classify_cos, validate_param


def _check_unit(name, c):
    if abs(c) > 1:
        raise ValueError(f"{name} = {c} lies outside [-1, 1]")


def cosine_rule_numeric(cos_ac, cos_bc, cos_c):
    """cos AB = cos AC cos BC + sin AC sin BC cos C, sines taken >= 0."""
    _check_unit("cos_AC", cos_ac)
    _check_unit("cos_BC", cos_bc)
    _check_unit("cos_c", cos_c)
    a, b, c = _numeric.mpf(cos_ac), _numeric.mpf(cos_bc), _numeric.mpf(cos_c)
    sin_a = MP.sqrt(1 - a * a)
    sin_b = MP.sqrt(1 - b * b)
    return a * b + sin_a * sin_b * c


@dataclass(frozen=True)
class SphericalTriangle:
    """Two sides meeting at vertex C, plus the angle subtended there."""

    cos_ac: Fraction
    cos_bc: Fraction
    vertex_angle_c: AngleTurns

    def __post_init__(self):
        object.__setattr__(self, "cos_ac", Fraction(self.cos_ac))
        object.__setattr__(self, "cos_bc", Fraction(self.cos_bc))
        _check_unit("cos_AC", self.cos_ac)
        _check_unit("cos_BC", self.cos_bc)
        check_nondegenerate(self)


def check_nondegenerate(t: SphericalTriangle) -> None:
    if abs(t.cos_ac) == 1 or abs(t.cos_bc) == 1:
        raise DegenerateTriangle("degenerate: a side has cosine +-1")
    if t.vertex_angle_c.turns in (0, Fraction(1, 2)):
        raise DegenerateTriangle("degenerate: vertex angle is 0 or pi")


@dataclass(frozen=True)
class ProvablyIrrational:
    numeric_cos_ab: object


@dataclass(frozen=True)
class ExceptionPossible:
    reason: str
    numeric_cos_ab: object


ThirdSideVerdict = ProvablyIrrational | ExceptionPossible


def classify_third_side(t: SphericalTriangle, p: int) -> ThirdSideVerdict:
    """Decide whether the side AB opposite vertex C has irrational cosine.

    The argument: if cos AB were rational then sin AC sin BC cos C would be,
    so its square would be, and since (1 - cos^2 AC)(1 - cos^2 BC) is a
    nonzero rational, cos^2 C = (1 + cos 2C)/2 would be rational too. For
    C = 2*pi*n/p, 2C also has reduced denominator p, which lies outside the
    Niven set, so cos 2C is irrational.

    Only the angle at C is used; the other two vertex angles play no part.
    """
    check_nondegenerate(t)
    if abs(t.cos_ac) > 1 or abs(t.cos_bc) > 1:
        raise ValueError("side cosine outside [-1, 1]")
    c = t.vertex_angle_c
    numeric = cosine_rule_numeric(t.cos_ac, t.cos_bc, _numeric.cos_turns(c.turns))
    try:
        validate_param(p)
    except InvalidParameter as exc:
        return ExceptionPossible(f"p not admissible: {exc}", numeric)
    if not isinstance(classify_cos(c.doubled()), IrrationalCos):
        return ExceptionPossible("Niven exception for 2c", numeric)
    if c.denominator != p:
        return ExceptionPossible(
            f"vertex angle {c} is not of the form 2pi*n/{p}", numeric
        )
    return ProvablyIrrational(numeric)


def orthogonal_colatitudes(theta, phi):
    """Cosines of the colatitudes of a point relative to the z, x and y poles.

    The point sits at colatitude theta and longitude phi about p_z; p_x and
    p_y lie on the equator at longitudes 0 and pi/2. Returns
    (cos theta, sin theta cos phi, sin theta sin phi). These always satisfy
    |sin theta'| |sin theta''| >= |cos theta|.
    """
    theta, phi = _numeric.mpf(theta), _numeric.mpf(phi)
    s = MP.sin(theta)
    return MP.cos(theta), s * MP.cos(phi), s * MP.sin(phi)
