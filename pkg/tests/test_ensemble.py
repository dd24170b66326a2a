from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from discrete_hilbert.bloch import enumerate_grid, make_state
from discrete_hilbert.ensemble import (
    BitString,
    ScaledBitString,
    bit_string,
    complementarity_check,
    from_qubit,
    mean,
    rotate,
    uncertainty_product,
    variance,
)
from discrete_hilbert.errors import DegenerateTriangle
from discrete_hilbert.exact import AngleTurns
from discrete_hilbert.spherical import ExceptionPossible, ProvablyIrrational

PRIMES = [13, 17, 19, 101]


def summed_stats(entries):
    """Oracle: mean and variance straight from a list of +-1."""
    n = len(entries)
    mu = Fraction(sum(entries), n)
    return mu, Fraction(sum((e - mu) ** 2 for e in entries), 1) / n


def test_bit_string_layout():
    assert bit_string(17, 13).entries == (1,) * 13 + (-1,) * 4
    assert bit_string(13, 0).entries == (-1,) * 13
    assert bit_string(13, 13).entries == (1,) * 13
    with pytest.raises(ValueError):
        bit_string(13, 14)


def test_rotate_examples():
    s = bit_string(17, 13)
    assert rotate(s, 17) == s
    assert rotate(rotate(s, 3), 9) == rotate(s, 12)
    shifted = rotate(s, 5).entries
    assert all(shifted[(i + 5) % 17] == s.entries[i] for i in range(17))


@given(st.sampled_from(PRIMES).flatmap(lambda p: st.tuples(st.just(p), st.integers(0, p), st.integers(-500, 500), st.integers(-500, 500))))
def test_rotation_group_law(args):
    p, m, a, b = args
    s = bit_string(p, m)
    assert rotate(rotate(s, a), b).entries == rotate(s, a + b).entries
    assert sorted(rotate(s, a).entries) == sorted(s.entries)


@pytest.mark.parametrize("p", [13, 17])
def test_rotation_order_is_p(p):
    for m in range(1, p):
        s = bit_string(p, m)
        for k in range(-2 * p, 2 * p + 1):
            assert (rotate(s, k).entries == s.entries) == (k % p == 0)


def test_mean_variance_examples():
    assert mean(bit_string(17, 13)) == Fraction(9, 17)
    assert mean(bit_string(17, 17)) == 1
    assert mean(bit_string(17, 0)) == -1
    assert variance(bit_string(17, 13)) == Fraction(208, 289)
    assert variance(bit_string(17, 17)) == 0
    assert variance(bit_string(17, 4)) == Fraction(208, 289)


@pytest.mark.parametrize("p", [13, 17, 101])
def test_stats_match_oracle_and_closed_form(p):
    for m in range(p + 1):
        for n in (0, 1, p // 2):
            s = rotate(bit_string(p, m), n)
            mu, var = summed_stats(list(s.entries))
            c = Fraction(2 * m, p) - 1
            assert mean(s) == mu == c
            assert variance(s) == var == 1 - c * c


def test_implicit_strings_use_closed_form():
    p = 1_000_003
    s = rotate(bit_string(p, 777_777), 123)
    assert not s.materialised
    assert mean(s) == Fraction(2 * 777_777, p) - 1
    assert variance(s) == 1 - mean(s) ** 2
    with pytest.raises(ValueError):
        s.entries


def test_scaled_bit_string():
    s = ScaledBitString(bit_string(17, 13))
    assert set(s.entries) == {Fraction(1, 2), Fraction(-1, 2)}
    assert s.mean() == Fraction(9, 34)
    mu, var = summed_stats(list(s.entries))
    assert s.variance() == var


def test_from_qubit():
    s = from_qubit(make_state(17, 13, 5))
    assert s.offset == 5 and mean(s) == Fraction(9, 17)
    assert from_qubit(make_state(13, 13, 0)).entries == (1,) * 13
    for q in enumerate_grid(13):
        assert mean(from_qubit(q)) == q.cos_theta


def test_bit_string_equivalence_up_to_rotation():
    assert rotate(bit_string(17, 5), 3).equivalent(bit_string(17, 5))
    assert not bit_string(17, 5).equivalent(bit_string(17, 6))


def test_uncertainty_pole_equality():
    r = uncertainty_product(make_state(17, 17, 0))
    assert r.lhs == r.rhs == mpmath.mpf(1) / 4
    assert r.holds and r.tight
    r = uncertainty_product(make_state(17, 0, 3))
    assert abs(r.lhs - mpmath.mpf(1) / 4) < 1e-40 and abs(r.rhs - mpmath.mpf(1) / 4) < 1e-40


def test_uncertainty_near_equator_strict():
    r = uncertainty_product(make_state(17, 8, 3))
    assert r.rhs < 0.02 and r.holds and not r.tight


def test_uncertainty_grid_p17():
    grid = list(enumerate_grid(17))
    assert len(grid) == 324
    for q in grid:
        r = uncertainty_product(q)
        assert r.holds
        # equality iff sin(theta) sin(2 phi) = 0: poles or phase 0 (p odd)
        analytic = q.m in (0, 17) or q.n in (0, 17)
        assert r.tight == analytic


def test_complementarity_examples():
    v = complementarity_check(Fraction(9, 17), Fraction(0), AngleTurns(Fraction(3, 17)), 17)
    assert isinstance(v, ProvablyIrrational)
    v = complementarity_check(Fraction(9, 17), Fraction(1, 3), AngleTurns(Fraction(1, 4)), 17)
    assert isinstance(v, ExceptionPossible)
    with pytest.raises(DegenerateTriangle):
        complementarity_check(Fraction(1), Fraction(0), AngleTurns(Fraction(3, 17)), 17)


def test_complementarity_random():
    import random

    from discrete_hilbert._numeric import reconstruct_rational

    rng = random.Random(500)
    for _ in range(500):
        p = rng.choice([13, 17, 101])
        c = Fraction(2 * rng.randint(1, p - 1), p) - 1
        d = rng.randint(2, 200)
        sep = Fraction(rng.randint(-d + 1, d - 1), d)
        v = complementarity_check(c, sep, AngleTurns(Fraction(rng.randint(1, p - 1), p)), p)
        assert isinstance(v, ProvablyIrrational)
        assert reconstruct_rational(v.numeric_cos_ab, 10**6) is None
