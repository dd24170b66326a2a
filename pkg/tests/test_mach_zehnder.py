import random
from fractions import Fraction

import pytest

from discrete_hilbert.errors import InadmissibleConfiguration, InvalidParameter, InvariantBreach
from discrete_hilbert.exact import AngleTurns
from discrete_hilbert.mach_zehnder import (
    MZConfig,
    RationalCosine,
    RationalTurns,
    SIRecord,
    admissible,
    interferometer_probabilities,
    sample_phase,
    statistical_independence_check,
    support_record,
)

WW, INT = MZConfig.WHICH_WAY, MZConfig.INTERFEROMETRIC
T317 = RationalTurns(AngleTurns(Fraction(3, 17)))
C13 = RationalCosine(Fraction(1, 3))


def test_admissible_examples():
    assert admissible(T317, WW)
    assert not admissible(T317, INT)
    assert admissible(C13, INT)
    assert not admissible(C13, WW)


def test_phase_validation():
    with pytest.raises(ValueError):
        RationalTurns(AngleTurns(0))
    with pytest.raises(InvalidParameter):
        RationalTurns(AngleTurns(Fraction(1, 6)))
    for c in (0, Fraction(1, 2), Fraction(-1, 2), 1, -1):
        with pytest.raises(ValueError):
            RationalCosine(Fraction(c))
    with pytest.raises(ValueError):
        RationalCosine(Fraction(3, 2))


def test_interferometer_probabilities():
    assert interferometer_probabilities(C13) == (Fraction(2, 3), Fraction(1, 3))
    assert interferometer_probabilities(RationalCosine(Fraction(49, 50))) == (Fraction(99, 100), Fraction(1, 100))
    with pytest.raises(InadmissibleConfiguration, match="inadmissible configuration"):
        interferometer_probabilities(T317)


def test_si_examples():
    assert statistical_independence_check(T317, WW) == SIRecord(1, 0, True)
    assert statistical_independence_check(C13, INT) == SIRecord(1, 0, True)
    assert statistical_independence_check(T317, INT) == SIRecord(0, 1, True)


def test_support_on_both_is_a_breach():
    with pytest.raises(InvariantBreach):
        support_record(1, 1)


@pytest.mark.parametrize("variant", [RationalTurns, RationalCosine])
def test_exclusivity_and_si_over_samples(variant):
    rng = random.Random(f"mz:{variant.__name__}")
    for _ in range(1000):
        phase = sample_phase(rng, variant)
        assert admissible(phase, WW) != admissible(phase, INT)
        for x in MZConfig:
            assert statistical_independence_check(phase, x).violates_si
        if variant is RationalCosine:
            a, b = interferometer_probabilities(phase)
            assert a + b == 1 and 0 <= a <= 1
