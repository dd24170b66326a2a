from fractions import Fraction

import pytest

from discrete_hilbert.bloch import born_probabilities, enumerate_grid
from discrete_hilbert.ensemble import bit_string, rotate
from discrete_hilbert.invariant_sim import (
    MAX_DEPTH,
    assign_cluster,
    born_frequencies,
    helix_ensemble,
    refine,
)
from discrete_hilbert.padic import label_distance


def test_assign_cluster_examples():
    e = helix_ensemble(17, 13, 0)
    assert assign_cluster(e, 0) == 1
    assert assign_cluster(e, 16) == -1
    assert all(assign_cluster(helix_ensemble(17, 17, 4), lam) == 1 for lam in range(17))
    with pytest.raises(ValueError):
        assign_cluster(e, 17)


def test_agrees_with_bit_strings_exhaustively():
    p = 13
    count = 0
    for m in range(p + 1):
        for n in range(p):
            e = helix_ensemble(p, m, n)
            s = rotate(bit_string(p, m), n)
            assert [assign_cluster(e, lam) for lam in range(p)] == list(s.entries)
            count += 1
    assert count == 14 * 13


def test_born_frequencies():
    assert born_frequencies(helix_ensemble(17, 13, 5)) == Fraction(13, 17)
    assert born_frequencies(helix_ensemble(13, 0, 2)) == 0
    for q in enumerate_grid(13):
        assert born_frequencies(helix_ensemble(13, q.m, q.n)) == born_probabilities(q)[0]


def test_refine_structure():
    e = helix_ensemble(13, 5, 2)
    r = refine(e, 7, 3)
    assert r.depth == 2 and r.trajectory_count == 169
    labels = list(r.labels())
    assert len(labels) == 169 and all(lab.depth == 2 for lab in labels)
    rr = refine(r, 1)
    deep = {lab.digits for lab in rr.labels()}
    for lab in labels:
        assert lab.extend(0).digits in deep
        assert lab.extend(0).digits[:2] == lab.digits


def test_refinement_sibling_distance():
    e = refine(helix_ensemble(17, 3), 4)
    a, b = next(e.labels()), None
    for lab in e.labels():
        if lab.digits[:-1] == a.digits[:-1] and lab != a:
            b = lab
            break
    assert label_distance(a, b) == Fraction(1, 17**2)


def test_outcomes_follow_each_level():
    e = refine(helix_ensemble(13, 5, 0), 2, 1)
    lab = next(lab for lab in e.labels() if lab.digits == (4, 1))
    assert e.outcomes(lab) == (1, 1)
    lab = next(lab for lab in e.labels() if lab.digits == (5, 0))
    assert e.outcomes(lab) == (-1, -1)


def test_depth_cap():
    e = helix_ensemble(13, 1)
    for _ in range(MAX_DEPTH - 1):
        e = refine(e, 1)
    with pytest.raises(ValueError):
        refine(e, 1)
