"""Nested-helix ensembles: trajectories labelled by the cluster they reach.

Each trajectory segment is a helix of p strands. At the top level the
hidden variable lambda is the strand index; strand lambda ends in cluster
+1 exactly when it sits in the +1 block of the rotated bit string, i.e.
(lambda - n) mod p < m. Cluster dynamics are not simulated, only this
end-state labelling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exact import validate_param
from .padic import DEFAULT_DEPTH, PAdicLabel

MAX_DEPTH = DEFAULT_DEPTH


@dataclass(frozen=True)
class HelixEnsemble:
    """``levels[k] = (m_k, n_k)`` is the (count, rotation) labelling at level k."""

    p: int
    levels: tuple[tuple[int, int], ...]

    def __post_init__(self):
        validate_param(self.p)
        object.__setattr__(self, "levels", tuple((int(m), int(n) % self.p) for m, n in self.levels))
        if not 1 <= len(self.levels) <= MAX_DEPTH:
            raise ValueError(f"depth must lie in [1, {MAX_DEPTH}]")
        for m, _ in self.levels:
            if not 0 <= m <= self.p:
                raise ValueError(f"m must lie in [0, {self.p}], got {m}")

    @property
    def depth(self) -> int:
        return len(self.levels)

    @property
    def m(self) -> int:
        return self.levels[0][0]

    @property
    def n(self) -> int:
        return self.levels[0][1]

    @property
    def trajectory_count(self) -> int:
        return self.p**self.depth

    def labels(self) -> Iterator[PAdicLabel]:
        """All p^depth trajectory labels, lazily, in lexicographic order."""
        for digits in itertools.product(range(self.p), repeat=self.depth):
            yield PAdicLabel(self.p, digits)

    def outcomes(self, label: PAdicLabel) -> tuple[int, ...]:
        """Cluster reached at each fractal level along a trajectory."""
        if label.p != self.p or label.depth != self.depth:
            raise ValueError("label does not belong to this ensemble")
        return tuple(_cluster(self.p, m, n, d) for (m, n), d in zip(self.levels, label.digits))


def helix_ensemble(p: int, m: int, n: int = 0) -> HelixEnsemble:
    return HelixEnsemble(p, ((m, n),))


def _cluster(p: int, m: int, n: int, index: int) -> int:
    return 1 if (index - n) % p < m else -1


def assign_cluster(ensemble: HelixEnsemble, lambda_index: int) -> int:
    """Top-level cluster (+1 or -1) reached by strand ``lambda_index``."""
    if not 0 <= lambda_index < ensemble.p:
        raise ValueError(f"lambda must lie in [0, {ensemble.p - 1}], got {lambda_index}")
    return _cluster(ensemble.p, ensemble.m, ensemble.n, lambda_index)


def born_frequencies(ensemble: HelixEnsemble) -> Fraction:
    """Fraction of +1 outcomes over every lambda; equals m/p exactly."""
    plus = sum(assign_cluster(ensemble, lam) == 1 for lam in range(ensemble.p))
    return Fraction(plus, ensemble.p)


def refine(ensemble: HelixEnsemble, sub_m: int, rotation: int = 0) -> HelixEnsemble:
    """Split every strand into a further helix of p strands, one level deeper."""
    if ensemble.depth >= MAX_DEPTH:
        raise ValueError(f"depth cap {MAX_DEPTH} reached")
    return HelixEnsemble(ensemble.p, ensemble.levels + ((sub_m, rotation),))
