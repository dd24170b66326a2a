"""The singular-limit sweep and its delimited output formats.

For each p the sweep reports how far the lattice CHSH value sits from the
Tsirelson bound, the worst correlation error, and the share of look-up-table
cells that are undefined. The first two shrink like 1/p; the last does not
move.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Iterable, Sequence

from . import chsh
from ._numeric import MP
from .errors import InvariantBreach
from .exact import format_rational, parse_rational, validate_param


@dataclass(frozen=True)
class SweepRow:
    p: int
    s_value_abs: float
    s_error: float
    undefined_cell_fraction: Fraction
    correlation_max_error: float


FIELDS = tuple(f.name for f in fields(SweepRow))


def sweep_row(p: int, trials: int, seed=0) -> SweepRow:
    validate_param(p)
    s = chsh.chsh_s_value(p)
    table = chsh.LookupTable()
    worst = Fraction(0)
    for trial in chsh.run_trials(p, trials, seed):
        table.append(trial.column)
        g = trial.geometry
        worst = max(worst, abs(g.cos_actual_pair - Fraction(g.precise_cos_actual)))
    a0, a1, b0, b1 = chsh.OPTIMAL_ANGLES
    for a, b in ((a0, b0), (a0, b1), (a1, b0), (a1, b1)):
        target = MP.cos(a - b)
        err = abs(chsh.singlet_correlation(p, target) + target)
        worst = max(worst, Fraction(float(err)))
    return SweepRow(
        p=p,
        s_value_abs=float(abs(s)),
        s_error=float(chsh.s_error(s)),
        undefined_cell_fraction=table.undefined_fraction(),
        correlation_max_error=float(worst),
    )


def run_sweep(p_list: Sequence[int], trials: int, seed=0) -> list[SweepRow]:
    return [sweep_row(p, trials, seed) for p in p_list]


def check_sweep(rows: Sequence[SweepRow]) -> None:
    """Raise InvariantBreach unless the rows show the singular-limit signature."""
    for row in rows:
        if row.undefined_cell_fraction != Fraction(1, 4):
            raise InvariantBreach(f"p={row.p}: undefined fraction {row.undefined_cell_fraction} != 1/4")
        if row.correlation_max_error > 1 / row.p:
            raise InvariantBreach(f"p={row.p}: correlation error {row.correlation_max_error} > 1/p")
        if row.s_error > 4 / row.p:
            raise InvariantBreach(f"p={row.p}: |S| misses 2*sqrt(2) by {row.s_error} > 4/p")
    pairs = list(zip(rows, rows[1:]))
    if all(a.p < b.p for a, b in pairs):
        for a, b in pairs:
            if not b.correlation_max_error < a.correlation_max_error:
                raise InvariantBreach(f"correlation error not decreasing from p={a.p} to p={b.p}")


def _encode(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for row in rows:
        writer.writerow([_encode(getattr(row, name)) for name in FIELDS])
    return buf.getvalue()


def to_json(rows: Iterable[SweepRow]) -> str:
    objs = []
    for row in rows:
        d = asdict(row)
        d["undefined_cell_fraction"] = format_rational(row.undefined_cell_fraction)
        objs.append(json.dumps(d))
    return "[\n" + ",\n".join(objs) + "\n]\n"


def _decode(d: dict) -> SweepRow:
    return SweepRow(
        p=int(d["p"]),
        s_value_abs=float(d["s_value_abs"]),
        s_error=float(d["s_error"]),
        undefined_cell_fraction=parse_rational(str(d["undefined_cell_fraction"])),
        correlation_max_error=float(d["correlation_max_error"]),
    )


def from_csv(text: str) -> list[SweepRow]:
    return [_decode(d) for d in csv.DictReader(io.StringIO(text))]


def from_json(text: str) -> list[SweepRow]:
    return [_decode(d) for d in json.loads(text)]
