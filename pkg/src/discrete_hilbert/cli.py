"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 invalid parameter, 4 invariant
breach (a property the model guarantees failed to hold).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from . import bloch, chsh, ensemble, exact, invariant_sim, padic, spherical, sweep
from ._numeric import MP
from .errors import (
    DegenerateTriangle,
    GeometryError,
    InadmissibleConfiguration,
    InvalidParameter,
    InvariantBreach,
)
from .mach_zehnder import (
    MZConfig,
    RationalCosine,
    RationalTurns,
    admissible,
    interferometer_probabilities,
    statistical_independence_check,
)

EXIT_OK, EXIT_USAGE, EXIT_PARAM, EXIT_BREACH = 0, 2, 3, 4
NUMERIC_DIGITS = 50


def _rational(text: str) -> Fraction:
    try:
        return exact.parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None


def _angles(text: str):
    if text == "optimal":
        return chsh.OPTIMAL_ANGLES
    try:
        values = [MP.mpf(v) for v in text.split(",")]
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"expected 'optimal' or four radians: {text!r}") from None
    if len(values) != 4:
        raise argparse.ArgumentTypeError("need four angles: a0,a1,b0,b1")
    return tuple(values)


def _num(x) -> str:
    return MP.nstr(x, NUMERIC_DIGITS)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _rows_out(rows: list[dict], fmt: str) -> str:
    """Serialise a list of flat dicts as CSV (header row) or JSON."""
    if fmt == "json":
        return "[\n" + ",\n".join(json.dumps(r) for r in rows) + "\n]\n"
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


# -- handlers: each returns the text to emit ---------------------------------

def cmd_niven_classify(args) -> str:
    angle = exact.AngleTurns(args.turns)
    value = exact.cos_exact(angle)
    if isinstance(value, Fraction):
        return f"rational {exact.format_rational(value)}\n"
    return f"irrational {_num(value.approx)}\n"


def cmd_triangle_check(args) -> str:
    t = spherical.SphericalTriangle(args.cos_ac, args.cos_bc, exact.AngleTurns(args.turns))
    verdict = spherical.classify_third_side(t, args.p)
    if isinstance(verdict, spherical.ProvablyIrrational):
        return f"provably-irrational cos_AB={_num(verdict.numeric_cos_ab)}\n"
    return f"exception-possible ({verdict.reason}) cos_AB={_num(verdict.numeric_cos_ab)}\n"


def _phase(args):
    if (args.turns is None) == (args.cos is None):
        raise InvalidParameter("give exactly one of --turns or --cos")
    try:
        if args.turns is not None:
            return RationalTurns(exact.AngleTurns(args.turns))
        return RationalCosine(args.cos)
    except ValueError as exc:
        raise InvalidParameter(str(exc)) from None


def cmd_mz_admissible(args) -> str:
    phase = _phase(args)
    lines = [f"{c.name.lower().replace('_', '-')} {_bool(admissible(phase, c))}" for c in MZConfig]
    if isinstance(phase, RationalCosine):
        pa, pb = interferometer_probabilities(phase)
        lines.append(f"P(A)={exact.format_rational(pa)} P(B)={exact.format_rational(pb)}")
    return "\n".join(lines) + "\n"


def cmd_mz_si_check(args) -> str:
    config = MZConfig.INTERFEROMETRIC if args.config == "interferometric" else MZConfig.WHICH_WAY
    r = statistical_independence_check(_phase(args), config)
    return (
        f"rho_given_x={r.rho_given_x} rho_given_x_prime={r.rho_given_x_prime} "
        f"violates_si={_bool(r.violates_si)}\n"
    )


def cmd_chsh_table(args) -> str:
    table = chsh.build_table(args.p, args.trials, args.seed)
    return (
        table.render()
        + f"\ncompletable_fraction={exact.format_rational(table.completable_fraction())}"
        + f" undefined_cell_fraction={exact.format_rational(table.undefined_fraction())}\n"
    )


def cmd_chsh_svalue(args) -> str:
    exact.validate_param(args.p)
    s = chsh.chsh_s_value(args.p, args.angles)
    err = chsh.s_error(s)
    bound = Fraction(4, args.p)
    out = f"S={exact.format_rational(s)} |S|={repr(float(abs(s)))} s_error={repr(float(err))}"
    if args.angles is chsh.OPTIMAL_ANGLES:
        within = err <= MP.mpf(bound.numerator) / bound.denominator
        if not within or abs(s) <= 2:
            raise InvariantBreach(f"|S| = {float(abs(s))} misses the Tsirelson band at p = {args.p}")
        out += f" bound=4/{args.p} within_bound={_bool(within)} bell_violation={_bool(abs(s) > 2)}"
    return out + "\n"


def cmd_chsh_scan(args) -> str:
    frac = chsh.completability_scan(args.p, args.trials, args.seed)
    if frac != 0:
        raise InvariantBreach(f"{frac} of columns were completable at p = {args.p}")
    return _rows_out(
        [{"p": args.p, "trials": args.trials, "seed": args.seed,
          "completable_fraction": exact.format_rational(frac)}],
        args.format,
    )


def cmd_padic_dist(args) -> str:
    a = padic.PAdicLabel(args.p, args.a)
    b = padic.PAdicLabel(args.p, args.b)
    return f"{exact.format_rational(padic.label_distance(a, b))}\n"


def cmd_padic_demo(args) -> str:
    rng = random.Random(args.seed)
    exact.validate_param(args.p)
    label = padic.PAdicLabel(args.p, [rng.randrange(args.p) for _ in range(args.depth)])
    report = padic.fine_tuning_demo(padic.on_set(label), args.epsilon)
    if not report.within_epsilon or report.ratio < args.p / args.epsilon:
        raise InvariantBreach("fine-tuning demo failed its bounds")
    return (
        f"label={','.join(map(str, label.digits))} epsilon={repr(args.epsilon)} "
        f"euclidean_distance={repr(report.euclidean_distance)} "
        f"state_distance={exact.format_rational(report.state_distance)} ratio={repr(report.ratio)}\n"
    )


def cmd_ensemble_stats(args) -> str:
    q = bloch.make_state(args.p, args.m, args.n)
    s = ensemble.from_qubit(q)
    mean, var = ensemble.mean(s), ensemble.variance(s)
    born = invariant_sim.born_frequencies(invariant_sim.helix_ensemble(args.p, args.m, args.n))
    scaled = ensemble.ScaledBitString(s)
    return (
        f"mean={exact.format_rational(mean)} variance={exact.format_rational(var)} "
        f"cos_theta={exact.format_rational(q.cos_theta)} born_plus={exact.format_rational(born)} "
        f"scaled_mean={exact.format_rational(scaled.mean())} "
        f"scaled_variance={exact.format_rational(scaled.variance())}\n"
    )


def cmd_uncertainty_scan(args) -> str:
    states = list(bloch.enumerate_grid(args.p))
    checks = [ensemble.uncertainty_product(q) for q in states]
    rows = [
        {"m": q.m, "n": q.n, "lhs": repr(float(c.lhs)), "rhs": repr(float(c.rhs)),
         "holds": _bool(c.holds), "tight": _bool(c.tight)}
        for q, c in zip(states, checks)
    ]
    if args.figure:
        from . import plotting

        plotting.uncertainty_figure(states, checks, args.figure)
    failed = [r for r in rows if r["holds"] == "false"]
    if failed:
        raise InvariantBreach(f"uncertainty inequality fails at {len(failed)} states")
    return _rows_out(rows, args.format)


def cmd_sweep(args) -> str:
    rows = sweep.run_sweep(args.p_list, args.trials, args.seed)
    if args.figure:
        from . import plotting

        plotting.sweep_figure(rows, args.figure)
    sweep.check_sweep(rows)
    return sweep.to_json(rows) if args.format == "json" else sweep.to_csv(rows)


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dhs", description=__doc__.splitlines()[0])
    parser.add_argument("--out", help="write output to this file instead of stdout")
    groups = parser.add_subparsers(dest="group", required=True)

    def sub(group_name, name, handler, help_text):
        if group_name not in subs:
            g = groups.add_parser(group_name, help=f"{group_name} commands")
            subs[group_name] = g.add_subparsers(dest="command", required=True)
        sp = subs[group_name].add_parser(name, help=help_text)
        sp.set_defaults(handler=handler)
        sp.add_argument("--out", help=argparse.SUPPRESS, default=argparse.SUPPRESS)
        return sp

    subs: dict = {}

    sp = sub("niven", "classify", cmd_niven_classify, "classify cos(2*pi*turns)")
    sp.add_argument("--turns", type=_rational, required=True)

    sp = sub("triangle", "check", cmd_triangle_check, "impossible-triangle verdict for side AB")
    sp.add_argument("--cos-ac", type=_rational, required=True)
    sp.add_argument("--cos-bc", type=_rational, required=True)
    sp.add_argument("--turns", type=_rational, required=True, help="vertex angle at C in turns")
    sp.add_argument("--p", type=int, required=True)

    for name, handler in (("admissible", cmd_mz_admissible), ("si-check", cmd_mz_si_check)):
        sp = sub("mz", name, handler, f"Mach-Zehnder {name}")
        sp.add_argument("--turns", type=_rational)
        sp.add_argument("--cos", type=_rational)
        if name == "si-check":
            sp.add_argument("--config", choices=("interferometric", "which-way"), required=True)

    sp = sub("chsh", "table", cmd_chsh_table, "render a seeded look-up table")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--trials", type=int, default=8)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub("chsh", "svalue", cmd_chsh_svalue, "lattice CHSH value")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--angles", type=_angles, default=chsh.OPTIMAL_ANGLES)

    sp = sub("chsh", "scan", cmd_chsh_scan, "fraction of completable look-up-table columns")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")

    sp = sub("padic", "dist", cmd_padic_dist, "distance between two digit labels")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a", type=_int_list, required=True)
    sp.add_argument("--b", type=_int_list, required=True)

    sp = sub("padic", "demo", cmd_padic_demo, "Euclidean versus state-space distance")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--epsilon", type=float, default=1e-6)
    sp.add_argument("--depth", type=int, default=padic.DEFAULT_DEPTH)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub("ensemble", "stats", cmd_ensemble_stats, "bit-string statistics of a grid state")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, default=0)

    sp = sub("uncertainty", "scan", cmd_uncertainty_scan, "uncertainty inequality over the grid")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--figure", help="also render a figure to this path")

    sweep_p = groups.add_parser("sweep", help="singular-limit sweep over p")
    sweep_p.set_defaults(handler=cmd_sweep)
    sweep_p.add_argument("--p-list", type=_int_list, default=[17, 101, 1009, 10007])
    sweep_p.add_argument("--trials", type=int, default=1000)
    sweep_p.add_argument("--seed", type=int, default=0)
    sweep_p.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep_p.add_argument("--figure", help="also render a figure to this path")
    sweep_p.add_argument("--out", help=argparse.SUPPRESS, default=argparse.SUPPRESS)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.handler(args)
    except InvariantBreach as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except (InvalidParameter, DegenerateTriangle, GeometryError, InadmissibleConfiguration, ValueError) as exc:
        print(f"invalid parameter: {exc}", file=sys.stderr)
        return EXIT_PARAM
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
