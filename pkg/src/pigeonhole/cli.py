"""
Command-line front end.

    pigeonhole sweep --x-min 0 --x-max 5 --steps 51 --out sweep.csv
    pigeonhole weak-values
    pigeonhole min --convention eq9
    pigeonhole distribution --x 1.2
"""
from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from . import observables, oracle
from .errors import InvalidRange, PigeonholeError
from .pathspace import DiagonalProjector, plus_state, post_state, weak_value
from .profiles import Convention

CSV_COLUMNS = (
    "x",
    "p_lll_closed",
    "p_lll_gram",
    "p_int_linear",
    "p_int_quadratic",
    "expectation_u",
    "oracle_value",
    "oracle_err",
)


def _fmt(value) -> str:
    return "" if value is None else repr(float(value))


def sweep_grid(x_min: float, x_max: float, steps: int) -> np.ndarray:
    if not (0 <= x_min < x_max) or steps < 2:
        raise InvalidRange(f"need 0 <= x_min < x_max and steps >= 2, got ({x_min}, {x_max}, {steps})")
    return np.linspace(x_min, x_max, steps)


def write_sweep(path, records, header: dict) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        for key, value in header.items():
            fh.write(f"# {key}={value}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rec in records:
            writer.writerow([_fmt(getattr(rec, col)) for col in CSV_COLUMNS])


def read_sweep(path):
    """Parse a sweep CSV back into ``(header, rows)`` with floats (``None`` for empty cells)."""
    header, lines = {}, []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                header[key] = value
            else:
                lines.append(line)
    rows = [{k: (float(v) if v != "" else None) for k, v in row.items()} for row in csv.DictReader(lines)]
    return header, rows


def cmd_sweep(args) -> int:
    conv = Convention.parse(args.convention)
    xs = sweep_grid(args.x_min, args.x_max, args.steps)
    if args.oracle == "mc":
        def orc(x):
            return oracle.integrate_mc(x, conv, samples=args.samples, seed=args.seed)
    elif args.oracle == "quad":
        def orc(x):
            return oracle.integrate_quad(x, conv, order=args.order)
    else:
        orc = None
    records = observables.sweep(xs, conv, oracle=orc)
    header = {"convention": conv.value, "variant": args.variant, "oracle": args.oracle}
    if args.oracle == "mc":
        header.update(samples=args.samples, seed=args.seed)
    elif args.oracle == "quad":
        header["order"] = args.order
    write_sweep(args.out, records, header)
    return 0


def cmd_weak_values(args) -> int:
    pre, post = plus_state(), post_state((1, 1, 1))
    rows = [
        ("same_12", DiagonalProjector.same(0, 1)),
        ("same_13", DiagonalProjector.same(0, 2)),
        ("same_23", DiagonalProjector.same(1, 2)),
        ("same_123", DiagonalProjector.same(0, 1, 2)),
    ]
    for a1 in "LR":
        for a2 in "LR":
            rows.append((f"{a1}{a2}_12", DiagonalProjector.arms({0: a1, 1: a2})))
    out = sys.stdout
    out.write(f"{'projector':<10} {'weak value':>22}\n")
    for name, proj in rows:
        w = weak_value(proj, pre, post)
        # clean -0.0 so the table reads 0+0i
        re, im = w.real + 0.0, w.imag + 0.0
        re = 0.0 if abs(re) < 1e-15 else re
        im = 0.0 if abs(im) < 1e-15 else im
        out.write(f"{name:<10} {re:>+10.6g}{im:>+10.6g}i\n")
    out.write(f"post-selection probability {abs(post.inner(pre)) ** 2:.6g}\n")
    return 0


def cmd_min(args) -> int:
    conv = Convention.parse(args.convention)
    rep = observables.find_minimum(conv)
    x_ref = 2.0 * np.sqrt(np.log(5.0 / 3.0))
    if conv is Convention.EQ9:
        x_ref /= np.sqrt(2.0)
    p_ref = (1.0 - 0.6 ** 2.5) / 8.0
    sys.stdout.write(
        f"convention {conv.value}\n"
        f"x_star     {rep.x_star:.12f}   (analytic {x_ref:.12f})\n"
        f"p_star     {rep.p_star:.12f}   (analytic {p_ref:.12f})\n"
        f"iterations {rep.iterations}\n"
    )
    return 0


def cmd_distribution(args) -> int:
    conv = Convention.parse(args.convention)
    probs = observables.output_distribution(args.x, conv)
    sys.stdout.write(f"# convention={conv.value} x={args.x!r}\n")
    for signs, p in zip(observables.SIGN_PATTERNS, probs):
        label = "".join("+" if s > 0 else "-" for s in signs)
        sys.stdout.write(f"{label}  {p:.15g}\n")
    sys.stdout.write(f"sum  {probs.sum():.15g}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pigeonhole", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_convention(p):
        p.add_argument("--convention", choices=["eq7", "eq9"], default="eq7", type=str.lower)

    p = sub.add_parser("sweep", help="tabulate observables over a grid of x = a/sigma")
    p.add_argument("--x-min", type=float, default=0.0)
    p.add_argument("--x-max", type=float, default=5.0)
    p.add_argument("--steps", type=int, default=51)
    add_convention(p)
    p.add_argument("--variant", choices=["linear", "quadratic"], default="linear",
                   help="preferred witness variant, recorded in the header (both are written)")
    p.add_argument("--oracle", choices=["none", "mc", "quad"], default="none")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("weak-values", help="weak values of the same-path projectors")
    p.set_defaults(func=cmd_weak_values)

    p = sub.add_parser("min", help="locate the dip of the coincidence probability")
    add_convention(p)
    p.set_defaults(func=cmd_min)

    p = sub.add_parser("distribution", help="probabilities of all 8 detector patterns")
    p.add_argument("--x", type=float, required=True)
    add_convention(p)
    p.set_defaults(func=cmd_distribution)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PigeonholeError, OSError) as exc:
        sys.stderr.write(f"pigeonhole {args.command}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
