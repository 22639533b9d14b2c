"""Command-line front end.

Three subcommands:

    eigen   --n-max K                      spectrum table (n, q0, energy)
    table   --n N --m M --grid a:b:k[:log] wavefunction slice at a fixed angle
    verify  SUITE                          run named verification suites

Exit codes are a stable contract: 0 means success (all checks passed for
``verify``), 1 means a verification failure, 2 means a usage error.  Output
is CSV (header row, LF endings, round-trip float formatting via repr) or
JSON; identical invocations produce byte-identical bytes unless ``--stamp``
is passed to ``verify``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from datetime import datetime, timezone
from typing import Iterable, List, Optional, Sequence

from .momentum import MomentumPoint, psi_momentum
from .position import PolarPoint, QuantumNumbers, make_bound_state, psi_position
from .reporting import GridSpec
from .verify import SUITE_ORDER, run_suite


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_field(value: object) -> str:
    if isinstance(value, float):
        return repr(value)
    text = str(value)
    if any(ch in text for ch in ",\"\n"):
        text = '"' + text.replace('"', '""') + '"'
    return text


def _csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_csv_field(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json(payload: object) -> str:
    return json.dumps(payload, indent=2) + "\n"


def cmd_eigen(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.n_max < 0 or args.n_max > 50:
        parser.error("--n-max must lie in [0, 50]")
    states = [make_bound_state(QuantumNumbers(n, 0)) for n in range(args.n_max + 1)]
    if args.format == "csv":
        text = _csv(("n", "q0", "energy"),
                    ((st.qn.n, st.q0, st.energy) for st in states))
    else:
        text = _json([{"n": st.qn.n, "q0": st.q0, "energy": st.energy}
                      for st in states])
    _emit(text, args.out)
    return 0


def cmd_table(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        grid = GridSpec.parse(args.grid)
        qn = QuantumNumbers(args.n, args.m)
    except ValueError as exc:
        parser.error(str(exc))
    if args.mesh is not None and args.mesh < 2:
        parser.error("--mesh needs at least 2 angles")
    if args.mesh is None:
        angles = [args.angle]
    else:
        angles = [2.0 * math.pi * k / args.mesh for k in range(args.mesh)]

    rows: List[Sequence[object]] = []
    try:
        for coord in grid.values():
            for angle in angles:
                if args.space == "position":
                    val = psi_position(qn, PolarPoint(float(coord), angle))
                else:
                    val = psi_momentum(qn, MomentumPoint(float(coord), angle))
                row = [float(coord), val.real, val.imag, abs(val) ** 2]
                if args.mesh is not None:
                    row.insert(1, angle)
                rows.append(row)
    except ValueError as exc:
        parser.error(str(exc))

    header = ["coordinate", "re", "im", "abs2"]
    keys = ["coordinate", "re", "im", "abs2"]
    if args.mesh is not None:
        header.insert(1, "angle")
        keys.insert(1, "angle")
    if args.format == "csv":
        text = _csv(header, rows)
    else:
        text = _json([dict(zip(keys, row)) for row in rows])
    _emit(text, args.out)
    return 0


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.n_max is not None and not 0 <= args.n_max <= 10:
        parser.error("--n-max must lie in [0, 10]")
    if args.tol is not None and args.tol <= 0.0:
        parser.error("--tol must be positive")
    reports = run_suite(args.suite, args.n_max, args.tol)
    dicts = [r.to_dict() for r in reports]
    if args.stamp:
        stamp = datetime.now(timezone.utc).isoformat()
        for d in dicts:
            d["generated_at"] = stamp
    if args.format == "csv":
        keys = list(dicts[0].keys())
        text = _csv(keys, ([d[k] for k in keys] for d in dicts))
    else:
        text = _json(dicts)
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hydro2d",
        description="Bound states of the two-dimensional hydrogen atom: "
                    "spectrum, wavefunction tables, and verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    eigen = sub.add_parser("eigen", help="emit the bound-state spectrum")
    eigen.add_argument("--n-max", type=int, required=True,
                       help="largest principal quantum number (0..50)")
    eigen.add_argument("--format", choices=("csv", "json"), default="csv")
    eigen.add_argument("--out", default=None, help="write to file instead of stdout")
    eigen.set_defaults(func=cmd_eigen)

    table = sub.add_parser("table", help="tabulate a wavefunction slice")
    table.add_argument("--space", choices=("position", "momentum"),
                       default="position")
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--m", type=int, required=True)
    table.add_argument("--grid", required=True, metavar="MIN:MAX:POINTS[:log]",
                       help="radial grid as min:max:points, optionally :log")
    table.add_argument("--angle", type=float, default=0.0,
                       help="fixed azimuth of the slice (radians)")
    table.add_argument("--mesh", type=int, default=None, metavar="K",
                       help="emit the outer product with K equally spaced "
                            "azimuths instead of a single-angle slice")
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.add_argument("--out", default=None)
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("suite", choices=SUITE_ORDER + ("all",))
    verify.add_argument("--n-max", type=int, default=None,
                        help="cap quantum numbers (default: per-check caps)")
    verify.add_argument("--tol", type=float, default=None,
                        help="override every tolerance in the suite")
    verify.add_argument("--format", choices=("csv", "json"), default="json")
    verify.add_argument("--out", default=None)
    verify.add_argument("--stamp", action="store_true",
                        help="add a UTC timestamp to each report")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
