"""Command-line front end.

Exit codes: 0 success, 2 unreadable input, 3 unsupported case,
4 input data that violates an invariant.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import berezin, io
from .errors import DataInvariantError, UnsupportedCaseError
from .lam import GData, lambda_from_z, verify_consum
from .lmo import z_lmo
from .rw import euler_hilb, euler_kummer, z_rw

EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_INVARIANT = 0, 2, 3, 4


def _emit(args, table: str, machine) -> None:
    if args.format == "machine":
        print(json.dumps(machine, sort_keys=True, ensure_ascii=False))
    else:
        print(table)


def cmd_lmo(args) -> None:
    d = io.load_manifold(args.manifold)
    series = z_lmo(d, args.order)
    machine = {"manifold": d.name, "order": args.order, "terms": {str(k): str(v) for k, v in series.coeffs.items()}}
    _emit(args, series.render(), machine)


def cmd_rw(args) -> None:
    d = io.load_manifold(args.manifold)
    x = io.load_space(args.space)
    value = z_rw(d, x, torsion_factor=args.torsion_factor)
    _emit(args, str(value), {"manifold": d.name, "space": x.name, "value": str(value)})


def cmd_hilb(args) -> None:
    if args.max < 0:
        raise DataInvariantError("--max must be non-negative")
    rows = []
    for n in range(args.max + 1):
        rows.append((n, euler_hilb(n), euler_kummer(n) if n >= 1 else None))
    lines = ["n\te(S^[n])\te(K_n)"]
    lines += [f"{n}\t{h}\t{'-' if k is None else k}" for n, h, k in rows]
    machine = [{"n": n, "hilb": h, "kummer": k} for n, h, k in rows]
    _emit(args, "\n".join(lines), machine)


def cmd_lambda(args) -> None:
    z = io.load_vector(args.z_file)
    g_values = io.load_vector(args.g_file)
    try:
        g = GData(tuple(g_values))
    except ValueError as exc:
        raise DataInvariantError(str(exc)) from exc
    if len(z) != len(g.g):
        raise io.InputParseError(f"z has {len(z)} entries but g has {len(g.g)}")
    lam = lambda_from_z(z, g)
    values = [io.format_value(v) for v in lam.values]
    table = "\n".join(f"lambda^{k} = {v}" for k, v in enumerate(values))
    _emit(args, table, {"lambda": values})


def cmd_pfaffian(args) -> None:
    a = io.load_matrix(args.matrix)
    if a.size % 2:
        raise DataInvariantError(f"Pfaffian needs an even-size matrix, got {a.size}")
    value = berezin.pfaffian(a, args.method)
    _emit(args, str(value), {"method": args.method, "value": str(value)})


def cmd_consum(args) -> None:
    try:
        report = verify_consum(args.n)
    except ValueError as exc:
        raise UnsupportedCaseError(str(exc)) from exc
    status = "identity verified" if report.holds else "identity FAILED"
    table = "\n".join(report.lines() + [status])
    machine = {
        "n": report.n,
        "holds": report.holds,
        "identities": [{"p": p, "lhs": str(l), "rhs": str(r)} for p, l, r in report.identities],
    }
    _emit(args, table, machine)
    if not report.holds:
        raise SystemExit(1)


def cmd_vertex(args) -> None:
    if args.n not in (1, 2):
        raise UnsupportedCaseError("vertex integrals are limited to n in {1, 2}")
    c = berezin.SyntheticCurvature.random(args.n, random.Random(args.seed))
    b3 = berezin.vertex_integral_b3(c, 1)
    b2 = berezin.vertex_integral_b2(c)
    table = f"b3 vertex integral: {b3}\nb2 vertex integral: {b2}\n" + ("equal" if b2 == b3 else "DIFFERENT")
    _emit(args, table, {"n": args.n, "seed": args.seed, "b3": str(b3), "b2": str(b2)})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qinv", description="Exact quantum 3-manifold invariants.")
    parser.add_argument("--format", choices=("table", "machine"), default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lmo", help="LMO series from classical data")
    p.add_argument("manifold")
    p.add_argument("--order", type=int, default=3)
    p.set_defaults(func=cmd_lmo)

    p = sub.add_parser("rw", help="Rozansky-Witten invariant")
    p.add_argument("manifold")
    p.add_argument("space")
    p.add_argument("--torsion-factor", action="store_true", help="allow b1 = 1 with torsion, scaling by tor^n")
    p.set_defaults(func=cmd_rw)

    p = sub.add_parser("hilb", help="Euler numbers of Hilbert schemes of K3 and generalized Kummers")
    p.add_argument("--max", type=int, default=7)
    p.set_defaults(func=cmd_hilb)

    p = sub.add_parser("lambda", help="lambda^k from Z-values and S^3 data")
    p.add_argument("z_file")
    p.add_argument("g_file")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("pfaffian", help="Pfaffian of an antisymmetric matrix")
    p.add_argument("matrix")
    p.add_argument("--method", choices=("berezin", "combinatorial"), default="berezin")
    p.set_defaults(func=cmd_pfaffian)

    p = sub.add_parser("consum", help="check the connected-sum law symbolically")
    p.add_argument("--n", type=int, default=2)
    p.set_defaults(func=cmd_consum)

    p = sub.add_parser("vertex", help="zero-mode vertex integrals for random curvature")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_vertex)

    # --format is accepted before or after the subcommand
    for name, action in sub.choices.items():
        action.add_argument("--format", choices=("table", "machine"), default=argparse.SUPPRESS)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except io.InputParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedCaseError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except DataInvariantError as exc:
        print(f"invalid data: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
