"""Command line interface.

Exit codes: 0 success, 1 internal consistency failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import ar_quiver, coxeter, derived, oracle
from .dynkin import classify_dynkin
from .errors import (
    ArquiverError,
    BoundExceededError,
    InvalidQuiverError,
    NotATreeError,
    NotDynkinError,
    ParseError,
    PositionOutOfRangeError,
)
from .hammock import hammock_vertices
from .quiver import ValuedQuiver
from .report import build_report, parse_quiver, report_to_json, to_dot

_INPUT_ERRORS = (
    ParseError,
    InvalidQuiverError,
    NotATreeError,
    NotDynkinError,
    BoundExceededError,
    PositionOutOfRangeError,
)


def _load(path: str) -> ValuedQuiver:
    return parse_quiver(Path(path).read_text(encoding="utf-8"))


def _fmt_vertex(v) -> str:
    return f"({v.level},{v.base})"


def cmd_classify(args: argparse.Namespace) -> int:
    q = _load(args.file)
    dyn = classify_dynkin(q.underlying_graph())
    if dyn is None:
        print("NotDynkin")
        return 2
    relabel = " ".join(f"{v}->{dyn.to_canonical(v)}" for v in q.vertices())
    print(f"{dyn.family} {dyn.rank}")
    print(f"relabel: {relabel}")
    return 0


def cmd_build(args: argparse.Namespace) -> int:
    arq = ar_quiver.build(_load(args.file))
    cd = coxeter.coxeter_matrix(arq)
    report = build_report(arq, cd.order, include_hammocks=args.hammocks)
    text = report_to_json(report)
    if args.json:
        Path(args.json).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.dot:
        Path(args.dot).write_text(to_dot(arq), encoding="utf-8")
    return 0


def cmd_hammock(args: argparse.Namespace) -> int:
    arq = ar_quiver.build(_load(args.file))
    if not 1 <= args.k <= arq.n:
        raise PositionOutOfRangeError(f"vertex {args.k} is not in 1..{arq.n}")
    res = arq.hammocks[args.k - 1]
    print(f"k = {args.k}")
    for v in sorted(res.table):
        print(f"h{_fmt_vertex(v)} = {res.table[v]}")
    print(f"terminator: {_fmt_vertex(res.terminator)}")
    print(f"m({res.orbit}) = {res.orbit_index}")
    print(f"rho({res.orbit}) = {res.k}")
    members = " ".join(_fmt_vertex(v) for v in sorted(hammock_vertices(res)))
    print(f"hammock vertices: {members}")
    return 0


def cmd_coxeter(args: argparse.Namespace) -> int:
    arq = ar_quiver.build(_load(args.file))
    cd = coxeter.coxeter_matrix(arq)
    print("matrix:")
    for row in cd.matrix:
        print("  " + " ".join(f"{x:3d}" for x in row))
    print(f"order: {cd.order}")
    ok = coxeter.order_identity_check(arq, cd)
    print(f"order identity: {'ok' if ok else 'FAILED'}")
    return 0 if ok else 1


def cmd_cluster(args: argparse.Namespace) -> int:
    arq = ar_quiver.build(_load(args.file))
    cd = coxeter.coxeter_matrix(arq)
    print(f"cluster objects: {derived.cluster_count(arq, cd.order)}")
    print(
        "nilpotency: module={0} derived={1} cluster={2}".format(
            cd.order - 1, derived.derived_nilpotency(arq, cd.order), cd.order - 1
        )
    )
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    arq = ar_quiver.build(_load(args.file))
    cd = coxeter.coxeter_matrix(arq)
    report = oracle.run_all(arq, cd.order)
    report.add("order-identity", coxeter.order_identity_check(arq, cd))
    for check in report.checks:
        print(check.line())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arquiver",
        description=(
            "Construct the Auslander-Reiten quiver of a Dynkin-type "
            "hereditary algebra from its ext-quiver."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="recognise the Dynkin type")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("build", help="full construction, JSON report, DOT export")
    p.add_argument("file")
    p.add_argument("--json", metavar="OUT", help="write the report to a file")
    p.add_argument("--dot", metavar="OUT", help="write a DOT drawing to a file")
    p.add_argument("--hammocks", action="store_true", help="include hammock tables")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("hammock", help="hammock of one simple module")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True, metavar="VERTEX")
    p.set_defaults(func=cmd_hammock)

    p = sub.add_parser("coxeter", help="Coxeter matrix, order, identity check")
    p.add_argument("file")
    p.set_defaults(func=cmd_coxeter)

    p = sub.add_parser("cluster", help="cluster-category count and nilpotencies")
    p.add_argument("file")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("check", help="run all independent oracle checks")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArquiverError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
