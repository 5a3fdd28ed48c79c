"""Command-line entry point ``boxcount``.

Exit codes: 0 success, 2 usage or incompatible class/box, 3 resource cap,
4 integrity failure (including a verification suite that does not pass).
JSON goes to stdout with compact separators; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import islice
from typing import Sequence

from .combinatorics import (
    BoxDims,
    PlanePartition,
    format_plane_partition,
    get_class,
    heights_fixed_by,
    parse_plane_partition,
)
from .enumeration import _TRANSFER, METHODS, count_class, count_class_q, iter_heights
from .errors import BoxCountError, MalformedInputError
from .formulas import identity_suite
from .render import render_svg
from .repmodel import (
    character_cross_checks,
    conjugator_check,
    k_action_check,
    klein_report,
    rep_suite,
)
from .report import CheckResult, SuiteReport

__all__ = ["main", "build_parser"]


def _dump(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number such as -1 or 3/2, got {text!r}") from None


def _add_box(p: argparse.ArgumentParser) -> None:
    for dim in ("a", "b", "c"):
        p.add_argument(dim, type=_nonneg, help=f"box side {dim}")


def _add_common(p: argparse.ArgumentParser, formats: Sequence[str] = ("json", "plain")) -> None:
    p.add_argument("--cap", type=_positive, default=None, help="cardinality cap (default: $BOXCOUNT_CAP or 10^7)")
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes for brute force")
    p.add_argument("--format", choices=formats, default=formats[0])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boxcount", description="Exact counts of plane partitions in a box.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (("count", "count a symmetry class"), ("qpoly", "q-generating polynomial of a class")):
        p = sub.add_parser(name, help=helptext)
        _add_box(p)
        p.add_argument("--class", dest="cls", default="P", help="symmetry class label (default P)")
        p.add_argument("--method", choices=METHODS, default=None, help="default: transfer when available, else bruteforce")
        if name == "qpoly":
            p.add_argument("--at", type=_rational, default=None, help="also evaluate at this rational point")
        _add_common(p)

    p = sub.add_parser("list", help="stream height matrices")
    _add_box(p)
    p.add_argument("--class", dest="cls", default="P")
    p.add_argument("--limit", type=_nonneg, default=None)
    _add_common(p)

    p = sub.add_parser("render", help="SVG lozenge picture of one plane partition")
    _add_box(p)
    p.add_argument("--heights", default=None, help="rows separated by ';' or newlines, entries by ',' (default: empty)")
    p.add_argument("--input", default=None, help="file with the height matrix, '-' for stdin")
    p.add_argument("--format", choices=("svg",), default="svg")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("identities", "rep", "all"), default="all")
    p.add_argument("--max", nargs=3, type=_nonneg, metavar=("A", "B", "C"), default=None)
    p.add_argument("--max-a", type=_nonneg, default=None)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--format", choices=("json", "plain"), default="json")

    p = sub.add_parser("rep-check", help="one representation-side check")
    p.add_argument("check", choices=("conjugator", "k-action", "characters", "klein"))
    p.add_argument("--a", type=_nonneg, default=2)
    p.add_argument("--b", type=_nonneg, default=None)
    p.add_argument("--box", nargs=3, type=_nonneg, metavar=("A", "B", "C"), default=None)
    p.add_argument("--format", choices=("json", "plain"), default="json")

    p = sub.add_parser("selfcheck", help="fast smoke test of every module")
    p.add_argument("--format", choices=("json", "plain"), default="json")
    return parser


# ---------------------------------------------------------------------------


def _method(args: argparse.Namespace) -> str:
    if args.method:
        return args.method
    return "transfer" if get_class(args.cls).label in _TRANSFER else "bruteforce"


def _box(args: argparse.Namespace) -> BoxDims:
    return BoxDims(args.a, args.b, args.c)


def cmd_count(args: argparse.Namespace) -> int:
    rep = count_class(_box(args), args.cls, _method(args), cap=args.cap, jobs=args.jobs)
    print(rep.to_json() if args.format == "json" else rep.count)
    return 0


def cmd_qpoly(args: argparse.Namespace) -> int:
    box, label, method = _box(args), get_class(args.cls).label, _method(args)
    poly = count_class_q(box, label, method, cap=args.cap, jobs=args.jobs)
    if args.format == "plain":
        print(poly if args.at is None else poly(args.at))
        return 0
    out = {"box": list(box), "class": label, "method": method, **poly.to_dict()}
    if args.at is not None:
        out["at"] = str(args.at)
        out["value"] = str(poly(args.at))
    print(_dump(out))
    return 0


def cmd_list(args: argparse.Namespace) -> int:
    box = _box(args)
    cls = get_class(args.cls)
    cls.check_compatible(box)
    stream = (h for h in iter_heights(box, cap=args.cap) if all(heights_fixed_by(h, g, box) for g in cls.generators))
    first = True
    for h in islice(stream, args.limit):
        if args.format == "json":
            print(_dump([list(r) for r in h]))
        else:
            if not first:
                print()
            print(format_plane_partition(PlanePartition._trusted(h, box)) or "(empty rows)")
        first = False
    return 0


def _read_heights(args: argparse.Namespace) -> str | None:
    if args.heights is not None and args.input is not None:
        raise MalformedInputError("give --heights or --input, not both")
    if args.heights is not None:
        return args.heights.replace(";", "\n")
    if args.input is not None:
        if args.input == "-":
            return sys.stdin.read()
        try:
            with open(args.input, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise MalformedInputError(f"cannot read {args.input}: {exc.strerror}") from None
    return None


def cmd_render(args: argparse.Namespace) -> int:
    box = _box(args)
    text = _read_heights(args)
    t = PlanePartition.empty(box) if text is None else parse_plane_partition(text, box)
    sys.stdout.write(render_svg(t))
    return 0


def _emit(report: SuiteReport, fmt: str) -> int:
    if fmt == "json":
        print(report.to_json())
    else:
        for ch in report.checks:
            status = "PASS" if ch.passed else ("XFAIL" if ch.experimental else "FAIL")
            print(f"{status} {ch.name} {tuple(ch.box)} {ch.anchor}" + (f" [{ch.detail}]" if not ch.passed else ""))
        print(f"{report.suite}: {'passed' if report.passed else 'FAILED'} ({len(report.checks)} checks)")
    return 0 if report.passed else 4


def cmd_verify(args: argparse.Namespace) -> int:
    report = SuiteReport(args.suite)
    if args.suite in ("identities", "all"):
        bounds = args.max if args.max is not None else (3, 3, 3)
        report.extend(identity_suite(*bounds, jobs=args.jobs))
    if args.suite in ("rep", "all"):
        if args.max_a is not None:
            max_a = args.max_a
        elif args.max is not None:
            max_a = min(args.max)
        else:
            max_a = 3
        report.extend(rep_suite(max_a))
    return _emit(report, args.format)


def cmd_rep_check(args: argparse.Namespace) -> int:
    if args.check == "conjugator":
        report = conjugator_check(args.a)
    elif args.check == "k-action":
        b = args.a if args.b is None else args.b
        report = SuiteReport("k-action", [k_action_check(args.a, b)])
    elif args.check == "characters":
        box = tuple(args.box) if args.box else (args.a, args.a, 2)
        report = SuiteReport("characters", character_cross_checks(box))
    else:
        kr = klein_report()
        detail = f"characters={kr.characters} orbits={kr.orbit_sizes}"
        report = SuiteReport("klein", [CheckResult("klein_demo", (), "equal characters, different G-sets", kr.passed, detail=detail)])
    return _emit(report, args.format)


def cmd_selfcheck(args: argparse.Namespace) -> int:
    report = SuiteReport("selfcheck")
    report.extend(identity_suite(2, 2, 2))
    report.extend(rep_suite(2))
    ref = count_class((2, 2, 2), "SC", "bruteforce").count
    report.checks.append(CheckResult("SC_spot", (2, 2, 2), "N_kappa(2,2,2) = 4", ref == 4, detail=f"got {ref}"))
    return _emit(report, args.format)


_COMMANDS = {
    "count": cmd_count,
    "qpoly": cmd_qpoly,
    "list": cmd_list,
    "render": cmd_render,
    "verify": cmd_verify,
    "rep-check": cmd_rep_check,
    "selfcheck": cmd_selfcheck,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BoxCountError as exc:
        print(f"boxcount: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        # e.g. a malformed BOXCOUNT_CAP
        print(f"boxcount: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
