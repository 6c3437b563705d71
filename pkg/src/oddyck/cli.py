"""Command-line front end.

Exit codes: 0 success, 1 failed check or comparison, 2 usage error,
3 numeric failure inside the kernel, 4 missing or unreachable OEIS data.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import kernel, oeis
from .automaton import Layer, PathClass, complete_counts, dp_counts
from .oracle import ORACLE_CAP
from .series import DEFAULT_PRECISION, Series, decimate, render
from .verify import closed_complete_series, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC, EXIT_EXTERNAL = 0, 1, 2, 3, 4

EVEN_TARGETS = ("g0", "h0", "g0h0", "bonus-g0")
FAMILY_TARGETS = {"fj": Layer.F, "gj": Layer.G, "hj": Layer.H}
TARGETS = ("v1",) + EVEN_TARGETS + tuple(FAMILY_TARGETS)


def expand_target(target: str, precision: int, j: int | None = None) -> tuple[Series, str]:
    """Series for ``target`` and the variable it is written in (``z`` or ``Z``).

    ``precision`` always counts powers of ``z``.
    """
    if target == "v1":
        return kernel.solve_v1(precision), "z"
    if target in FAMILY_TARGETS:
        return kernel.partial_closed(FAMILY_TARGETS[target], j, precision), "z"
    cls = {"g0": PathClass.ODD_ALL, "h0": PathClass.ODD_LAST_EVEN,
           "g0h0": PathClass.ODD_LAST_ANY, "bonus-g0": PathClass.BONUS}[target]
    return decimate(closed_complete_series(cls, precision)), "Z"


def _num(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _emit_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def format_series(s: Series, var: str, fmt: str) -> str:
    powers = range(s.valuation, s.precision) if not s.is_zero() else range(0)
    if fmt == "json":
        return json.dumps({
            "variable": var,
            "valuation": s.valuation,
            "coefficients": [_num(c) for c in s.coeffs],
            "precision": s.precision,
        })
    if fmt == "csv":
        return _emit_csv(["variable", "power", "coefficient"],
                         [(var, n, _num(s.coeff(n))) for n in powers]).rstrip("\n")
    lines = [f"variable: {var}", render(s, var), f"{'power':>6}  coefficient"]
    lines += [f"{n:>6}  {_num(s.coeff(n))}" for n in powers if s.coeff(n)]
    return "\n".join(lines)


def format_table(table, fmt: str) -> str:
    entries = list(table.entries())
    if fmt == "json":
        return json.dumps({"rows": [
            {"n": n, "layer": s.layer.value, "height": s.height, "count": str(c)}
            for n, s, c in entries
        ]})
    if fmt == "csv":
        return _emit_csv(["n", "layer", "height", "count"],
                         [(n, s.layer.value, s.height, c) for n, s, c in entries]).rstrip("\n")
    lines = [f"{'n':>4}  state     count"]
    lines += [f"{n:>4}  {str(s):<8}  {c}" for n, s, c in entries]
    return "\n".join(lines)


def format_complete(counts: list[int], fmt: str) -> str:
    rows = list(enumerate(counts, 1))
    if fmt == "json":
        return json.dumps({"rows": [{"semilength": m, "count": str(c)} for m, c in rows]})
    if fmt == "csv":
        return _emit_csv(["semilength", "count"], rows).rstrip("\n")
    return "\n".join([f"{'m':>4}  count"] + [f"{m:>4}  {c}" for m, c in rows])


# -- subcommands ------------------------------------------------------


def cmd_enumerate(args) -> int:
    cls = PathClass(args.path_class)
    if args.complete:
        print(format_complete(complete_counts(cls, args.n // 2), args.format))
    else:
        print(format_table(dp_counts(cls, args.n), args.format))
    return EXIT_OK


def cmd_expand(args) -> int:
    s, var = expand_target(args.target, args.precision, args.j)
    print(format_series(s, var, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suite(args.suite, args.n, fault=args.inject_fault)
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        print(json.dumps({"ok": not failed, "checks": [
            {"name": r.name, "ok": r.ok, "precision": r.precision, "detail": r.detail}
            for r in results
        ]}))
    elif args.format == "csv":
        print(_emit_csv(["check", "ok", "precision", "detail"],
                        [(r.name, r.ok, r.precision, r.detail) for r in results]).rstrip("\n"))
    else:
        for r in results:
            print(r.line())
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_oeis(args) -> int:
    rec = oeis.load(args.id, "network" if args.network else "fixture")
    count = args.count if args.count is not None else len(rec.terms)
    if count > len(rec.terms):
        raise oeis.InsufficientTerms(f"{rec.id} has {len(rec.terms)} terms, {count} requested")
    # default alignment: first b-file term <-> leading power of the target
    probe, _ = expand_target(args.target, 8)
    start = args.start_power if args.start_power is not None else probe.valuation
    s, _ = expand_target(args.target, 2 * (start + count) + 2)
    report = oeis.compare(s, rec, start, count)
    if args.format == "json":
        print(json.dumps({
            "id": report.id, "ok": report.ok, "first_mismatch": report.first_mismatch,
            "alignment": report.alignment,
            "computed": [str(c) for c in report.computed],
            "expected": [str(c) for c in report.expected],
        }))
    else:
        print(report.summary())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_annihilate(args) -> int:
    s, var = expand_target(args.target, args.precision)
    rel = kernel.find_annihilator(s, args.deg_y, args.deg_x)
    if rel is None:
        print(f"no relation of degree {args.deg_y} in y and {args.deg_x} in {var} "
              f"up to {var}^{s.precision - 1}")
        return EXIT_FAIL
    print(f"# derived from {s.precision} terms, not a proof; y = {args.target}, x = {var}")
    for i, row in enumerate(rel):
        poly = render(Series.from_coeffs(row), "x").rsplit(" + O(", 1)[0] if any(row) else "0"
        print(f"y^{i}: {poly}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="oddyck",
        description="Count Dyck paths and prefixes whose descents have odd length. "
                    "All output is exact and deterministic: no randomness is used anywhere.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    fmt = dict(choices=("table", "json", "csv"), default="table")

    e = sub.add_parser("enumerate", help="automaton counts of prefixes or complete paths")
    e.add_argument("--class", dest="path_class", required=True,
                   choices=[c.value for c in PathClass])
    e.add_argument("--n", type=_nonneg, required=True, help="maximal number of steps")
    e.add_argument("--complete", action="store_true",
                   help="report complete paths by semilength 1..n/2")
    e.add_argument("--format", **fmt)
    e.set_defaults(func=cmd_enumerate)

    x = sub.add_parser("expand", help="closed-form series from the kernel method")
    x.add_argument("--target", required=True, choices=TARGETS)
    x.add_argument("--j", type=_nonneg, help="height index, required for fj/gj/hj")
    x.add_argument("--precision", type=_at_least(4), default=DEFAULT_PRECISION,
                   help="number of z-powers (default %(default)s)")
    x.add_argument("--format", **fmt)
    x.set_defaults(func=cmd_expand)

    v = sub.add_parser("verify", help="identity and route-agreement checks")
    v.add_argument("--suite", choices=("identities", "triple-agreement", "oeis", "all"),
                   default="all")
    v.add_argument("--n", type=_nonneg, default=22, help="steps for route agreement")
    v.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    v.add_argument("--format", **fmt)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oeis", help="compare a closed form with an OEIS b-file")
    o.add_argument("--id", required=True)
    o.add_argument("--target", required=True, choices=EVEN_TARGETS)
    o.add_argument("--start-power", type=int,
                   help="power of Z matched to the first b-file term "
                        "(default: the target's leading power)")
    o.add_argument("--count", type=_at_least(1))
    o.add_argument("--network", action="store_true", help="fetch the b-file from oeis.org")
    o.add_argument("--format", choices=("table", "json"), default="table")
    o.set_defaults(func=cmd_oeis)

    a = sub.add_parser("annihilate",
                       help="exploratory: search a polynomial relation for a series")
    a.add_argument("--target", required=True, choices=EVEN_TARGETS)
    a.add_argument("--deg-y", type=_at_least(1), default=3)
    a.add_argument("--deg-x", type=_nonneg, default=4)
    a.add_argument("--precision", type=_at_least(4), default=DEFAULT_PRECISION)
    a.set_defaults(func=cmd_annihilate)
    return p


def _nonneg(text: str) -> int:
    return _at_least(0)(text)


def _at_least(lo: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}")
        return v
    return parse


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "expand" and (args.target in FAMILY_TARGETS) != (args.j is not None):
        parser.error("--j is required for fj/gj/hj and not allowed otherwise")
    if args.command == "verify" and args.suite in ("triple-agreement", "all") and args.n > ORACLE_CAP:
        parser.error(f"--n is capped at {ORACLE_CAP} for brute-force agreement")
    try:
        return args.func(args)
    except (oeis.InsufficientTerms, oeis.InsufficientPrecision) as e:
        parser.error(str(e))
    except kernel.KernelError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    except (oeis.NotFound, oeis.NetworkError, oeis.ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_EXTERNAL


if __name__ == "__main__":
    sys.exit(main())
