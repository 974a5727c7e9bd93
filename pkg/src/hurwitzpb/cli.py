"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
All mathematics lives in the library modules; this file only parses,
dispatches and formats.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import chromatic, hpbpoly, mstirling, polybern, stirling, verify
from .algebra import Polynomial, format_polynomial, format_rational
from .errors import HurwitzPBError

FORMATS = ("plain", "csv", "json", "markdown", "bfile")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class OutputSpec:
    format: str = "plain"
    destination: str | None = None
    offset: int = 0

    def write(self, text: str) -> None:
        if not text.endswith("\n"):
            text += "\n"
        if self.destination in (None, "-"):
            sys.stdout.write(text)
        else:
            Path(self.destination).write_text(text)


def max_n() -> int:
    raw = os.environ.get("POLYBERN_MAX_N", "64")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"POLYBERN_MAX_N must be an integer, got {raw!r}")


def parse_range(text: str) -> list[int]:
    """``"3"`` or inclusive ``"lo..hi"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"not an integer or range: {text!r}")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}")


def _capped(values: list[int], name: str) -> list[int]:
    cap = max_n()
    for v in values:
        if abs(v) > cap:
            raise UsageError(f"{name}={v} exceeds POLYBERN_MAX_N={cap}")
    return values


def _nonneg(values: list[int], name: str) -> list[int]:
    for v in values:
        if v < 0:
            raise UsageError(f"{name} must be non-negative, got {v}")
    return _capped(values, name)


# -- rendering ---------------------------------------------------------------


def _cell(v) -> str:
    if isinstance(v, Polynomial):
        return format_polynomial(v)
    return format_rational(v) if isinstance(v, Fraction) else str(v)


def _require_integer(v) -> int:
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    raise UsageError(f"bfile output needs integer values, got {_cell(v)}")


def render_values(keys: Sequence[str], items: list[tuple[tuple, object]], out: OutputSpec) -> str:
    """One value per parameter tuple."""
    fmt = out.format
    if fmt == "plain":
        return ", ".join(_cell(v) for _, v in items)
    if fmt == "csv":
        lines = [",".join(list(keys) + ["value"])]
        lines += [",".join([str(p) for p in params] + [_cell(v)]) for params, v in items]
        return "\n".join(lines)
    if fmt == "json":
        return json.dumps(
            [dict(zip(keys, params), value=_cell(v)) for params, v in items],
            separators=(",", ":"),
        )
    if fmt == "markdown":
        head = list(keys) + ["value"]
        lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
        lines += ["| " + " | ".join([str(p) for p in params] + [_cell(v)]) + " |" for params, v in items]
        return "\n".join(lines)
    return "\n".join(f"{out.offset + i} {_require_integer(v)}" for i, (_, v) in enumerate(items))


def render_table(rows: list[list[object | None]], ncols: int, out: OutputSpec) -> str:
    """Triangle rendering; ``None`` marks a blank cell."""
    fmt = out.format
    padded = [list(r) + [None] * (ncols - len(r)) for r in rows]
    if fmt == "plain":
        return "\n".join(" ".join(_cell(c) for c in r if c is not None) for r in padded)
    if fmt == "csv":
        lines = ["n\\k," + ",".join(str(k) for k in range(ncols))]
        lines += [f"{n}," + ",".join("" if c is None else _cell(c) for c in r) for n, r in enumerate(padded)]
        return "\n".join(lines)
    if fmt == "markdown":
        lines = ["| n\\k | " + " | ".join(str(k) for k in range(ncols)) + " |", "|" + "---|" * (ncols + 1)]
        lines += [
            f"| {n} | " + " | ".join("" if c is None else _cell(c) for c in r) + " |"
            for n, r in enumerate(padded)
        ]
        return "\n".join(lines)
    if fmt == "json":
        return json.dumps({"rows": [[_cell(c) for c in r if c is not None] for r in padded]},
                          separators=(",", ":"))
    flat = [c for r in padded for c in r if c is not None]
    return "\n".join(f"{out.offset + i} {_require_integer(v)}" for i, v in enumerate(flat))


def render_polynomial(p: Polynomial, out: OutputSpec) -> str:
    if out.format == "json":
        return json.dumps({"coeffs": [format_rational(c) for c in p.coeffs] or ["0"]},
                          separators=(",", ":"))
    if out.format == "csv":
        return "\n".join(["degree,coeff"] + [f"{i},{format_rational(c)}" for i, c in enumerate(p.coeffs)])
    if out.format == "markdown":
        return "\n".join(["| degree | coeff |", "|---|---|"] +
                         [f"| {i} | {format_rational(c)} |" for i, c in enumerate(p.coeffs)])
    if out.format == "bfile":
        return "\n".join(f"{out.offset + i} {_require_integer(c)}" for i, c in enumerate(p.coeffs))
    return format_polynomial(p)


# -- commands ----------------------------------------------------------------


def _grid(args, *names):
    pts = [()]
    for name in names:
        vals = _nonneg(parse_range(getattr(args, name)), name)
        pts = [p + (v,) for p in pts for v in vals]
    return pts


def cmd_stirling(args, out: OutputSpec) -> str:
    kind = args.command
    if kind == "lah":
        return render_values(("m", "k"), [(p, stirling.lah(*p)) for p in _grid(args, "m", "k")], out)

    if kind == "mstirling":
        m = _nonneg([args.m], "m")[0]
        if args.rows is not None:
            N = _nonneg([args.rows], "rows")[0]
            table = mstirling.m_stirling_table(N, m)
            rows = [list(table.rows[n][: n + m + 1]) for n in range(N + 1)]
            return render_table(rows, N + m + 1, out)
        if args.n is None or args.k is None:
            raise UsageError("mstirling needs --rows or both --n and --k")
        if args.x is not None:
            x = parse_rational(args.x)
            items = [(p, mstirling.weighted_m_stirling(p[0], p[1], x, m)) for p in _grid(args, "n", "k")]
        else:
            items = [(p, mstirling.m_stirling_explicit(p[0], p[1], m)) for p in _grid(args, "n", "k")]
        return render_values(("n", "k"), items, out)

    if kind in ("first", "second") and args.rows is not None:
        N = _nonneg([args.rows], "rows")[0]
        tri = stirling.stirling_first_triangle(N) if kind == "first" else stirling.stirling_second_triangle(N)
        return render_table([list(r) for r in tri], N + 1, out)
    if args.n is None or args.k is None:
        raise UsageError(f"{kind} needs --n and --k" + (" (or --rows)" if kind in ("first", "second") else ""))

    pts = _grid(args, "n", "k")
    if kind == "first":
        items = [(p, stirling.stirling_first(*p)) for p in pts]
    elif kind == "second":
        items = [(p, stirling.stirling_second(*p)) for p in pts]
    elif kind == "r":
        r = _nonneg([args.r], "r")[0]
        items = [(p, stirling.r_stirling(p[0], p[1], r)) for p in pts]
    else:  # weighted
        if args.x is None:
            if len(pts) != 1:
                raise UsageError("weighted without --x prints one polynomial; give single --n and --k")
            return render_polynomial(stirling.weighted_stirling_poly(*pts[0]), out)
        x = parse_rational(args.x)
        items = [(p, stirling.weighted_stirling(p[0], p[1], x)) for p in pts]
    return render_values(("n", "k"), items, out)


def _signed_k(args) -> int:
    k = args.k
    _capped([k], "k")
    return -k if args.negative else k


def cmd_polybern(args, out: OutputSpec) -> str:
    a = polybern.check_a(parse_rational(args.a))
    k = _signed_k(args)
    ns = _nonneg(parse_range(args.n), "n")
    ms = _nonneg(parse_range(args.m), "m")
    algo = args.algorithm
    if algo == "mstirling" and k > 0:
        raise UsageError("the m-Stirling route needs a non-positive upper index (use --negative)")
    if algo == "matrix":
        mat = polybern.m_hpb_matrix(max(ns) + max(ms), k, a)
    items = []
    for n in ns:
        for m in ms:
            if algo == "explicit":
                v = polybern.m_hpb_form1(n, m, k, a)
            elif algo == "form2":
                v = polybern.m_hpb_form2(n, m, k, a)
            elif algo == "matrix":
                v = mat[n, m]
            else:
                v = polybern.m_hpb_negative(n, m, -k, a)
            items.append(((n, m), v))
    return render_values(("n", "m"), items, out)


def cmd_poly(args, out: OutputSpec) -> str:
    a = polybern.check_a(parse_rational(args.a))
    k = _signed_k(args)
    n = _nonneg([args.n], "n")[0]
    m = _nonneg([args.m], "m")[0]
    algo = args.algorithm
    if algo == "convolution":
        p = hpbpoly.hpb_poly_convolution(n, m, k, a).poly
    elif algo == "explicit":
        p = hpbpoly.hpb_poly_explicit(n, m, k, a).poly
    elif algo == "matrix":
        p = hpbpoly.hpb_poly_matrix(n + m, k, a)[n][m]
    else:
        if k > 0:
            raise UsageError("the m-Stirling route needs a non-positive upper index (use --negative)")
        p = hpbpoly.hpb_poly_negative(n, m, -k, a).poly
    if args.at is not None:
        x = parse_rational(args.at)
        return render_values(("x",), [((format_rational(x),), p(x))], out)
    return render_polynomial(p, out)


def cmd_chromatic(args, out: OutputSpec) -> str:
    if args.graph is not None:
        text = sys.stdin.read() if args.graph == "-" else Path(args.graph).read_text()
        try:
            g = chromatic.parse_edge_list(text)
        except ValueError as exc:
            raise UsageError(str(exc))
    elif args.complete is not None:
        g = chromatic.complete_graph(_nonneg([args.complete], "complete")[0])
    elif args.empty is not None:
        g = chromatic.empty_graph(_nonneg([args.empty], "empty")[0])
    else:
        raise UsageError("chromatic needs --graph, --complete or --empty")
    if args.brute is not None:
        return render_values(("x",), [((args.brute,), chromatic.pbar_bruteforce(g, args.brute))], out)
    p = chromatic.pbar(g) if args.pbar else chromatic.chromatic_polynomial(g)
    if args.at is not None:
        x = parse_rational(args.at)
        return render_values(("x",), [((format_rational(x),), p(x))], out)
    return render_polynomial(p, out)


def cmd_verify(args, out: OutputSpec) -> tuple[str, int]:
    results = verify.run_suites(args.suites or ["all"], seed=args.seed)
    ok = all(r.ok for r in results)
    if out.format == "json":
        report = {"seed": args.seed, "ok": ok, "suites": [r.to_dict() for r in results]}
        text = json.dumps(report, indent=2, sort_keys=True)
    else:
        lines = []
        for r in results:
            d = r.to_dict()
            lines.append(d["summary"])
            for c in r.checks:
                status = "ok" if c.ok else f"FAILED at {len(c.failures)} point(s)"
                lines.append(f"  {c.name} [{c.grid}]: {c.points} points, {status}")
            lines.extend(f"  note: {n}" for n in r.notes)
        text = "\n".join(lines)
    if not ok:
        first = next(c for r in results for c in r.checks if not c.ok)
        sys.stderr.write(f"verification failed: {first.name}: first failure {first.to_dict()['failures'][0]}\n")
    return text, 0 if ok else 1


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitzpb",
        description="Exact Stirling-type and Hurwitz-type poly-Bernoulli numbers.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain")
    common.add_argument("--output", "-o", default=None, help="write to PATH instead of stdout")
    common.add_argument("--offset", type=int, default=0, help="first index for bfile output")
    sub = parser.add_subparsers(dest="command", required=True)

    for kind, help_ in (
        ("first", "signed Stirling numbers of the first kind"),
        ("second", "Stirling numbers of the second kind"),
        ("weighted", "weighted Stirling numbers of the second kind"),
        ("r", "r-Stirling numbers {n+r, k+r}_r"),
    ):
        p = sub.add_parser(kind, parents=[common], help=help_)
        p.add_argument("--n")
        p.add_argument("--k")
        if kind in ("first", "second"):
            p.add_argument("--rows", type=int, help="print the triangle for n <= ROWS")
        if kind == "weighted":
            p.add_argument("--x", help="rational weight; omit for the polynomial in x")
        if kind == "r":
            p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("lah", parents=[common], help="unsigned Lah numbers")
    p.add_argument("--m", required=True)
    p.add_argument("--k", required=True)

    p = sub.add_parser("mstirling", parents=[common], help="m-Stirling numbers of the second kind")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--rows", type=int)
    p.add_argument("--n")
    p.add_argument("--k")
    p.add_argument("--x", help="rational weight for the weighted variant")

    p = sub.add_parser("polybern", parents=[common], help="m-Hurwitz type poly-Bernoulli numbers")
    p.add_argument("--n", required=True)
    p.add_argument("--m", default="0")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", default="1")
    p.add_argument("--negative", action="store_true", help="use upper index -k")
    p.add_argument("--algorithm", choices=("explicit", "form2", "matrix", "mstirling"), default="explicit")

    p = sub.add_parser("poly", parents=[common], help="m-Hurwitz type poly-Bernoulli polynomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", default="1")
    p.add_argument("--negative", action="store_true", help="use upper index -k")
    p.add_argument("--algorithm", choices=("convolution", "explicit", "matrix", "mstirling"), default="convolution")
    p.add_argument("--at", help="evaluate at this rational x")

    p = sub.add_parser("chromatic", parents=[common], help="chromatic polynomial of a small graph")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph", help="edge-list file ('n <count>' then 'u v' lines), '-' for stdin")
    src.add_argument("--complete", type=int)
    src.add_argument("--empty", type=int)
    p.add_argument("--pbar", action="store_true", help="print (-1)^n P(-x) instead of P(x)")
    p.add_argument("--at", help="evaluate at this rational x")
    p.add_argument("--brute", type=int, help="count compatible (map, acyclic orientation) pairs for x")

    p = sub.add_parser("verify", help="run the identity-checking suites")
    p.add_argument("suites", nargs="*", choices=("all",) + verify.SUITES, metavar="SUITE",
                   help="all, " + ", ".join(verify.SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--output", "-o", default=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = OutputSpec(args.format, args.output, getattr(args, "offset", 0))
    code = 0
    try:
        if args.command in ("first", "second", "weighted", "r", "lah", "mstirling"):
            text = cmd_stirling(args, out)
        elif args.command == "polybern":
            text = cmd_polybern(args, out)
        elif args.command == "poly":
            text = cmd_poly(args, out)
        elif args.command == "chromatic":
            text = cmd_chromatic(args, out)
        else:
            text, code = cmd_verify(args, out)
    except (UsageError, HurwitzPBError, OSError) as exc:
        sys.stderr.write(f"hurwitzpb {args.command}: error: {exc}\n")
        return 2
    out.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
