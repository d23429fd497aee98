"""Command-line front end.

Exit codes: 0 success, 1 verification outcome differs from the expected
verdicts, 2 usage or parse error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from .arclist import ArcListError, format_arc_list, read_arc_list
from .fibonacci import weight_vector
from .graph import directed_join, underlying_simple_graph
from .indices import f_zagreb, zagreb
from .jaco import build_jaco, jaco_degree_sequence, jaconian_vertices
from .khazamula import (
    BoundError,
    Convention,
    LinearParams,
    irr_k,
    irr_k_terms,
    irr_kc,
    irr_kc_terms,
    radius,
)
from .verify import (
    MATCH,
    MISMATCH,
    UnknownClaimError,
    jsonable,
    khazamula_rhs,
    report_json,
    report_markdown,
    run_suite,
)

EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_IO = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def rational(text: str) -> Fraction:
    try:
        return Fraction(text.replace("−", "-").strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational literal: {text!r}") from None


def positive_float(text: str) -> float:
    try:
        value = float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("radius must be positive")
    return value


def sig12(x: float) -> str:
    return format(x, "#.12g")


def _load(path: str):
    try:
        return read_arc_list(path)
    except ArcListError as exc:
        raise CliError(f"{path}: {exc}", EXIT_USAGE) from None
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}", EXIT_IO) from None


def _convention(name: str) -> Convention:
    return Convention(name)


def cmd_jaco(args, out) -> int:
    if args.n < 1:
        raise CliError("--n must be >= 1", EXIT_USAGE)
    rows = jaco_degree_sequence(args.n)
    jaconian = sorted(jaconian_vertices(args.n))
    arcs = build_jaco(args.n).arcs
    header = ["i", "d_minus", "d_plus", "degree", "weight"]
    table = [[r.i, r.d_minus, r.d_plus_inf, r.degree_finite, r.weight] for r in rows]
    if args.format == "json":
        json.dump({
            "n": args.n,
            "rows": [dict(zip(header, row)) for row in table],
            "jaconian": jaconian,
            "arcs": [list(a) for a in arcs],
        }, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(table)
        out.write(f"# jaconian: {' '.join(map(str, jaconian))}\n")
        out.write(f"# arcs: {'; '.join(f'{t} {h}' for t, h in arcs)}\n")
    else:
        out.write("| i | d⁻(v_i) | d⁺(v_i) | d(v_i) in J_n(1) | f±_i |\n")
        out.write("|---|---|---|---|---|\n")
        for row in table:
            out.write("| " + " | ".join(map(str, row)) + " |\n")
        out.write(f"\nJaconian vertices: {', '.join(f'v_{v}' for v in jaconian)}\n")
        out.write(f"Arcs: {', '.join(f'({t},{h})' for t, h in arcs) or 'none'}\n")
    return 0


def cmd_indices(args, out) -> int:
    g = _load(args.input)
    view = underlying_simple_graph(g)
    report: dict[str, int] = {}
    if args.family in ("zagreb", "both"):
        report.update(zagreb(view).as_dict())
    if args.family in ("fzagreb", "both"):
        report.update(f_zagreb(view, weight_vector(g)).as_dict())
    json.dump(report, out)
    out.write("\n")
    return 0


def cmd_irrk(args, out) -> int:
    g = _load(args.input)
    p = LinearParams(args.slope, args.intercept)
    conv = _convention(args.convention)
    out.write(f"{irr_k(g, p, conv)}\n")
    out.write(f"convention: {conv.value}\n")
    out.write("vertex\tlower\tupper\tA\tB\tvalue\n")
    for bound, form in irr_k_terms(g):
        upper = "-" if bound.upper is None else bound.upper
        out.write(f"{bound.vertex}\t{bound.lower}\t{upper}\t{form.a}\t{form.b}\t{form.evaluate(p)}\n")
    return 0


def cmd_irrkc(args, out) -> int:
    g = _load(args.input)
    conv = _convention(args.convention)
    try:
        r = args.radius if args.radius is not None else radius(g)
        total = irr_kc(g, conv, r)
        terms = irr_kc_terms(g, r)
    except BoundError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    out.write(f"{sig12(total)}\n")
    out.write(f"radius: {r:g}\nconvention: {conv.value}\n")
    out.write("vertex\tlower\tupper\tvalue\n")
    for bound, value in terms:
        upper = "-" if bound.upper is None else bound.upper
        out.write(f"{bound.vertex}\t{bound.lower}\t{upper}\t{sig12(value)}\n")
    return 0


def cmd_verify(args, out) -> int:
    claims = None
    if args.claims:
        claims = [c for c in args.claims.split(",") if c.strip()]
    try:
        records = run_suite(claims, args.max_n)
    except UnknownClaimError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    if args.format == "json":
        json.dump(report_json(records), out, indent=2)
        out.write("\n")
    else:
        out.write(report_markdown(records) + "\n")
    return 0 if all(r.as_expected for r in records) else EXIT_UNEXPECTED


def cmd_join(args, out) -> int:
    g, h = _load(args.left), _load(args.right)
    p = LinearParams(args.slope, args.intercept)
    joined = directed_join(g, h)
    per = irr_k(joined, p, Convention.PER_TERM)
    agg = irr_k(joined, p, Convention.AGGREGATE)
    rhs = khazamula_rhs(g, h, p)
    verdict = MATCH if agg == rhs else MISMATCH
    if args.format == "json":
        json.dump({
            "vertices": joined.n,
            "arcs": [list(a) for a in joined.arcs],
            "per_term": jsonable(per),
            "aggregate": jsonable(agg),
            "rhs": jsonable(rhs),
            "verdict": verdict,
        }, out, indent=2)
        out.write("\n")
        return 0
    out.write(format_arc_list(joined))
    out.write(f"# irr_k per-term: {per}\n")
    out.write(f"# irr_k aggregate: {agg}\n")
    out.write(f"# theorem rhs: {rhs}\n")
    out.write(f"# verdict: {verdict}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacoirr",
        description="Jaco graphs, Zagreb-type indices and Khazamula irregularity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jaco", help="degree table of the Jaco graph J_n(1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p.set_defaults(func=cmd_jaco)

    p = sub.add_parser("indices", help="Zagreb-type indices of an arc-list graph")
    p.add_argument("--input", required=True)
    p.add_argument("--family", choices=("zagreb", "fzagreb", "both"), default="both")
    p.set_defaults(func=cmd_indices)

    conventions = [c.value for c in Convention]
    p = sub.add_parser("irrk", help="Khazamula irregularity for f(x) = slope*x + intercept")
    p.add_argument("--input", required=True)
    p.add_argument("--slope", type=rational, required=True)
    p.add_argument("--intercept", type=rational, required=True)
    p.add_argument("--convention", choices=conventions, default=Convention.PER_TERM.value)
    p.set_defaults(func=cmd_irrk)

    p = sub.add_parser("irrkc", help="Khazamula c-irregularity (circular integrand)")
    p.add_argument("--input", required=True)
    p.add_argument("--convention", choices=conventions, default=Convention.PER_TERM.value)
    p.add_argument("--radius", type=positive_float)
    p.set_defaults(func=cmd_irrkc)

    p = sub.add_parser("verify", help="check published closed forms against the definitions")
    p.add_argument("--claims", help="comma-separated claim ids, e.g. table1,prop3.5")
    p.add_argument("--max-n", type=int)
    p.add_argument("--format", choices=("md", "json"), default="md")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("join", help="directed join of two graphs and the join theorem check")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--slope", type=rational, required=True)
    p.add_argument("--intercept", type=rational, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_join)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    buffer = io.StringIO()
    try:
        code = args.func(args, buffer)
    except CliError as exc:
        print(f"jacoirr: error: {exc}", file=sys.stderr)
        return exc.code
    out.write(buffer.getvalue())
    return code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
