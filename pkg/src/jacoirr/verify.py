"""Adjudicate the published closed forms against definitional computation.

Every claim instance becomes a :class:`VerificationRecord` holding the value
computed from the definitions, the value of the published formula, the
verdict, and the verdict we expect. Expected mismatches are errors in the
published material that have been analysed and documented; they are
reported, never suppressed.

Definitional values are computed twice by independent routes before being
compared: the linear family through :mod:`jacoirr.khazamula` and a direct
re-derivation from the arc list, the circular family through the closed-form
antiderivative and adaptive quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator

from . import published
from .fibonacci import fibonacci, weight_for_degree
from .graph import (
    Digraph,
    build_bipartite_lr,
    build_cycle,
    build_path,
    build_wheel,
    degree_profile,
    directed_join,
    make_digraph,
)
from .indices import table2_row
from .jaco import jaco_degree_sequence, jaco_out_degree
from .khazamula import (
    ZERO_FORM,
    Convention,
    LinearParams,
    combine,
    head_degree,
    irr_k,
    irr_k_terms,
    irr_kc,
    irr_kc_terms,
    linear_integral,
    quad_reference,
)

MATCH = "match"
MISMATCH = "mismatch"
NOT_APPLICABLE = "not-applicable"

CIRCULAR_TOL = 1e-9

CLAIMS = (
    "Table1", "Table2",
    "Prop3.1", "Prop3.2", "Prop3.3", "Prop3.4", "Ex1", "Ex2", "Thm3.1",
    "Prop3.5", "Prop3.6", "Prop3.7", "Prop3.8",
)

LINEAR_PARAMS = ((1, 0), (0, 1), (2, 3))
# the example problems fix f(x) = m*x
SLOPE_ONLY_PARAMS = ((1, 0), (2, 0), (3, 0))

# upper bound of the swept size parameter per claim
DEFAULT_RANGES = {
    "Table1": 12, "Table2": 12,
    "Prop3.1": 30, "Prop3.2": 30, "Prop3.3": 20, "Prop3.4": 20,
    "Ex2": 12, "Prop3.5": 30, "Prop3.6": 30, "Prop3.7": 20, "Prop3.8": 8,
}


class UnknownClaimError(ValueError):
    pass


class OracleDisagreement(AssertionError):
    """The two independent definitional routes gave different values."""


@dataclass
class VerificationRecord:
    claim_id: str
    params: dict[str, Any]
    convention: str
    definitional: Any
    paper: Any
    verdict: str
    expected: str
    tolerance: float
    extras: dict[str, Any] = field(default_factory=dict)

    @property
    def as_expected(self) -> bool:
        return self.verdict == self.expected


def resolve_claims(names: Iterable[str] | None) -> list[str]:
    """Canonical claim ids in suite order; names are case-insensitive."""
    if names is None:
        return list(CLAIMS)
    lookup = {c.lower(): c for c in CLAIMS}
    wanted = set()
    for name in names:
        key = name.strip().lower()
        if key not in lookup:
            raise UnknownClaimError(f"unknown claim {name!r}; known: {', '.join(CLAIMS)}")
        wanted.add(lookup[key])
    return [c for c in CLAIMS if c in wanted]


def judge(definitional: Any, paper: Any, tolerance: float) -> str:
    if paper is None:
        return NOT_APPLICABLE
    if tolerance == 0:
        return MATCH if definitional == paper else MISMATCH
    return MATCH if abs(definitional - paper) <= tolerance else MISMATCH


# --- published closed forms -------------------------------------------------

def _sizes(sizes: int | tuple[int, ...], count: int) -> tuple[int, ...]:
    sizes = (sizes,) if isinstance(sizes, int) else tuple(sizes)
    if len(sizes) != count:
        raise ValueError(f"expected {count} size parameter(s), got {sizes}")
    return sizes


def paper_formula_linear(family: str, sizes: int | tuple[int, int], p: LinearParams) -> Fraction:
    """Published closed form for the linear Khazamula irregularity of a family."""
    m, c = p.slope, p.intercept
    if family == "path":
        (n,) = _sizes(sizes, 1)
        if n < 2:
            raise ValueError("path needs n >= 2")
        return abs(Fraction(3, 2) * (n - 2) * m + n * c)
    if family == "cycle":
        (n,) = _sizes(sizes, 1)
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return n * abs(Fraction(3, 2) * m + c)
    if family == "wheel":
        (n,) = _sizes(sizes, 1)
        if n < 3:
            raise ValueError("wheel needs n >= 3")
        f = fibonacci(n)
        sign = -1 if n % 2 == 0 else 1
        return abs(Fraction(5 * n - f * f + 9, 2) * m + (5 * n + sign * f + 3) * c)
    if family == "bipartite":
        left, right = _sizes(sizes, 2)
        if left < 1 or right < 1:
            raise ValueError("bipartite sides must be >= 1")
        f = fibonacci(right)
        sign = -1 if right % 2 == 0 else 1
        return abs(Fraction(left**3 - left * f * f, 2) * m + (left * left + sign * left * f) * c)
    if family in ("star_lr", "star_rl"):
        (n,) = _sizes(sizes, 1)
        if n not in (1, 5):
            raise ValueError("the star example is stated for n = 1 and n = 5 only")
        if c != 0:
            raise ValueError("the star example is stated for f(x) = m*x only")
        if n == 1:
            return Fraction(0)
        return abs(12 * m) if family == "star_lr" else 60 * abs(m)
    raise ValueError(f"unknown family {family!r}")


def paper_formula_circular(family: str, sizes: int | tuple[int, int], pi_sign: str = "statement") -> float:
    """Published closed form for the circular Khazamula irregularity.

    For wheels with ``n >= 5`` the stated result and the last line of its
    derivation disagree on the sign of the ``f_n^2 * pi / 4`` term;
    ``pi_sign="proof"`` selects the derivation's sign.
    """
    half_arc = 2 * math.pi / 3 - math.sqrt(3) / 2
    if family == "path":
        (n,) = _sizes(sizes, 1)
        if n < 3:
            raise ValueError("path needs n >= 3")
        return (n - 2) * half_arc
    if family == "cycle":
        (n,) = _sizes(sizes, 1)
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return n * half_arc
    if family == "wheel":
        (n,) = _sizes(sizes, 1)
        if n < 3:
            raise ValueError("wheel needs n >= 3")
        if n in (3, 4):
            return 4 * math.sqrt(5) + 9 * math.pi + 18 * math.asin(2 / 3)
        f = float(fibonacci(n))
        base = 1.5 * (n + 1) * math.sqrt(f * f - 9) + (n + 1) * f * f / 2 * math.asin(3 / f)
        if n % 2 == 0:
            sign, tail = -1, n * (math.sqrt(f * f - 4) + f * f / 2 * math.asin(2 / f))
        else:
            sign, tail = 1, n * (math.sqrt(f * f - 4) - f * f / 2 * math.asin(2 / f))
        if pi_sign == "proof":
            sign = -sign
        elif pi_sign != "statement":
            raise ValueError(f"pi_sign must be 'statement' or 'proof', got {pi_sign!r}")
        return abs(base + sign * f * f * math.pi / 4 + tail)
    if family == "bipartite":
        left, right = _sizes(sizes, 2)
        if left < 1 or right < 1:
            raise ValueError("bipartite sides must be >= 1")
        f = float(fibonacci(right))
        sign = -1 if right % 2 == 0 else 1
        if left >= f:
            a = f / 2 * math.sqrt(left * left - f * f) + left * left / 2 * math.asin(f / left)
            return abs(left * left * math.pi / 4 + sign * a)
        b = left / 2 * math.sqrt(f * f - left * left) + f * f / 2 * math.asin(left / f)
        return abs(b + sign * f * f * math.pi / 4)
    raise ValueError(f"unknown family {family!r}")


def khazamula_rhs(g: Digraph, h: Digraph, p: LinearParams) -> Fraction:
    """Right-hand side of the directed-join theorem, evaluated literally.

    Each g-vertex integrates from its weight in the join up to
    ``Delta(H) + n``; each h-vertex integrates from the weight of
    ``d_H(u) + 1`` up to its H-head degree plus one, or contributes zero when
    headless in ``H``. One absolute value wraps the whole sum.
    """
    n, m = g.n, h.n
    _, delta_h = degree_profile(h)
    total = ZERO_FORM
    for v in g.vertices:
        total = total + linear_integral(weight_for_degree(g.degree(v).total + m), delta_h + n)
    for u in h.vertices:
        top = head_degree(h, u)
        if top is not None:
            total = total + linear_integral(weight_for_degree(h.degree(u).total + 1), top + 1)
    return abs(total.evaluate(p))


# --- definitional values with independent cross-checks ----------------------

def _linear_oracle(g: Digraph, p: LinearParams) -> list[Fraction]:
    """Per-vertex values rebuilt from the raw arc list."""
    degree = [0] * (g.n + 1)
    succ: list[list[int]] = [[] for _ in range(g.n + 1)]
    for tail, head in g.arcs:
        degree[tail] += 1
        degree[head] += 1
        succ[tail].append(head)
    terms = []
    for v in range(1, g.n + 1):
        if not succ[v]:
            terms.append(Fraction(0))
            continue
        d = degree[v]
        lower = (-1) ** d * fibonacci(d)
        upper = max(degree[u] for u in succ[v])
        terms.append(p.slope * Fraction(upper * upper - lower * lower, 2) + p.intercept * (upper - lower))
    return terms


def definitional_linear(g: Digraph, p: LinearParams) -> tuple[Fraction, Fraction]:
    """Aggregate and per-term values, cross-checked term by term against a direct re-derivation."""
    agg = irr_k(g, p, Convention.AGGREGATE)
    per = irr_k(g, p, Convention.PER_TERM)
    oracle = _linear_oracle(g, p)
    if [form.evaluate(p) for _, form in irr_k_terms(g)] != oracle or (agg, per) != (
        combine(oracle, Convention.AGGREGATE), combine(oracle, Convention.PER_TERM)
    ):
        raise OracleDisagreement(f"linear routes disagree on {g}")
    return agg, per


def definitional_circular(g: Digraph, r: float | None = None) -> tuple[float, float]:
    """Aggregate and per-term values, cross-checked against quadrature."""
    agg = irr_kc(g, Convention.AGGREGATE, r)
    per = irr_kc(g, Convention.PER_TERM, r)
    quad_terms = [v for _, v in irr_kc_terms(g, r, integrate=quad_reference)]
    for closed, oracle in ((agg, combine(quad_terms, Convention.AGGREGATE)),
                           (per, combine(quad_terms, Convention.PER_TERM))):
        if abs(closed - oracle) > CIRCULAR_TOL * max(1.0, abs(oracle)):
            raise OracleDisagreement(f"closed form {closed} vs quadrature {oracle} on {g}")
    return agg, per


def _p_params(p: LinearParams) -> dict[str, str]:
    return {"slope": str(p.slope), "intercept": str(p.intercept)}


def _linear_record(claim: str, params: dict, g: Digraph, p: LinearParams, paper: Fraction,
                   expected: str = MATCH) -> VerificationRecord:
    agg, per = definitional_linear(g, p)
    return VerificationRecord(
        claim, {**params, **_p_params(p)}, Convention.AGGREGATE.value, agg, paper,
        judge(agg, paper, 0), expected, 0, {"per_term": per},
    )


def _circular_record(claim: str, params: dict, g: Digraph, paper: float, expected: str,
                     r: float | None = None, **extras: Any) -> VerificationRecord:
    agg, per = definitional_circular(g, r)
    tol = CIRCULAR_TOL * max(1.0, abs(paper))
    return VerificationRecord(
        claim, params, Convention.AGGREGATE.value, agg, paper,
        judge(agg, paper, tol), expected, tol, {"per_term": per, **extras},
    )


# --- tables ----------------------------------------------------------------

def _table_rows(which: str, max_n: int) -> list[tuple]:
    if which == "table1":
        rows = []
        for n in range(1, max_n + 1):
            seq = jaco_degree_sequence(n)
            d_plus = jaco_out_degree(n)
            rows.append((n, n - d_plus, d_plus, tuple(r.weight for r in seq)))
        return rows
    if which == "table2":
        return [tuple(vars(table2_row(n)).values()) for n in range(1, max_n + 1)]
    raise ValueError(f"unknown table {which!r}")


def reproduce_table(which: str, max_n: int) -> tuple[list[tuple], list[tuple]]:
    """Computed rows ``(n, ...)`` and the differing cells ``(n, column, computed, published)``."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    which = which.lower()
    rows = _table_rows(which, max_n)
    reference, columns = (
        (published.TABLE1, published.TABLE1_COLUMNS) if which == "table1"
        else (published.TABLE2, published.TABLE2_COLUMNS)
    )
    diffs = []
    for row in rows:
        n = row[0]
        if n not in reference:
            continue
        for col, mine, theirs in zip(columns, row[1:], reference[n]):
            if mine != theirs:
                diffs.append((n, col, mine, theirs))
    return rows, diffs


def _table_records(claim: str, max_n: int) -> Iterator[VerificationRecord]:
    which = claim.lower()
    reference = published.TABLE1 if which == "table1" else published.TABLE2
    rows, _ = reproduce_table(which, max_n)
    for row in rows:
        n = row[0]
        paper = reference.get(n)
        expected = MATCH
        if which == "table2" and any(k == n for k, _ in published.TABLE2_ERRATA):
            expected = MISMATCH
        if paper is None:
            expected = NOT_APPLICABLE
        yield VerificationRecord(claim, {"n": n}, "n/a", tuple(row[1:]), paper,
                                 judge(tuple(row[1:]), paper, 0), expected, 0)


# --- claim runners -----------------------------------------------------------

def _params(pairs) -> list[LinearParams]:
    return [LinearParams(m, c) for m, c in pairs]


def _prop_3_1(top: int):
    for n in range(2, top + 1):
        for p in _params(LINEAR_PARAMS):
            yield _linear_record("Prop3.1", {"n": n}, build_path(n), p, paper_formula_linear("path", n, p))


def _prop_3_2(top: int):
    for n in range(3, top + 1):
        for p in _params(LINEAR_PARAMS):
            yield _linear_record("Prop3.2", {"n": n}, build_cycle(n), p, paper_formula_linear("cycle", n, p))


def _prop_3_3(top: int):
    for n in range(3, top + 1):
        for p in _params(LINEAR_PARAMS):
            yield _linear_record("Prop3.3", {"n": n}, build_wheel(n), p, paper_formula_linear("wheel", n, p))


def _prop_3_4(top: int):
    for left in range(1, top + 1):
        for right in range(1, top + 1):
            g = build_bipartite_lr(left, right)
            for p in _params(LINEAR_PARAMS):
                yield _linear_record("Prop3.4", {"left": left, "right": right}, g, p,
                                     paper_formula_linear("bipartite", (left, right), p))


def _ex_1(top: int):
    for n in (1, 5):
        if n > top:
            continue
        for family, g in (("star_lr", build_bipartite_lr(1, n)), ("star_rl", build_bipartite_lr(n, 1))):
            for p in _params(SLOPE_ONLY_PARAMS):
                yield _linear_record("Ex1", {"orientation": family, "n": n}, g, p,
                                     paper_formula_linear(family, n, p))


K1 = make_digraph(1, [])


def _ex_2(top: int):
    for n in range(3, top + 1):
        cycle = build_cycle(n)
        joined = directed_join(cycle, K1)
        for p in _params(SLOPE_ONLY_PARAMS):
            join_agg, join_per = definitional_linear(joined, p)
            cycle_agg, _ = definitional_linear(cycle, p)
            ratio = join_agg / cycle_agg
            paper = Fraction(n * n - 4, 3)
            yield VerificationRecord(
                "Ex2", {"n": n, **_p_params(p)}, Convention.AGGREGATE.value, ratio, paper,
                judge(ratio, paper, 0), MATCH, 0,
                {"join": join_agg, "join_per_term": join_per, "cycle": cycle_agg},
            )


def _join_instances(top: int) -> list[tuple[str, Digraph, Digraph]]:
    named = [(f"C{n}+K1", build_cycle(n), K1) for n in range(3, max(3, top) + 1)]
    named += [
        ("K1+K1", K1, K1), ("P2+K1", build_path(2), K1), ("P3+K1", build_path(3), K1),
        ("K1+P2", K1, build_path(2)), ("K1+C3", K1, build_cycle(3)),
        ("P2+P2", build_path(2), build_path(2)), ("P3+P2", build_path(3), build_path(2)),
        ("C3+P2", build_cycle(3), build_path(2)), ("P2+C3", build_path(2), build_cycle(3)),
        ("C4+C3", build_cycle(4), build_cycle(3)), ("P3+P3", build_path(3), build_path(3)),
    ]
    return named


def _thm_3_1(top: int):
    p = LinearParams(1, 0)
    for name, g, h in _join_instances(top):
        joined = directed_join(g, h)
        # the theorem's degree shifts are exact only when one operand is a single vertex
        expected = MATCH if min(g.n, h.n) == 1 else MISMATCH
        yield _linear_record("Thm3.1", {"join": name}, joined, p, khazamula_rhs(g, h, p), expected)


def _prop_3_5(top: int):
    for n in range(3, top + 1):
        yield _circular_record("Prop3.5", {"n": n}, build_path(n),
                               paper_formula_circular("path", n), MISMATCH)


def _prop_3_6(top: int):
    for n in range(3, top + 1):
        yield _circular_record("Prop3.6", {"n": n}, build_cycle(n),
                               paper_formula_circular("cycle", n), MATCH)


def _prop_3_7(top: int):
    for n in range(3, top + 1):
        g = build_wheel(n)
        if n <= 4:
            yield _circular_record("Prop3.7", {"n": n, "pi_sign": "statement"}, g,
                                   paper_formula_circular("wheel", n), MATCH)
            continue
        for pi_sign in ("statement", "proof"):
            # only the stated sign for even n agrees with the definition
            expected = MATCH if (n % 2 == 0 and pi_sign == "statement") else MISMATCH
            yield _circular_record("Prop3.7", {"n": n, "pi_sign": pi_sign}, g,
                                   paper_formula_circular("wheel", n, pi_sign), expected)


def _prop_3_8(top: int):
    for left in range(1, min(top, 6) + 1):
        for right in range(1, top + 1):
            g = build_bipartite_lr(left, right)
            # the published cases use r = max(left, f_right), ignoring right-side weights
            r = max(left, fibonacci(right))
            default_r_value = irr_kc(g, Convention.AGGREGATE)
            # the formula drops the factor `left`; invisible only when each term is zero
            empty_term = right % 2 == 0 and fibonacci(right) == left
            expected = MATCH if left == 1 or empty_term else MISMATCH
            yield _circular_record(
                "Prop3.8", {"left": left, "right": right, "radius": r}, g,
                paper_formula_circular("bipartite", (left, right)),
                expected, r, default_radius_value=default_r_value,
            )


_RUNNERS: dict[str, Callable[[int], Iterable[VerificationRecord]]] = {
    "Table1": lambda top: _table_records("Table1", top),
    "Table2": lambda top: _table_records("Table2", top),
    "Prop3.1": _prop_3_1, "Prop3.2": _prop_3_2, "Prop3.3": _prop_3_3, "Prop3.4": _prop_3_4,
    "Ex1": _ex_1, "Ex2": _ex_2, "Thm3.1": _thm_3_1,
    "Prop3.5": _prop_3_5, "Prop3.6": _prop_3_6, "Prop3.7": _prop_3_7, "Prop3.8": _prop_3_8,
}


def run_suite(claims: Iterable[str] | None = None, max_n: int | None = None) -> list[VerificationRecord]:
    """Run the selected claims in canonical order.

    ``max_n`` caps every swept size parameter; by default each claim uses its
    full range.
    """
    records: list[VerificationRecord] = []
    for claim in resolve_claims(claims):
        top = DEFAULT_RANGES.get(claim, 12)
        if max_n is not None:
            top = max_n if claim in ("Table1", "Table2") else min(top, max_n)
        if top < 1:
            continue
        records.extend(_RUNNERS[claim](top))
    return records


# --- reporting ---------------------------------------------------------------

def jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, (tuple, list)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    return value


def report_json(records: list[VerificationRecord]) -> dict[str, Any]:
    return {
        "records": [
            {
                "claim": r.claim_id,
                "params": jsonable(r.params),
                "convention": r.convention,
                "definitional": jsonable(r.definitional),
                "paper": jsonable(r.paper),
                "verdict": r.verdict,
                "expected": r.expected,
                "tolerance": r.tolerance,
                "extras": jsonable(r.extras),
            }
            for r in records
        ],
        "summary": summarize(records),
    }


def summarize(records: list[VerificationRecord]) -> dict[str, int]:
    return {
        "total": len(records),
        "match": sum(r.verdict == MATCH for r in records),
        "mismatch": sum(r.verdict == MISMATCH for r in records),
        "not_applicable": sum(r.verdict == NOT_APPLICABLE for r in records),
        "unexpected": sum(not r.as_expected for r in records),
    }


def _cell(value: Any) -> str:
    value = jsonable(value)
    if isinstance(value, list):
        return "(" + ", ".join(map(str, value)) + ")"
    if isinstance(value, dict):
        return ", ".join(f"{k}={v}" for k, v in value.items())
    return str(value)


def report_markdown(records: list[VerificationRecord]) -> str:
    lines = [
        "| claim | params | definitional | paper | verdict | expected |",
        "|---|---|---|---|---|---|",
    ]
    for r in records:
        flag = "" if r.as_expected else " (UNEXPECTED)"
        lines.append(
            f"| {r.claim_id} | {_cell(r.params)} | {_cell(r.definitional)} | "
            f"{_cell(r.paper)} | {r.verdict}{flag} | {r.expected} |"
        )
    s = summarize(records)
    lines.append("")
    lines.append(
        f"{s['total']} records: {s['match']} match, {s['mismatch']} mismatch, "
        f"{s['not_applicable']} not applicable, {s['unexpected']} unexpected"
    )
    return "\n".join(lines)
