"""Khazamula irregularity of a digraph, linear and circular integrands.

Each vertex contributes the definite integral of the integrand from its signed
Fibonacci weight up to the largest total degree among its out-neighbours.
Vertices without out-neighbours are headless and contribute nothing.

For ``f(x) = m*x + c`` every integral is a :class:`LinearForm` ``(A, B)``
meaning ``A*m + B*c``, so totals are exact rationals. For the circle
``f(x) = sqrt(r^2 - x^2)`` the closed-form antiderivative is used, and
:func:`quad_reference` gives an independent numerical check.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import NamedTuple

from scipy.integrate import quad

from .fibonacci import weight_vector
from .graph import Digraph

Number = int | float | Fraction


class Convention(enum.Enum):
    """How absolute values combine the per-vertex integrals.

    ``PER_TERM`` takes ``|term|`` for each vertex and sums. ``AGGREGATE`` sums
    the signed terms and takes one absolute value at the end.
    """

    PER_TERM = "per-term"
    AGGREGATE = "aggregate"


@dataclass(frozen=True)
class LinearParams:
    slope: Fraction
    intercept: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "slope", Fraction(self.slope))
        object.__setattr__(self, "intercept", Fraction(self.intercept))


@dataclass(frozen=True)
class LinearForm:
    a: Fraction
    b: Fraction

    def __add__(self, other: LinearForm) -> LinearForm:
        return LinearForm(self.a + other.a, self.b + other.b)

    def __neg__(self) -> LinearForm:
        return LinearForm(-self.a, -self.b)

    def __mul__(self, k: Number) -> LinearForm:
        return LinearForm(self.a * k, self.b * k)

    __rmul__ = __mul__

    def evaluate(self, p: LinearParams) -> Fraction:
        return self.a * p.slope + self.b * p.intercept


ZERO_FORM = LinearForm(Fraction(0), Fraction(0))


class TermBound(NamedTuple):
    vertex: int
    lower: int
    upper: int | None


class BoundError(ValueError):
    """An integral bound lies outside ``[-r, r]``."""


def head_degree(g: Digraph, v: int) -> int | None:
    """Largest total degree among the out-neighbours of ``v``; ``None`` if headless."""
    g._check_vertex(v)
    heads = g.out_neighbors[v]
    if not heads:
        return None
    return max(g.degree(u).total for u in heads)


def term_bounds(g: Digraph) -> list[TermBound]:
    weights = weight_vector(g)
    return [TermBound(v, weights[v - 1], head_degree(g, v)) for v in g.vertices]


def linear_integral(a: Number, b: Number) -> LinearForm:
    """Integral of ``m*x + c`` from ``a`` to ``b`` as the form ``((b^2-a^2)/2, b-a)``."""
    a, b = Fraction(a), Fraction(b)
    return LinearForm((b * b - a * a) / 2, b - a)


@lru_cache(maxsize=512)
def _term_forms(g: Digraph) -> tuple[tuple[TermBound, LinearForm], ...]:
    return tuple(
        (t, ZERO_FORM if t.upper is None else linear_integral(t.lower, t.upper))
        for t in term_bounds(g)
    )


def irr_k_terms(g: Digraph) -> list[tuple[TermBound, LinearForm]]:
    return list(_term_forms(g))


def combine(values, conv: Convention):
    if conv is Convention.PER_TERM:
        return sum(abs(v) for v in values)
    return abs(sum(values))


def irr_k(g: Digraph, p: LinearParams, conv: Convention = Convention.PER_TERM) -> Fraction:
    values = [form.evaluate(p) for _, form in irr_k_terms(g)]
    return Fraction(combine(values, conv))


def radius(g: Digraph) -> int:
    """Largest of the degrees of vertices with an in-arc and all weight magnitudes."""
    covered = [g.degree(v).total for v in g.vertices if g.degree(v).in_deg >= 1]
    r = max(covered + [abs(w) for w in weight_vector(g)])
    if r <= 0:
        raise BoundError("radius undefined: graph has no arcs")
    return r


def _check_bounds(a: float, b: float, r: float) -> None:
    if r <= 0:
        raise BoundError(f"radius must be positive, got {r}")
    for x in (a, b):
        if abs(x) > r:
            raise BoundError(f"bound {x} outside [-{r}, {r}]")


def _circle_antiderivative(x: float, r: float) -> float:
    # (r-x)(r+x) and atan2 stay accurate near x = +-r, where asin(x/r) loses the sqrt term
    s = math.sqrt(max((r - x) * (r + x), 0.0))
    return 0.5 * x * s + 0.5 * r * r * math.atan2(x, s)


def circ_integral(a: float, b: float, r: float) -> float:
    _check_bounds(a, b, r)
    if a == b:
        return 0.0
    return _circle_antiderivative(float(b), r) - _circle_antiderivative(float(a), r)


def quad_reference(a: float, b: float, r: float) -> float:
    """Adaptive quadrature of ``sqrt(r^2 - x^2)`` on ``[a, b]``, independent of the antiderivative."""
    _check_bounds(a, b, r)
    value, _ = quad(
        lambda x: math.sqrt(max(r * r - x * x, 0.0)),
        float(a), float(b), epsabs=1e-10, epsrel=1e-12, limit=200,
    )
    return value


def irr_kc_terms(g: Digraph, r: float | None = None, integrate=circ_integral) -> list[tuple[TermBound, float]]:
    if r is None:
        r = radius(g)
    return [
        (t, 0.0 if t.upper is None else integrate(t.lower, t.upper, r))
        for t in term_bounds(g)
    ]


def irr_kc(g: Digraph, conv: Convention = Convention.PER_TERM, r_override: float | None = None) -> float:
    values = [v for _, v in irr_kc_terms(g, r_override)]
    return float(combine(values, conv))
