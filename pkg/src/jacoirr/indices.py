"""Zagreb-type indices on the undirected view of a digraph.

The classical family uses vertex degrees; the ``f±`` family replaces each
degree by the vertex's signed Fibonacci weight. Both families share one
implementation parameterised by the per-vertex values.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

from .fibonacci import weight_vector
from .graph import UndirectedView, underlying_simple_graph
from .jaco import build_jaco, jaco_out_degree


@dataclass(frozen=True)
class ZagrebIndices:
    m1: int
    m2: int
    m3: int
    m4: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class FZagrebIndices:
    z1: int
    z2: int
    z3: int
    z4: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def _four_sums(g: UndirectedView, values: Sequence[int]) -> tuple[int, int, int, int]:
    if g.n == 1:
        return 0, 0, 0, 0
    first = sum(x * x for x in values)
    second = sum(values[u - 1] * values[v - 1] for u, v in g.edges)
    third = sum(abs(values[u - 1] - values[v - 1]) for u, v in g.edges)
    # sum of |x_i - x_j| over unordered pairs via sorted prefix sums
    fourth = 0
    running = 0
    for k, x in enumerate(sorted(values)):
        fourth += k * x - running
        running += x
    return first, second, third, fourth


def zagreb(g: UndirectedView) -> ZagrebIndices:
    return ZagrebIndices(*_four_sums(g, g.degrees))


def f_zagreb(g: UndirectedView, weights: Sequence[int]) -> FZagrebIndices:
    if len(weights) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(weights)}")
    return FZagrebIndices(*_four_sums(g, weights))


def first_zagreb_edge_form(g: UndirectedView, values: Sequence[int], absolute: bool = False) -> int:
    """Edge-sum companion of the first index: sum over edges of ``x_u + x_v``.

    For degrees this equals the vertex form. For signed weights
    (``absolute=True`` sums ``|x_u| + |x_v|``) it generally does not.
    """
    if absolute:
        return sum(abs(values[u - 1]) + abs(values[v - 1]) for u, v in g.edges)
    return sum(values[u - 1] + values[v - 1] for u, v in g.edges)


@dataclass(frozen=True)
class Table2Row:
    n: int
    d_minus: int
    d_plus: int
    z1: int
    z2: int
    z3: int
    z4: int


def table2_row(n: int) -> Table2Row:
    g = build_jaco(n)
    d_plus = jaco_out_degree(n)
    z = f_zagreb(underlying_simple_graph(g), weight_vector(g))
    return Table2Row(n, n - d_plus, d_plus, z.z1, z.z2, z.z3, z.z4)
