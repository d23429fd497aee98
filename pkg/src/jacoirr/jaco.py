"""Finite Jaco graphs ``J_n(1)``.

Vertex ``v_i`` of the infinite graph has degree ``i`` and out-degree given by
Bettina's theorem (the index-shifted Zeckendorf sum of ``i``). The finite
graph keeps ``v_1..v_n`` and drops arcs leaving that range, so a vertex whose
out-arcs would reach past ``v_n`` loses the overhang.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import repeat

from .fibonacci import shift_down_sum, weight_for_degree, zeckendorf
from .graph import Digraph


@dataclass(frozen=True)
class JacoRow:
    i: int
    d_minus: int
    d_plus_inf: int
    degree_finite: int
    weight: int


def jaco_out_degree(i: int) -> int:
    """Out-degree of ``v_i`` in the infinite Jaco graph."""
    if i < 1:
        raise ValueError(f"vertex index must be >= 1, got {i}")
    return shift_down_sum(zeckendorf(i))


def jaco_degree_sequence(n: int) -> list[JacoRow]:
    if n < 1:
        raise ValueError(f"Jaco graph order must be >= 1, got {n}")
    if n == 1:
        return [JacoRow(1, 0, jaco_out_degree(1), 0, 0)]
    rows = []
    for j in range(1, n + 1):
        d_plus = jaco_out_degree(j)
        d_minus = j - d_plus
        # the out-arcs of v_j fit inside J_n(1) only when j + d+ <= n
        degree = j if j + d_plus <= n else d_minus + (n - j)
        rows.append(JacoRow(j, d_minus, d_plus, degree, weight_for_degree(degree)))
    return rows


def build_jaco(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"Jaco graph order must be >= 1, got {n}")
    arcs: list[tuple[int, int]] = []
    for i in range(1, n + 1):
        # v_i points at the next d+(v_i) vertices, cut off at v_n
        arcs.extend(zip(repeat(i), range(i + 1, min(n, i + jaco_out_degree(i)) + 1)))
    return Digraph._from_trusted(n, tuple(arcs))


def jaconian_vertices(n: int) -> frozenset[int]:
    """Vertices attaining the maximum degree of the finite graph ``J_n(1)``."""
    rows = jaco_degree_sequence(n)
    top = max(r.degree_finite for r in rows)
    return frozenset(r.i for r in rows if r.degree_finite == top)


def fpm_sequence(n: int) -> tuple[int, ...]:
    return tuple(r.weight for r in jaco_degree_sequence(n))
