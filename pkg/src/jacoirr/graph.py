"""Simple digraphs on vertices ``1..n``, degree bookkeeping and generators.

Arcs are stored as a sorted tuple of ``(tail, head)`` pairs so that equal
graphs compare and hash equal and iteration order is deterministic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from operator import itemgetter
from typing import Iterable, NamedTuple, Sequence

Arc = tuple[int, int]


class GraphError(ValueError):
    """Raised for arcs that would make a digraph non-simple or out of range."""

    def __init__(self, message: str, arc: Arc | None = None):
        super().__init__(message)
        self.arc = arc


class DegreeTriple(NamedTuple):
    in_deg: int
    out_deg: int
    total: int


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        if getattr(self, "_trusted", False):
            return
        if self.n < 1:
            raise GraphError(f"vertex count must be positive, got {self.n}")
        seen: set[Arc] = set()
        for arc in self.arcs:
            tail, head = arc
            if not (1 <= tail <= self.n and 1 <= head <= self.n):
                raise GraphError(f"label out of range 1..{self.n} in arc {arc}", arc)
            if tail == head:
                raise GraphError(f"self-loop {arc}", arc)
            if arc in seen:
                raise GraphError(f"duplicate arc {arc}", arc)
            seen.add(arc)
        object.__setattr__(self, "arcs", tuple(sorted(self.arcs)))

    @classmethod
    def _from_trusted(cls, n: int, arcs: tuple[Arc, ...]) -> Digraph:
        """Build from arcs already known to be valid and sorted (generators only)."""
        g = cls.__new__(cls)
        object.__setattr__(g, "_trusted", True)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "arcs", arcs)
        return g

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Out-neighbour tuples indexed by label (index 0 is unused)."""
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for tail, head in self.arcs:
            adj[tail].append(head)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def _degrees(self) -> tuple[DegreeTriple, ...]:
        outdeg = Counter(map(itemgetter(0), self.arcs))
        indeg = Counter(map(itemgetter(1), self.arcs))
        return tuple(
            DegreeTriple(indeg[v], outdeg[v], indeg[v] + outdeg[v])
            for v in range(self.n + 1)
        )

    def degree(self, v: int) -> DegreeTriple:
        self._check_vertex(v)
        return self._degrees[v]

    def total_degrees(self) -> list[int]:
        return [t.total for t in self._degrees[1:]]

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise GraphError(f"unknown vertex {v}; labels are 1..{self.n}")

    def relabel(self, perm: Sequence[int]) -> Digraph:
        """Return the graph with vertex ``v`` renamed ``perm[v - 1]``."""
        if sorted(perm) != list(self.vertices):
            raise GraphError("relabeling must be a permutation of 1..n")
        return Digraph(self.n, tuple((perm[t - 1], perm[h - 1]) for t, h in self.arcs))


@dataclass(frozen=True)
class UndirectedView:
    n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u - 1] += 1
            deg[v - 1] += 1
        return tuple(deg)


def make_digraph(n: int, arcs: Iterable[Arc]) -> Digraph:
    return Digraph(n, tuple((int(t), int(h)) for t, h in arcs))


def degree_profile(g: Digraph) -> tuple[list[DegreeTriple], int]:
    """Per-vertex degree triples in label order, and the maximum total degree."""
    triples = [g.degree(v) for v in g.vertices]
    return triples, max(t.total for t in triples)


def underlying_simple_graph(g: Digraph) -> UndirectedView:
    edges = {(min(t, h), max(t, h)) for t, h in g.arcs}
    return UndirectedView(g.n, tuple(sorted(edges)))


def build_path(n: int) -> Digraph:
    if n < 2:
        raise GraphError(f"a directed path needs n >= 2, got {n}")
    return Digraph(n, tuple((i, i + 1) for i in range(1, n)))


def build_cycle(n: int) -> Digraph:
    if n < 3:
        raise GraphError(f"a directed cycle needs n >= 3, got {n}")
    return Digraph(n, tuple((i, i + 1) for i in range(1, n)) + ((n, 1),))


def build_wheel(n: int) -> Digraph:
    """Wheel on ``n`` rim vertices plus axle; the axle is vertex 1.

    Spokes run axle -> rim and the rim ``2 -> 3 -> ... -> n+1 -> 2`` is a
    directed cycle.
    """
    if n < 3:
        raise GraphError(f"a wheel needs at least 3 rim vertices, got {n}")
    spokes = tuple((1, v) for v in range(2, n + 2))
    rim = tuple((v, v + 1) for v in range(2, n + 1)) + ((n + 1, 2),)
    return Digraph(n + 1, spokes + rim)


def build_bipartite_lr(p: int, q: int) -> Digraph:
    """Complete bipartite graph with every arc from left ``1..p`` to right ``p+1..p+q``."""
    if p < 1 or q < 1:
        raise GraphError(f"both sides must be non-empty, got ({p}, {q})")
    return Digraph(p + q, tuple((i, j) for i in range(1, p + 1) for j in range(p + 1, p + q + 1)))


def directed_join(g: Digraph, h: Digraph) -> Digraph:
    """Directed join: ``h`` is shifted to labels ``n+1..n+m`` and every g-vertex points at every h-vertex."""
    n, m = g.n, h.n
    shifted = tuple((t + n, hd + n) for t, hd in h.arcs)
    cross = tuple((v, u) for v in range(1, n + 1) for u in range(n + 1, n + m + 1))
    return Digraph(n + m, g.arcs + shifted + cross)
