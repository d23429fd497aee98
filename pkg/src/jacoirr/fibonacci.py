"""Fibonacci numbers, Zeckendorf decomposition and signed Fibonacci vertex weights.

Indexing is ``f_0 = 0, f_1 = f_2 = 1``. Zeckendorf indices start at 2, so
shifting every index down by one never reaches ``f_0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Digraph

_FIBS: list[int] = [0, 1]


def fibonacci(k: int) -> int:
    if k < 0:
        raise ValueError(f"Fibonacci index must be non-negative, got {k}")
    while len(_FIBS) <= k:
        _FIBS.append(_FIBS[-1] + _FIBS[-2])
    return _FIBS[k]


@dataclass(frozen=True)
class ZeckendorfRep:
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = self.indices
        if not idx or idx[-1] < 2:
            raise ValueError(f"indices must be non-empty and >= 2: {idx}")
        if any(a - b < 2 for a, b in zip(idx, idx[1:])):
            raise ValueError(f"indices must decrease with gaps of at least 2: {idx}")

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(fibonacci(i) for i in self.indices)

    @property
    def value(self) -> int:
        return sum(self.values)


@lru_cache(maxsize=4096)
def zeckendorf(n: int) -> ZeckendorfRep:
    """Greedy Zeckendorf decomposition of a positive integer."""
    if n < 1:
        raise ValueError(f"Zeckendorf representation needs n >= 1, got {n}")
    k = 2
    while fibonacci(k + 1) <= n:
        k += 1
    indices = []
    rest = n
    while rest:
        if fibonacci(k) <= rest:
            indices.append(k)
            rest -= fibonacci(k)
            k -= 2
        else:
            k -= 1
    return ZeckendorfRep(tuple(indices))


def shift_down_sum(rep: ZeckendorfRep) -> int:
    return sum(fibonacci(i - 1) for i in rep.indices)


def weight_for_degree(d: int) -> int:
    """Signed Fibonacci weight: ``-f_d`` for odd ``d``, ``+f_d`` for even ``d``."""
    return -fibonacci(d) if d % 2 else fibonacci(d)


def weight_vector(g: Digraph) -> tuple[int, ...]:
    return tuple(weight_for_degree(d) for d in g.total_degrees())
