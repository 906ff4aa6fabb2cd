"""Brute-force ground truth for small graphs.

Every function walks all ``k**n`` colorings in lexicographic order (vertex 0
most significant, colors ``1..k``) without materializing them. Predicates are
evaluated from the raw edge list here rather than through the solver's
incremental state, so the two stay independent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .graph import Graph
from .metrics import Coloring, WeightVector


class EnumerationLimitExceeded(ValueError):
    def __init__(self, required: int, limit: int) -> None:
        super().__init__(
            f"enumeration needs {required} colorings but the limit is {limit}"
        )
        self.required = required
        self.limit = limit


@dataclass(frozen=True)
class OracleLimit:
    max_enumeration: int = 10**7


@dataclass(frozen=True)
class SearchResult:
    exists: bool
    witness: Optional[Coloring]
    count: int


def _colorings(g: Graph, k: int, lim: OracleLimit) -> Iterator[tuple[int, ...]]:
    required = k**g.n
    if required > lim.max_enumeration:
        raise EnumerationLimitExceeded(required, lim.max_enumeration)
    return itertools.product(range(1, k + 1), repeat=g.n)


def _same_counts(g: Graph, colors: tuple[int, ...]) -> list[int]:
    same = [0] * g.n
    for u, v in g.edges():
        if colors[u] == colors[v]:
            same[u] += 1
            same[v] += 1
    return same


def is_integrated(g: Graph, colors: tuple[int, ...], k: int) -> bool:
    same = _same_counts(g, colors)
    return all(k * same[v] <= len(g.adjacency[v]) for v in range(g.n))


def integrated_colorings(
    g: Graph, k: int, lim: OracleLimit = OracleLimit()
) -> Iterator[Coloring]:
    """Every integrated k-coloring, in lexicographic order."""
    for colors in _colorings(g, k, lim):
        if is_integrated(g, colors, k):
            yield Coloring(k, colors)


def exhaustive_integrated_search(
    g: Graph, k: int, lim: OracleLimit = OracleLimit()
) -> SearchResult:
    witness = None
    count = 0
    for c in integrated_colorings(g, k, lim):
        if witness is None:
            witness = c
        count += 1
    return SearchResult(witness is not None, witness, count)


def exact_max_cut(g: Graph, k: int, lim: OracleLimit = OracleLimit()) -> int:
    """Largest number of edges crossing any k-partition."""
    edges = list(g.edges())
    best = 0
    for colors in _colorings(g, k, lim):
        cut = sum(1 for u, v in edges if colors[u] != colors[v])
        if cut > best:
            best = cut
    return best


def _sigma(edges: list[tuple[int, int]], colors: tuple[int, ...], p: WeightVector) -> Fraction:
    b = [0] * p.k
    for u, v in edges:
        if colors[u] == colors[v]:
            b[colors[u] - 1] += 1
    return sum((Fraction(x) / w for x, w in zip(b, p.entries)), Fraction(0))


def sigma_minimizers(
    g: Graph, p: WeightVector, lim: OracleLimit = OracleLimit()
) -> tuple[Fraction, list[Coloring]]:
    """The minimum of sigma and every coloring attaining it, lexicographically."""
    edges = list(g.edges())
    best: Optional[Fraction] = None
    winners: list[tuple[int, ...]] = []
    for colors in _colorings(g, p.k, lim):
        s = _sigma(edges, colors, p)
        if best is None or s < best:
            best, winners = s, [colors]
        elif s == best:
            winners.append(colors)
    assert best is not None
    return best, [Coloring(p.k, c) for c in winners]


def min_sigma(
    g: Graph, p: WeightVector, lim: OracleLimit = OracleLimit()
) -> tuple[Fraction, Coloring]:
    """Exact minimum of sigma and its lexicographically first minimizer."""
    edges = list(g.edges())
    best: Optional[Fraction] = None
    arg: tuple[int, ...] = ()
    for colors in _colorings(g, p.k, lim):
        s = _sigma(edges, colors, p)
        if best is None or s < best:
            best, arg = s, colors
    assert best is not None
    return best, Coloring(p.k, arg)
