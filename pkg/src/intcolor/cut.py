"""k-way cuts read off integrated colorings."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .metrics import Coloring
from .solver import SolveConfig, integrated_coloring


@dataclass(frozen=True)
class Partition:
    """``k`` disjoint vertex tuples covering the graph; empty parts are allowed."""

    k: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(tuple(sorted(p)) for p in self.parts))
        if len(self.parts) != self.k:
            raise ValueError(f"expected {self.k} parts, got {len(self.parts)}")

    def to_dict(self) -> dict:
        return {"k": self.k, "parts": [list(p) for p in self.parts]}

    @classmethod
    def from_dict(cls, d: dict) -> Partition:
        return cls(int(d["k"]), tuple(tuple(int(v) for v in p) for p in d["parts"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> Partition:
        return cls.from_dict(json.loads(text))


def partition_from_coloring(c: Coloring) -> Partition:
    parts: list[list[int]] = [[] for _ in range(c.k)]
    for v, col in enumerate(c.colors):
        parts[col - 1].append(v)
    return Partition(c.k, tuple(tuple(p) for p in parts))


def cut_size(g: Graph, part: Partition) -> int:
    """Edges with endpoints in different parts. The partition must cover ``V(g)`` exactly."""
    owner = [-1] * g.n
    for idx, p in enumerate(part.parts):
        for v in p:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} is not in the graph")
            if owner[v] != -1:
                raise ValueError(f"vertex {v} appears in parts {owner[v]} and {idx}")
            owner[v] = idx
    missing = [v for v in range(g.n) if owner[v] == -1]
    if missing:
        raise ValueError(f"vertices missing from every part: {missing}")
    return sum(1 for u, v in g.edges() if owner[u] != owner[v])


def mixed_edge_lower_bound(m: int, k: int) -> Fraction:
    """``(k-1) m / k``: mixed edges guaranteed by any integrated k-coloring."""
    if k < 2 or m < 0:
        raise ValueError(f"need k >= 2 and m >= 0, got k={k}, m={m}")
    return Fraction((k - 1) * m, k)


def mixed_edge_floor(m: int, k: int) -> int:
    """Integer form of :func:`mixed_edge_lower_bound` (its ceiling)."""
    return math.ceil(mixed_edge_lower_bound(m, k))


def k_max_cut(g: Graph, k: int, cfg: SolveConfig = SolveConfig()) -> tuple[Partition, int]:
    """Partition into ``k`` parts cutting at least ``ceil((k-1)m/k)`` edges."""
    coloring, _ = integrated_coloring(g, k, cfg)
    part = partition_from_coloring(coloring)
    return part, cut_size(g, part)
