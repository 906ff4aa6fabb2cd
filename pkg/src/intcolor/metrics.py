"""Colorings and the quantities defined over a colored graph.

Every threshold comparison is done on integers or :class:`fractions.Fraction`;
there is no floating point in this module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .graph import Graph


def format_rational(x: Fraction) -> str:
    """Wire form of a rational: always ``"num/den"``."""
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color in ``1..k``, stored as a tuple indexed by vertex."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")
        object.__setattr__(self, "colors", tuple(self.colors))
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise ValueError(f"color {c} of vertex {v} outside 1..{self.k}")

    @classmethod
    def uniform(cls, n: int, k: int, color: int = 1) -> Coloring:
        return cls(k, (color,) * n)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def to_dict(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_dict(cls, d: dict) -> Coloring:
        return cls(int(d["k"]), tuple(int(c) for c in d["colors"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> Coloring:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class WeightVector:
    """Per-color neighborhood fractions ``p_1..p_k``.

    Requires ``0 < p_i <= 1`` and ``sum(p) >= 1``. Zero weights are rejected
    because ``sigma`` divides by them.
    """

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        entries = tuple(Fraction(p) for p in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("weight vector must be non-empty")
        for i, p in enumerate(entries, 1):
            if not 0 < p <= 1:
                raise ValueError(f"weight p_{i} = {p} must satisfy 0 < p <= 1")
        if sum(entries) < 1:
            raise ValueError(f"sum of weights must be >= 1 (got {sum(entries)})")

    @classmethod
    def uniform(cls, k: int) -> WeightVector:
        return cls((Fraction(1, k),) * k)

    @classmethod
    def parse(cls, text: str) -> WeightVector:
        """Parse ``"n1/d1,n2/d2,..."``."""
        try:
            entries = tuple(parse_rational(s) for s in text.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse weights {text!r}: {exc}") from None
        return cls(entries)

    @property
    def k(self) -> int:
        return len(self.entries)

    def __getitem__(self, color: int) -> Fraction:
        """Weight of a 1-based color."""
        return self.entries[color - 1]

    def format(self) -> list[str]:
        return [format_rational(p) for p in self.entries]


@dataclass(frozen=True)
class Violation:
    vertex: int
    observed: int
    threshold: Fraction

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "observed": self.observed,
            "threshold": format_rational(self.threshold),
        }


@dataclass(frozen=True)
class VerifyReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"ok": self.ok, "violations": [x.to_dict() for x in self.violations]}


def _check_sizes(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise ValueError(f"coloring has {len(c)} entries but graph has {g.n} vertices")


def color_degree(g: Graph, c: Coloring, v: int, i: int) -> int:
    """Number of neighbors of ``v`` with color ``i``."""
    return sum(1 for u in g.adjacency[v] if c[u] == i)


def same_color_degree(g: Graph, c: Coloring, v: int) -> int:
    return color_degree(g, c, v, c[v])


def monochrome_edge_counts(g: Graph, c: Coloring) -> list[int]:
    """``b[i-1]`` = number of edges with both endpoints colored ``i``."""
    _check_sizes(g, c)
    b = [0] * c.k
    for u, v in g.edges():
        if c[u] == c[v]:
            b[c[u] - 1] += 1
    return b


def sigma(g: Graph, c: Coloring, p: WeightVector) -> Fraction:
    """Potential ``sum_i b_i / p_i``; zero exactly on proper colorings."""
    if c.k != p.k:
        raise ValueError(f"coloring has k={c.k} but weight vector has {p.k} entries")
    return sum(
        (Fraction(b) / w for b, w in zip(monochrome_edge_counts(g, c), p.entries)),
        Fraction(0),
    )


def mixing_number(g: Graph, c: Coloring) -> int:
    """Count of edges whose endpoints have different colors."""
    _check_sizes(g, c)
    return sum(1 for u, v in g.edges() if c[u] != c[v])


def is_k_secure(g: Graph, c: Coloring, v: int, k: int) -> bool:
    """True iff more than ``|N(v)|/k`` neighbors share ``v``'s color."""
    return k * same_color_degree(g, c, v) > g.degree(v)


def _report(items: Iterable[Violation]) -> VerifyReport:
    return VerifyReport(tuple(items))


def verify_integrated(g: Graph, c: Coloring, k: int) -> VerifyReport:
    _check_sizes(g, c)
    return _report(
        Violation(v, same_color_degree(g, c, v), Fraction(g.degree(v), k))
        for v in range(g.n)
        if is_k_secure(g, c, v, k)
    )


def verify_proportional(g: Graph, c: Coloring, p: WeightVector) -> VerifyReport:
    """Check ``d_{c(v)}(v) <= p_{c(v)} * d(v)`` at every vertex."""
    _check_sizes(g, c)
    if c.k != p.k:
        raise ValueError(f"coloring has k={c.k} but weight vector has {p.k} entries")
    out = []
    for v in range(g.n):
        same = same_color_degree(g, c, v)
        bound = p[c[v]] * g.degree(v)
        if same > bound:
            out.append(Violation(v, same, bound))
    return _report(out)


def verify_defective(g: Graph, c: Coloring, u: int) -> VerifyReport:
    """At most ``u`` same-colored neighbors per vertex; ``u = 0`` is properness."""
    if u < 0:
        raise ValueError("defect bound u must be non-negative")
    _check_sizes(g, c)
    out = []
    for v in range(g.n):
        same = same_color_degree(g, c, v)
        if same > u:
            out.append(Violation(v, same, Fraction(u)))
    return _report(out)


def verify_proper(g: Graph, c: Coloring) -> VerifyReport:
    return verify_defective(g, c, 0)


def verify_unfriendly_partition(g: Graph, c: Coloring) -> VerifyReport:
    """Same-colored neighbors never outnumber differently-colored ones."""
    _check_sizes(g, c)
    out = []
    for v in range(g.n):
        same = same_color_degree(g, c, v)
        if same > g.degree(v) - same:
            out.append(Violation(v, same, Fraction(g.degree(v), 2)))
    return _report(out)

