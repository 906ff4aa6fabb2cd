"""Simple undirected graphs: representation, DIMACS / edge-list I/O, generators.

Vertices are 0-based internally. DIMACS files are 1-based; the translation
happens only in :func:`load_dimacs` and :func:`serialize_dimacs`.
"""

from __future__ import annotations

import warnings
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .rng import SplitMix64

Text = Union[str, bytes]

FAMILIES = ("complete", "cycle", "path", "star", "petersen")


class GraphFormatError(ValueError):
    """Malformed graph input."""


class DimacsWarning(UserWarning):
    """Recoverable inconsistency in a DIMACS file (e.g. edge count mismatch)."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph stored as sorted neighbor tuples."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length must equal n")
        for v, nbrs in enumerate(self.adjacency):
            for a, b in zip(nbrs, nbrs[1:]):
                if a >= b:
                    raise ValueError(f"neighbor list of {v} is not strictly increasing")
            for u in nbrs:
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
        # symmetry: every (v, u) has a matching (u, v)
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not _sorted_contains(self.adjacency[u], v):
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, collapsing duplicate and reversed edges.

        Raises ``ValueError`` on self-loops or out-of-range endpoints.
        """
        if n < 0:
            raise ValueError("n must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if v > u:
                    yield u, v

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n


def _sorted_contains(seq: tuple[int, ...], x: int) -> bool:
    i = bisect_left(seq, x)
    return i < len(seq) and seq[i] == x


def max_degree(g: Graph) -> int:
    """Largest neighbor-list length; 0 for edgeless or empty graphs."""
    return max((len(a) for a in g.adjacency), default=0)


def _lines(text: Text) -> list[str]:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    return text.splitlines()


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integer, got {token!r}") from None


def load_dimacs(text: Text) -> Graph:
    """Parse DIMACS ``.col`` edge format.

    Accepts ``c`` comments, a single ``p edge N M`` line (``p col`` is also
    accepted) and ``e u v`` lines with 1-based ids. Duplicate edges in either
    orientation collapse to one; if the deduplicated count differs from ``M``
    a :class:`DimacsWarning` is issued.
    """
    n: int | None = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(_lines(text), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate 'p' line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError(f"line {lineno}: expected 'p edge N M'")
            n = _int(parts[2], lineno)
            declared_m = _int(parts[3], lineno)
            if n < 0 or declared_m < 0:
                raise GraphFormatError(f"line {lineno}: negative count in 'p' line")
        elif tag == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: 'e' line before 'p' line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e u v'")
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(f"line {lineno}: vertex {x} out of range 1..{n}")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop on vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise GraphFormatError("missing 'p edge N M' line")
    g = Graph.from_edges(n, edges)
    if g.m != declared_m:
        warnings.warn(
            f"'p' line declares {declared_m} edges, found {g.m} after deduplication",
            DimacsWarning,
            stacklevel=2,
        )
    return g


def serialize_dimacs(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def load_edge_list(text: Text) -> Graph:
    """Parse a 0-based ``u v`` edge list.

    An optional ``n=<N>`` line fixes the vertex count (needed for trailing
    isolated vertices); otherwise it is one more than the largest id seen.
    Blank lines and ``#`` comments are skipped.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(_lines(text), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate 'n=' header")
            n = _int(line[2:].strip(), lineno)
            if n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop on vertex {u}")
        edges.append((u, v))
    top = 1 + max((max(e) for e in edges), default=-1)
    if n is None:
        n = top
    elif top > n:
        raise GraphFormatError(f"vertex id {top - 1} exceeds header n={n}")
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    out = [f"n={g.n}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) driven by SplitMix64.

    Pairs ``(i, j)``, ``i < j``, are visited in lexicographic order; each
    consumes one generator output ``x`` and is kept iff
    ``(x >> 11) * 2**-53 < p``. This is exact in IEEE doubles, so the same
    ``(n, p, seed)`` gives the same graph on any platform.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = SplitMix64(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.next_float() < p]
    return Graph.from_edges(n, edges)


def gen_named(family: str, n: int = 0) -> Graph:
    """Standard graph families.

    ``star`` with ``n`` vertices has center 0 and ``n - 1`` leaves.
    ``petersen`` ignores ``n``.
    """
    if family == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph.from_edges(10, outer + spokes + inner)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if n < 1:
        raise ValueError(f"{family} needs n >= 1")
    if family == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif family == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif family == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    else:
        edges = [(0, i) for i in range(1, n)]
    return Graph.from_edges(n, edges)
