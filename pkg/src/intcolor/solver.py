"""Local-search colorings driven by the potential ``sigma = sum_i b_i / p_i``.

A vertex ``v`` with color ``i`` is *unhappy* when ``d_i(v) > p_i * d(v)``.
Moving it to a color ``j`` with ``d_j(v) < p_j * d(v)`` (one always exists
when ``sum(p) >= 1``) lowers sigma by ``d_i(v)/p_i - d_j(v)/p_j > 0``, so the
search terminates. With uniform weights ``1/k`` every move also raises the
mixing number by at least one, which caps the number of moves at ``m``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .graph import Graph, max_degree
from .metrics import Coloring, WeightVector, format_rational
from .rng import SplitMix64


class SolverError(RuntimeError):
    """The step budget ran out. Termination is guaranteed, so this means a bug."""

    def __init__(self, message: str, trace: SolveTrace) -> None:
        super().__init__(message)
        self.trace = trace


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class SolveConfig:
    """``init`` is ``"uniform"`` (everything color 1) or ``"random"`` (SplitMix64
    from ``seed``). ``start`` pins an explicit initial coloring instead."""

    init: str = "uniform"
    seed: Optional[int] = None
    max_steps: Optional[int] = None
    start: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.init not in ("uniform", "random"):
            raise ValueError(f"init must be 'uniform' or 'random', got {self.init!r}")
        if self.init == "random" and self.seed is None:
            raise ValueError("random init requires an explicit seed")

    def initial_coloring(self, n: int, k: int) -> Coloring:
        if self.start is not None:
            if len(self.start) != n:
                raise ValueError(f"start coloring has {len(self.start)} entries, graph has {n}")
            return Coloring(k, self.start)
        if self.init == "uniform":
            return Coloring.uniform(n, k)
        rng = SplitMix64(self.seed)
        return Coloring(k, tuple(1 + rng.next_below(k) for _ in range(n)))


@dataclass(frozen=True)
class Step:
    index: int
    vertex: int
    old: int
    new: int
    sigma_before: Fraction
    sigma_after: Fraction
    mix_before: int
    mix_after: int

    def to_dict(self) -> dict:
        return {
            "step": self.index,
            "vertex": self.vertex,
            "from": self.old,
            "to": self.new,
            "sigma_before": format_rational(self.sigma_before),
            "sigma_after": format_rational(self.sigma_after),
            "mix_before": self.mix_before,
            "mix_after": self.mix_after,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Step:
        return cls(
            d["step"],
            d["vertex"],
            d["from"],
            d["to"],
            Fraction(d["sigma_before"]),
            Fraction(d["sigma_after"]),
            d["mix_before"],
            d["mix_after"],
        )


@dataclass
class SolveTrace:
    """Everything a run did. ``checks`` counts worklist pops, ``updates``
    counts neighbor color-count adjustments; together they bound the work."""

    weights: WeightVector
    initial: Coloring
    final: Optional[Coloring] = None
    steps: list[Step] = field(default_factory=list)
    checks: int = 0
    updates: int = 0

    def to_jsonl(self) -> str:
        return "".join(json.dumps(s.to_dict()) + "\n" for s in self.steps)

    @staticmethod
    def steps_from_jsonl(text: str) -> list[Step]:
        return [Step.from_dict(json.loads(line)) for line in text.splitlines() if line.strip()]


def proportional_coloring(
    g: Graph, p: WeightVector, cfg: SolveConfig = SolveConfig()
) -> tuple[Coloring, SolveTrace]:
    """Find a coloring with ``d_{c(v)}(v) <= p_{c(v)} d(v)`` at every vertex.

    FIFO worklist seeded with all vertices in id order; an unhappy vertex
    moves to the admissible color minimizing ``d_j(v) / p_j`` (lowest index
    on ties) and its neighbors are re-queued.
    """
    k = p.k
    weights = p.entries
    nums = [w.numerator for w in weights]
    dens = [w.denominator for w in weights]
    inv = [1 / w for w in weights]

    init = cfg.initial_coloring(g.n, k)
    trace = SolveTrace(p, init)
    color = [c - 1 for c in init.colors]

    # counts[v][i]: neighbors of v with (0-based) color i
    counts = [[0] * k for _ in range(g.n)]
    for v, nbrs in enumerate(g.adjacency):
        row = counts[v]
        for u in nbrs:
            row[color[u]] += 1
    mono = [0] * k
    for v in range(g.n):
        mono[color[v]] += counts[v][color[v]]
    mono = [b // 2 for b in mono]
    mix = g.m - sum(mono)
    sig = sum((b * inv[i] for i, b in enumerate(mono)), Fraction(0))

    queue = deque(range(g.n))
    queued = [True] * g.n
    while queue:
        v = queue.popleft()
        queued[v] = False
        trace.checks += 1
        deg = len(g.adjacency[v])
        row = counts[v]
        i = color[v]
        # d_i(v) > p_i d(v)  <=>  d_i * den > num * d(v)
        if row[i] * dens[i] <= nums[i] * deg:
            continue
        if cfg.max_steps is not None and len(trace.steps) >= cfg.max_steps:
            trace.final = Coloring(k, tuple(c + 1 for c in color))
            raise SolverError(f"step limit {cfg.max_steps} exceeded", trace)

        best = None
        best_ratio = None
        for j in range(k):
            if row[j] * dens[j] < nums[j] * deg:
                ratio = row[j] * inv[j]
                if best_ratio is None or ratio < best_ratio:
                    best, best_ratio = j, ratio
        if best is None:
            raise AssertionError(f"no admissible color at vertex {v}; weights sum below 1?")
        j = best

        new_sig = sig - row[i] * inv[i] + row[j] * inv[j]
        new_mix = mix + row[i] - row[j]
        trace.steps.append(
            Step(len(trace.steps), v, i + 1, j + 1, sig, new_sig, mix, new_mix)
        )
        mono[i] -= row[i]
        mono[j] += row[j]
        sig, mix = new_sig, new_mix
        color[v] = j
        for u in g.adjacency[v]:
            cu = counts[u]
            cu[i] -= 1
            cu[j] += 1
            trace.updates += 1
            if not queued[u]:
                queued[u] = True
                queue.append(u)

    final = Coloring(k, tuple(c + 1 for c in color))
    trace.final = final
    return final, trace


def integrated_coloring(
    g: Graph, k: int, cfg: SolveConfig = SolveConfig()
) -> tuple[Coloring, SolveTrace]:
    """Coloring where no vertex has more than ``|N(v)|/k`` same-colored neighbors."""
    if k < 2:
        raise PreconditionError(f"integrated coloring needs k >= 2, got {k}")
    return proportional_coloring(g, WeightVector.uniform(k), cfg)


def defective_coloring(
    g: Graph, k: int, u: int, cfg: SolveConfig = SolveConfig()
) -> Coloring:
    """A (k, u)-coloring, guaranteed whenever ``max_degree(g) <= k(u+1) - 1``."""
    if k < 1 or u < 0:
        raise PreconditionError(f"need k >= 1 and u >= 0, got k={k}, u={u}")
    delta = max_degree(g)
    limit = k * (u + 1) - 1
    if delta > limit:
        raise PreconditionError(
            f"max degree {delta} exceeds k(u+1)-1 = {limit}; "
            f"no (k={k}, u={u})-coloring is guaranteed"
        )
    if k == 1:
        # delta <= u here, so one color already has defect at most u
        return Coloring.uniform(g.n, 1)
    return integrated_coloring(g, k, cfg)[0]


def greedy_bound_proper_coloring(g: Graph, cfg: SolveConfig = SolveConfig()) -> Coloring:
    """Proper coloring with at most ``max_degree + 1`` colors."""
    k = max_degree(g) + 1
    if k == 1:
        return Coloring.uniform(g.n, 1)
    return integrated_coloring(g, k, cfg)[0]
