"""Problem instances, solutions and search statistics."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph


class SearchTimeout(Exception):
    """Raised inside a search once its time limit has passed; ``stats``
    holds the counts reached so far."""

    def __init__(self, stats: "SearchStats | None" = None):
        super().__init__("time limit reached")
        self.stats = stats


@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    max_branching: int = 0
    wall_time: float = 0.0

    def as_json(self) -> dict:
        return {
            "nodes": self.nodes,
            "depth": self.max_depth,
            "max_branching": self.max_branching,
            "time_ms": round(self.wall_time * 1000, 3),
        }


class Tracker:
    """Counts nodes of a search tree and enforces an optional time limit."""

    def __init__(self, time_limit: float | None = None):
        self.stats = SearchStats()
        self._start = time.perf_counter()
        self._deadline = None if time_limit is None else self._start + time_limit

    def enter(self, depth: int) -> None:
        s = self.stats
        s.nodes += 1
        if depth > s.max_depth:
            s.max_depth = depth
        if self._deadline is not None and s.nodes & 255 == 0 and time.perf_counter() > self._deadline:
            raise SearchTimeout(self.finish())

    def branch(self, b: int) -> None:
        if b > self.stats.max_branching:
            self.stats.max_branching = b

    def finish(self) -> SearchStats:
        self.stats.wall_time = time.perf_counter() - self._start
        return self.stats


@dataclass
class Solution:
    """Outcome of a decision solver.

    ``cliques`` is ``None`` for a NO answer.  ``gamma`` carries clique
    weights for the weighted decomposition problem.
    """

    cliques: list | None
    stats: SearchStats = field(default_factory=SearchStats)
    gamma: list | None = None

    @property
    def answer(self) -> bool:
        return self.cliques is not None

    def __bool__(self) -> bool:
        return self.cliques is not None


def _edge_key(e) -> tuple:
    u, v = e
    return (u, v) if u < v else (v, u)


@dataclass
class AwecpInstance:
    """Exact weighted cover: every edge ``e`` lies in exactly ``edge_w[e]``
    cliques and every vertex ``v`` in ``vertex_w`` in exactly
    ``vertex_w[v]`` cliques, using at most ``k`` cliques."""

    graph: Graph
    k: int
    edge_w: dict
    vertex_w: dict = field(default_factory=dict)

    def __post_init__(self):
        self.edge_w = {_edge_key(e): int(w) for e, w in self.edge_w.items()}
        self.vertex_w = {int(v): int(w) for v, w in self.vertex_w.items()}
        _check_weights(self.graph, self.edge_w, self.vertex_w)


@dataclass
class AewcdInstance:
    """Weighted decomposition: at most ``k`` cliques with positive weights
    whose sums match ``edge_w`` on every edge and ``vertex_w`` on every
    listed vertex."""

    graph: Graph
    k: int
    edge_w: dict
    vertex_w: dict = field(default_factory=dict)

    def __post_init__(self):
        self.edge_w = {_edge_key(e): Fraction(w) for e, w in self.edge_w.items()}
        self.vertex_w = {int(v): Fraction(w) for v, w in self.vertex_w.items()}
        _check_weights(self.graph, self.edge_w, self.vertex_w)


def _check_weights(g: Graph, we: dict, ws: dict) -> None:
    if set(we) != set(g.edges):
        missing = set(g.edges) - set(we)
        extra = set(we) - set(g.edges)
        raise ValueError(f"edge weights must cover exactly the edges (missing {sorted(missing)}, extra {sorted(extra)})")
    for e, w in we.items():
        if w <= 0:
            raise ValueError(f"non-positive weight on edge {e}")
    for v, w in ws.items():
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        if w <= 0:
            raise ValueError(f"non-positive weight on vertex {v}")
