"""Cover under construction with per-vertex and per-clique representative sets.

For every clique ``C_l`` the state keeps ``D[l]``, the vertices that lie in
``C_l`` or are adjacent to all of it, and for every vertex ``z`` the set
``R[z]`` of cliques that list ``z`` in their ``D``.  Both are updated
incrementally as edges are pushed into cliques and restored exactly on undo.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .graph import Graph


@dataclass(frozen=True)
class UndoFrame:
    kind: str  # "cover" or "new"
    l: int
    evicted: tuple
    x: int
    y: int
    x_added: bool
    y_added: bool


class CoverState:
    """Mutable cover with an undo journal.

    ``incl[e]`` counts the cliques containing edge ``e`` (indexed as in
    ``graph.edges``) and ``vcount[v]`` the cliques containing ``v``.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.cliques: list[set] = []
        self.R: list[set] = [set() for _ in range(g.n)]
        self.D: list[set] = []
        self.incl = [0] * g.m
        self.vcount = [0] * g.n
        self.uncovered = g.m
        self.journal: list[UndoFrame] = []

    def covered(self, u: int, v: int) -> bool:
        return self.incl[self.g.edge_index[(u, v)]] > 0

    def _join(self, v: int, c: set) -> None:
        idx = self.g.edge_index
        incl = self.incl
        for z in c:
            e = idx[(v, z)]
            if incl[e] == 0:
                self.uncovered -= 1
            incl[e] += 1
        c.add(v)
        self.vcount[v] += 1

    def _leave(self, v: int, c: set) -> None:
        c.discard(v)
        self.vcount[v] -= 1
        idx = self.g.edge_index
        incl = self.incl
        for z in c:
            e = idx[(v, z)]
            incl[e] -= 1
            if incl[e] == 0:
                self.uncovered += 1

    def cover_edge_in_clique(self, x: int, y: int, l: int) -> UndoFrame:
        """Grow clique ``l`` by the edge ``{x, y}`` (``x == y`` adds one vertex)."""
        if not (0 <= l < len(self.cliques)) or l not in self.R[x] or l not in self.R[y]:
            raise ValueError(f"clique {l} cannot absorb ({x}, {y})")
        adj = self.g.adj
        if x != y and y not in adj[x]:
            raise ValueError(f"({x}, {y}) is not an edge")
        ax, ay = adj[x], adj[y]
        d = self.D[l]
        evicted = tuple(sorted(z for z in d if z != x and z != y and (z not in ax or z not in ay)))
        for z in evicted:
            self.R[z].discard(l)
            d.discard(z)
        c = self.cliques[l]
        x_added = x not in c
        if x_added:
            self._join(x, c)
        y_added = y not in c
        if y_added:
            self._join(y, c)
        frame = UndoFrame("cover", l, evicted, x, y, x_added, y_added)
        self.journal.append(frame)
        return frame

    def undo_cover_edge(self, frame: UndoFrame) -> None:
        if not self.journal or self.journal[-1] is not frame or frame.kind != "cover":
            raise ValueError("frame is not the most recent cover step")
        self.journal.pop()
        c = self.cliques[frame.l]
        if frame.y_added:
            self._leave(frame.y, c)
        if frame.x_added:
            self._leave(frame.x, c)
        d = self.D[frame.l]
        for z in frame.evicted:
            d.add(z)
            self.R[z].add(frame.l)

    def add_new_clique(self, x: int, y: int) -> UndoFrame:
        g = self.g
        if x != y and y not in g.adj[x]:
            raise ValueError(f"({x}, {y}) is not an edge")
        l = len(self.cliques)
        c: set = set()
        self.cliques.append(c)
        self._join(x, c)
        if y != x:
            self._join(y, c)
        d = set(g.adj[x] & g.adj[y]) | {x, y}
        self.D.append(d)
        for z in d:
            self.R[z].add(l)
        frame = UndoFrame("new", l, (), x, y, True, x != y)
        self.journal.append(frame)
        return frame

    def remove_last_clique(self) -> None:
        if not self.journal or self.journal[-1].kind != "new":
            raise ValueError("last journal entry is not a new clique")
        frame = self.journal.pop()
        l = frame.l
        c = self.cliques[l]
        if frame.y_added:
            self._leave(frame.y, c)
        self._leave(frame.x, c)
        for z in self.D[l]:
            self.R[z].discard(l)
        self.cliques.pop()
        self.D.pop()

    def snapshot(self) -> tuple:
        return (
            tuple(frozenset(c) for c in self.cliques),
            tuple(frozenset(r) for r in self.R),
            tuple(frozenset(d) for d in self.D),
            tuple(self.incl),
            tuple(self.vcount),
            self.uncovered,
        )

    def frozen_cliques(self) -> list:
        return [frozenset(c) for c in self.cliques]

    def to_json(self) -> str:
        return json.dumps(
            {
                "cliques": [sorted(c) for c in self.cliques],
                "R": [sorted(r) for r in self.R],
                "D": [sorted(d) for d in self.D],
            }
        )


def new_cover_state(g: Graph) -> CoverState:
    return CoverState(g)


def recompute_isr(g: Graph, cliques: Sequence[Iterable[int]]) -> tuple[list, list]:
    """Representative sets computed from scratch: ``(R, D)``."""
    R = [set() for _ in range(g.n)]
    D = []
    for l, c in enumerate(cliques):
        c = set(c)
        d = {z for z in range(g.n) if z in c or c <= g.adj[z]}
        D.append(d)
        for z in d:
            R[z].add(l)
    return R, D


def smallest_index(candidates: Sequence[int]) -> int:
    return candidates[0]


def build_locally_minimal_cover(
    g: Graph,
    edge_order: Sequence[tuple] | None = None,
    picker: Callable[[list], int] = smallest_index,
) -> CoverState:
    """Scan edges once; push each uncovered edge into an existing clique when
    possible (``picker`` chooses among the sorted candidates), otherwise open
    a new clique for it."""
    st = CoverState(g)
    for x, y in edge_order if edge_order is not None else g.edges:
        if st.covered(x, y):
            continue
        cands = sorted(st.R[x] & st.R[y])
        if cands:
            st.cover_edge_in_clique(x, y, picker(cands))
        else:
            st.add_new_clique(x, y)
    return st
