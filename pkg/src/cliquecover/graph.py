"""Simple undirected graphs, degeneracy orderings and restricted clique enumeration."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Clique = frozenset


class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    Adjacency is kept both as frozensets (membership tests) and as sorted
    tuples (deterministic iteration).
    """

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        self.n = n
        self.adj = tuple(frozenset(a) for a in adj)
        self.nbrs = tuple(tuple(sorted(a)) for a in self.adj)
        self.m = sum(len(a) for a in self.adj) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def closed(self, v: int) -> frozenset:
        return self.adj[v] | {v}

    @cached_property
    def edges(self) -> tuple:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return tuple((u, v) for u in range(self.n) for v in self.nbrs[u] if u < v)

    @cached_property
    def edge_index(self) -> dict:
        idx = {}
        for i, (u, v) in enumerate(self.edges):
            idx[(u, v)] = i
            idx[(v, u)] = i
        return idx

    @cached_property
    def degeneracy(self) -> "DegeneracyContext":
        return degeneracy_context(self)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(set(vertices))
        for i, u in enumerate(vs):
            a = self.adj[u]
            for v in vs[i + 1 :]:
                if v not in a:
                    return False
        return True


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, dropping duplicate edges.

    Raises:
        ValueError: on a self-loop or an endpoint outside ``[0, n)``.
    """
    if n < 0:
        raise ValueError(f"negative vertex count {n}")
    adj = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise ValueError(f"self-loop ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


@dataclass(frozen=True)
class DegeneracyContext:
    """Degeneracy ordering of a graph together with the derived edge order.

    ``dep`` lists every edge once as ``(x, y)`` where ``y`` is a later
    neighbour of ``x``; blocks follow the ordering and each block is sorted by
    the position of ``y``.
    """

    ordering: tuple
    position: tuple
    d: int
    later: tuple  # later[x]: frozenset of later neighbours
    dep: tuple
    dep_index: dict = field(repr=False)

    def later_closed(self, x: int) -> frozenset:
        return self.later[x] | {x}


def degeneracy_context(g: Graph) -> DegeneracyContext:
    """Peel minimum-degree vertices, breaking ties by smallest id."""
    deg = [len(a) for a in g.adj]
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    removed = [False] * g.n
    ordering = []
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != deg[v]:
            continue
        removed[v] = True
        ordering.append(v)
        d = max(d, dv)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    position = [0] * g.n
    for i, v in enumerate(ordering):
        position[v] = i
    later = tuple(frozenset(w for w in g.adj[v] if position[w] > position[v]) for v in range(g.n))
    dep = []
    for x in ordering:
        for y in sorted(later[x], key=position.__getitem__):
            dep.append((x, y))
    dep_index = {}
    for i, (x, y) in enumerate(dep):
        dep_index[(x, y)] = i
        dep_index[(y, x)] = i
    return DegeneracyContext(tuple(ordering), tuple(position), d, later, tuple(dep), dep_index)


def _bitsets(g: Graph, verts: Sequence[int]) -> list:
    local = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        b = 0
        for w in g.adj[v]:
            j = local.get(w)
            if j is not None:
                b |= 1 << j
        rows.append(b)
    return rows


def _bits(b: int) -> Iterator[int]:
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


def _maximal(rows: list, r: int, p: int, x: int) -> Iterator[int]:
    # Bron-Kerbosch with pivoting on bit rows; yields clique bitmasks
    if not p and not x:
        yield r
        return
    best, pivot = -1, 0
    for u in _bits(p | x):
        c = (rows[u] & p).bit_count()
        if c > best:
            best, pivot = c, u
    for v in _bits(p & ~rows[pivot]):
        bit = 1 << v
        yield from _maximal(rows, r | bit, p & rows[v], x & rows[v])
        p &= ~bit
        x |= bit


def _all(rows: list, r: int, p: int) -> Iterator[int]:
    yield r
    for v in _bits(p):
        bit = 1 << v
        p &= ~bit
        yield from _all(rows, r | bit, p & rows[v])


def enumerate_cliques_with_edge(
    g: Graph, x: int, y: int, restrict: Iterable[int] | None = None, mode: str = "maximal"
) -> Iterator[frozenset]:
    """Yield cliques of ``g[restrict]`` that contain the edge ``{x, y}``.

    ``mode="maximal"`` yields the cliques that are maximal inside the
    restricted subgraph, ``mode="all"`` yields every such clique.  The
    restriction always includes ``x`` and ``y``.
    """
    if not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge")
    common = g.adj[x] & g.adj[y]
    if restrict is not None:
        common = common & frozenset(restrict)
    cand = sorted(common)
    rows = _bitsets(g, cand)
    full = (1 << len(cand)) - 1
    if mode == "maximal":
        gen = _maximal(rows, 0, full, 0)
    elif mode == "all":
        gen = _all(rows, 0, full)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    base = (x, y)
    for mask in gen:
        yield frozenset(base + tuple(cand[i] for i in _bits(mask)))


def complement(g: Graph) -> Graph:
    every = frozenset(range(g.n))
    return Graph(g.n, [every - g.adj[v] - {v} for v in range(g.n)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list]:
    """Return ``(h, kept)`` where vertex ``i`` of ``h`` is ``kept[i]`` in ``g``."""
    kept = sorted(set(vertices))
    local = {v: i for i, v in enumerate(kept)}
    adj = [[local[w] for w in g.adj[v] if w in local] for v in kept]
    return Graph(len(kept), adj), kept

