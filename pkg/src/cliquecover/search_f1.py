"""Search trees that branch over whole cliques.

Each node takes the first uncovered edge ``{x, y}`` in the degeneracy edge
order and branches over cliques containing it inside the later closed
neighbourhood of ``x``.  ``eccg_baseline`` is the classic variant that uses
the input edge order and the full common neighbourhood.

Node accounting: a child is only entered when it still has an uncovered edge
and budget left, so ``stats.nodes`` counts the branching nodes of the tree
(the root is always counted).
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, enumerate_cliques_with_edge
from .problems import Solution, Tracker


class _Coverage:
    def __init__(self, g: Graph, pre_covered: Iterable = ()):
        self.g = g
        self.count = [0] * g.m
        for u, v in pre_covered:
            self.count[g.edge_index[(u, v)]] += 1

    def add(self, clique) -> None:
        idx, count = self.g.edge_index, self.count
        vs = sorted(clique)
        for i, u in enumerate(vs):
            for v in vs[i + 1 :]:
                count[idx[(u, v)]] += 1

    def remove(self, clique) -> None:
        idx, count = self.g.edge_index, self.count
        vs = sorted(clique)
        for i, u in enumerate(vs):
            for v in vs[i + 1 :]:
                count[idx[(u, v)]] -= 1

    def next_uncovered(self, order_idx: list, start: int) -> int | None:
        count = self.count
        for i in range(start, len(order_idx)):
            if count[order_idx[i]] == 0:
                return i
        return None


def _check_prefix(g: Graph, ctx, cov: _Coverage, x: int) -> None:
    # every edge touching a vertex placed before x is already covered
    px = ctx.position[x]
    for u, v in g.edges:
        if min(ctx.position[u], ctx.position[v]) < px:
            assert cov.count[g.edge_index[(u, v)]] > 0, f"edge ({u}, {v}) open while branching at {x}"


def _ecc_search(g: Graph, k: int, order: list, restrict_of, time_limit, debug, ctx=None) -> Solution:
    tr = Tracker(time_limit)
    cov = _Coverage(g)
    order_idx = [g.edge_index[e] for e in order]
    cover: list = []

    def rec(budget, i, depth):
        tr.enter(depth)
        x, y = order[i]
        if debug and ctx is not None:
            _check_prefix(g, ctx, cov, x)
        branches = list(enumerate_cliques_with_edge(g, x, y, restrict_of(x, y), "maximal"))
        tr.branch(len(branches))
        for z in branches:
            cov.add(z)
            cover.append(z)
            j = cov.next_uncovered(order_idx, i + 1)
            if j is None:
                return True
            if budget > 1 and rec(budget - 1, j, depth + 1):
                return True
            cover.pop()
            cov.remove(z)
        return False

    first = cov.next_uncovered(order_idx, 0)
    if first is None:
        tr.enter(0)
        return Solution([], tr.finish())
    if k <= 0:
        tr.enter(0)
        return Solution(None, tr.finish())
    found = rec(k, first, 0)
    return Solution(list(cover) if found else None, tr.finish())


def eccs(g: Graph, k: int, *, time_limit: float | None = None, debug: bool = False) -> Solution:
    """Decide whether the edges of ``g`` can be covered by at most ``k`` cliques."""
    ctx = g.degeneracy
    later = ctx.later
    return _ecc_search(g, k, list(ctx.dep), lambda x, y: later[x], time_limit, debug, ctx)


def eccg_baseline(g: Graph, k: int, *, time_limit: float | None = None) -> Solution:
    """Same decision, branching over all maximal cliques through the first
    uncovered edge in input order."""
    return _ecc_search(g, k, list(g.edges), lambda x, y: None, time_limit, False)


def accs(
    g: Graph,
    t: int,
    pre_covered: Iterable = (),
    partial: Iterable = (),
    *,
    time_limit: float | None = None,
    debug: bool = False,
) -> Solution:
    """Decide whether the uncovered edges admit a clique cover of total size at most ``t``.

    Edges in ``pre_covered`` need no clique.  Cliques in ``partial`` are part
    of the cover and count towards ``t``; they are returned first.
    """
    ctx = g.degeneracy
    tr = Tracker(time_limit)
    cov = _Coverage(g, pre_covered)
    partial = [frozenset(c) for c in partial]
    for c in partial:
        cov.add(c)
    order = list(ctx.dep)
    order_idx = [g.edge_index[e] for e in order]
    cover = list(partial)
    budget0 = t - sum(len(c) for c in partial)

    def rec(budget, i, depth):
        tr.enter(depth)
        x, y = order[i]
        if debug:
            _check_prefix(g, ctx, cov, x)
        branches = [z for z in enumerate_cliques_with_edge(g, x, y, ctx.later[x], "all") if len(z) <= budget]
        tr.branch(len(branches))
        for z in branches:
            cov.add(z)
            cover.append(z)
            j = cov.next_uncovered(order_idx, i + 1)
            if j is None:
                return True
            if budget - len(z) >= 2 and rec(budget - len(z), j, depth + 1):
                return True
            cover.pop()
            cov.remove(z)
        return False

    first = cov.next_uncovered(order_idx, 0)
    if first is None or budget0 < 2:
        tr.enter(0)
        ok = first is None and budget0 >= 0
        return Solution(cover if ok else None, tr.finish())
    found = rec(budget0, first, 0)
    return Solution(list(cover) if found else None, tr.finish())
