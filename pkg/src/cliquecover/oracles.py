"""Exhaustive reference solvers and a solution checker for small graphs.

Nothing here reuses the search code; the only shared pieces are the
``Graph`` type and the exact LP routine.  Vertex sets are plain bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph
from .lp import build_lp, lp_feasible

ORACLE_MAX_N = 8


def _guard(g: Graph, limit: int = ORACLE_MAX_N) -> None:
    if g.n > limit:
        raise ValueError(f"oracle limited to n <= {limit}, got {g.n}")


def _masks(g: Graph) -> list:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def all_cliques(g: Graph, min_size: int = 1) -> list:
    """Every clique of ``g`` as a bitmask, by growing sets in increasing vertex order."""
    adj = _masks(g)
    out = []

    def grow(mask, common, start):
        if mask.bit_count() >= min_size:
            out.append(mask)
        for v in range(start, g.n):
            if common >> v & 1:
                grow(mask | 1 << v, common & adj[v], v + 1)

    grow(0, (1 << g.n) - 1, 0)
    if min_size == 0:
        return out
    return [c for c in out if c]


def maximal_cliques(g: Graph) -> list:
    cl = all_cliques(g)
    return [c for c in cl if not any(c != d and c & d == c for d in cl)]


def _pair(u: int, v: int) -> int:
    return 1 << u | 1 << v


def _edge_masks(g: Graph) -> list:
    return [_pair(u, v) for u, v in g.edges]


def _to_sets(masks) -> list:
    return [frozenset(v for v in range(m.bit_length()) if m >> v & 1) for m in masks]


def _covers(cliques, targets) -> bool:
    return all(any(t & c == t for c in cliques) for t in targets)


def oracle_min_ecc(g: Graph) -> tuple[int, list]:
    """Fewest cliques covering every edge; tries subsets of maximal cliques by size."""
    _guard(g)
    edges = _edge_masks(g)
    if not edges:
        return 0, []
    cand = [c for c in maximal_cliques(g) if c.bit_count() >= 2]
    for k in range(1, len(cand) + 1):
        for combo in combinations(cand, k):
            if _covers(combo, edges):
                return k, _to_sets(combo)
    raise AssertionError("maximal cliques always cover the edges")


def oracle_ecc(g: Graph, k: int) -> bool:
    return oracle_min_ecc(g)[0] <= k


def oracle_min_assignment(g: Graph, pre_covered: Iterable = ()) -> tuple[int, list]:
    """Smallest total clique size covering every edge not in ``pre_covered``."""
    _guard(g)
    done = {_pair(u, v) for u, v in pre_covered}
    edges = [e for e in _edge_masks(g) if e not in done]
    cl = [c for c in all_cliques(g) if c.bit_count() >= 2]
    through = {e: [c for c in cl if c & e == e] for e in edges}
    best = [2 * len(edges) + 1, None]
    chosen: list = []

    def dfs(cost):
        if cost >= best[0]:
            return
        open_edge = next((e for e in edges if not any(e & c == e for c in chosen)), None)
        if open_edge is None:
            best[0], best[1] = cost, list(chosen)
            return
        if cost + 2 >= best[0]:
            return
        for c in through[open_edge]:
            chosen.append(c)
            dfs(cost + c.bit_count())
            chosen.pop()

    dfs(0)
    return best[0], _to_sets(best[1])


def oracle_acc(g: Graph, t: int) -> bool:
    return oracle_min_assignment(g)[0] <= t


def oracle_wecp(g: Graph, k: int, edge_w: dict, vertex_w: dict | None = None) -> list | None:
    """Multiset of at most ``k`` cliques (each holding an edge) with exact multiplicities."""
    _guard(g)
    vertex_w = dict(vertex_w or {})
    edges = list(g.edges)
    res_e = {e: int(edge_w[e]) for e in edges}
    res_v = {v: int(w) for v, w in vertex_w.items()}
    cl = [c for c in all_cliques(g) if c.bit_count() >= 2]
    cl_edges = {c: [(u, v) for u, v in edges if c >> u & 1 and c >> v & 1] for c in cl}
    cl_verts = {c: [v for v in res_v if c >> v & 1] for c in cl}
    chosen: list = []

    def dfs(left):
        e = next((e for e in edges if res_e[e] > 0), None)
        if e is None:
            return all(w == 0 for w in res_v.values())
        if left == 0:
            return False
        m = _pair(*e)
        for c in cl:
            if c & m != m:
                continue
            if any(res_e[f] == 0 for f in cl_edges[c]) or any(res_v[v] == 0 for v in cl_verts[c]):
                continue
            for f in cl_edges[c]:
                res_e[f] -= 1
            for v in cl_verts[c]:
                res_v[v] -= 1
            chosen.append(c)
            if dfs(left - 1):
                return True
            chosen.pop()
            for f in cl_edges[c]:
                res_e[f] += 1
            for v in cl_verts[c]:
                res_v[v] += 1
        return False

    return _to_sets(chosen) if dfs(k) else None


def oracle_ewcd(g: Graph, k: int, edge_w: dict, vertex_w: dict | None = None) -> tuple | None:
    """Distinct cliques (each holding an edge), at most ``k``, plus exact
    non-negative weights matching all sums; ``None`` if impossible."""
    _guard(g)
    edges = _edge_masks(g)
    cl = [c for c in all_cliques(g) if c.bit_count() >= 2]
    if not edges:
        return ([], []) if not vertex_w else None
    for size in range(1, k + 1):
        for combo in combinations(cl, size):
            if not _covers(combo, edges):
                continue
            cover = _to_sets(combo)
            gamma = lp_feasible(build_lp(cover, edge_w, vertex_w))
            if gamma is not None:
                return cover, gamma
    return None


def oracle_lrcc(g: Graph, k: int, e_star: Iterable = ()) -> list | None:
    """At most ``k`` cliques covering every vertex and every edge of ``e_star``.

    Enlarging a clique never hurts, so subsets of maximal cliques suffice.
    """
    _guard(g)
    targets = [1 << v for v in range(g.n)] + [_pair(u, v) for u, v in e_star]
    cand = maximal_cliques(g)
    for size in range(0, min(k, len(cand)) + 1):
        for combo in combinations(cand, size):
            if _covers(combo, targets):
                return _to_sets(combo)
    return None


def oracle_vcc(g: Graph, k: int) -> bool:
    """Vertex clique cover via a proper colouring of the non-adjacency relation."""
    _guard(g)
    colour = [-1] * g.n

    def place(v):
        if v == g.n:
            return True
        used = max(colour[:v], default=-1) + 1
        for c in range(min(used + 1, k)):
            # same colour class must be pairwise adjacent in g
            if all(colour[u] != c or u in g.adj[v] for u in range(v)):
                colour[v] = c
                if place(v + 1):
                    return True
        colour[v] = -1
        return False

    return place(0)


def oracle_pmc(g: Graph, k: int, pairs: Iterable = ()) -> bool:
    """Colour classes are independent sets; maximal ones suffice."""
    _guard(g)
    full = (1 << g.n) - 1
    adj = _masks(g)
    indep = []

    def grow(mask, allowed, start):
        indep.append(mask)
        for v in range(start, g.n):
            if allowed >> v & 1:
                grow(mask | 1 << v, allowed & ~adj[v] & ~(1 << v), v + 1)

    grow(0, full, 0)
    maximal = [s for s in indep if s and not any(s != t and s & t == s for t in indep)]
    targets = [1 << v for v in range(g.n)] + [_pair(u, v) for u, v in pairs]
    return any(
        _covers(combo, targets) for size in range(min(k, len(maximal)) + 1) for combo in combinations(maximal, size)
    )


def clique_number(g: Graph) -> int:
    adj = _masks(g)
    best = [0]

    def expand(size, cand):
        if cand == 0:
            best[0] = max(best[0], size)
            return
        if size + cand.bit_count() <= best[0]:
            return
        while cand:
            if size + cand.bit_count() <= best[0]:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & adj[v])

    expand(0, (1 << g.n) - 1)
    return best[0]


def independence_number(g: Graph) -> int:
    co = Graph(g.n, [[w for w in range(g.n) if w != v and w not in g.adj[v]] for v in range(g.n)])
    return clique_number(co)


# solution checking ---------------------------------------------------------


@dataclass
class Check:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _cliques_ok(g: Graph, cover: Sequence, min_size: int = 1) -> Check:
    for c in cover:
        vs = sorted(c)
        if len(vs) < min_size:
            return Check(False, f"clique {vs} is too small")
        if any(not 0 <= v < g.n for v in vs):
            return Check(False, f"clique {vs} has a vertex out of range")
        for u, v in combinations(vs, 2):
            if v not in g.adj[u]:
                return Check(False, f"{vs} is not a clique: missing edge ({u}, {v})")
    return Check(True)


def verify_solution(problem: str, g: Graph, cover: Sequence | None, param=None, *, gamma=None, edge_w=None,
                    vertex_w=None, pairs=(), pre_covered=()) -> Check:
    """Check a claimed YES certificate.

    ``problem`` is one of ``ecc``, ``acc``, ``wecp``, ``ewcd``, ``lrcc``,
    ``pmc``.  ``param`` is the clique budget, or the assignment budget for
    ``acc``.  For ``pmc`` the cover is the list of colour classes.
    """
    if cover is None:
        return Check(False, "no certificate")
    cover = [frozenset(c) for c in cover]
    if problem == "pmc":
        for c in cover:
            for u, v in combinations(sorted(c), 2):
                if v in g.adj[u]:
                    return Check(False, f"adjacent vertices {u}, {v} share a colour")
        targets = [frozenset({v}) for v in range(g.n)] + [frozenset(p) for p in pairs]
        for t in targets:
            if not any(t <= c for c in cover):
                return Check(False, f"requirement {sorted(t)} has no common colour")
        if param is not None and len(cover) > param:
            return Check(False, f"{len(cover)} colours exceed {param}")
        return Check(True)

    chk = _cliques_ok(g, cover, 2 if problem in ("wecp", "ewcd") else 1)
    if not chk:
        return chk
    skip = {frozenset(e) for e in pre_covered}
    if problem in ("ecc", "acc", "wecp", "ewcd"):
        need = [frozenset(e) for e in g.edges if frozenset(e) not in skip]
    elif problem == "lrcc":
        need = [frozenset({v}) for v in range(g.n)] + [frozenset(e) for e in pairs]
    else:
        raise ValueError(f"unknown problem {problem!r}")
    for t in need:
        if not any(t <= c for c in cover):
            what = "edge" if len(t) == 2 else "vertex"
            return Check(False, f"uncovered {what} {tuple(sorted(t))}")

    if problem == "acc":
        total = sum(len(c) for c in cover)
        if param is not None and total > param:
            return Check(False, f"total size {total} exceeds {param}")
        return Check(True)
    if param is not None and len(cover) > param:
        return Check(False, f"{len(cover)} cliques exceed {param}")
    if problem == "wecp":
        for (u, v), w in edge_w.items():
            got = sum(1 for c in cover if u in c and v in c)
            if got != w:
                return Check(False, f"edge ({u}, {v}) in {got} cliques, expected {w}")
        for x, w in (vertex_w or {}).items():
            got = sum(1 for c in cover if x in c)
            if got != w:
                return Check(False, f"vertex {x} in {got} cliques, expected {w}")
    if problem == "ewcd":
        if gamma is None or len(gamma) != len(cover):
            return Check(False, "missing or mismatched clique weights")
        if any(Fraction(w) <= 0 for w in gamma):
            return Check(False, "clique weights must be positive")
        for (u, v), w in edge_w.items():
            got = sum(Fraction(gw) for c, gw in zip(cover, gamma) if u in c and v in c)
            if got != w:
                return Check(False, f"sum mismatch on edge ({u}, {v}): {got} != {w}")
        for x, w in (vertex_w or {}).items():
            got = sum(Fraction(gw) for c, gw in zip(cover, gamma) if x in c)
            if got != w:
                return Check(False, f"sum mismatch on vertex {x}: {got} != {w}")
    return Check(True)
