"""Search trees that grow cliques one edge at a time.

Every node picks the last open edge in the degeneracy edge order and either
pushes it into an existing clique that can absorb it (its index is in
``R[x] & R[y]``) or opens a new clique for it.  The variants differ in what
"open" means and in the budget they track.
"""

from __future__ import annotations

from typing import Iterable

from .cover_state import CoverState
from .graph import Graph, complement
from .lp import build_lp, integer_gamma_search, lp_feasible
from .problems import AewcdInstance, AwecpInstance, Solution, Tracker


def _dep(g: Graph):
    ctx = g.degeneracy
    dep = list(ctx.dep)
    return ctx, dep, [g.edge_index[e] for e in dep]


def _check_suffix(st: CoverState, ctx, x: int) -> None:
    # every clique lives among the vertices placed at or after x
    px = ctx.position[x]
    for c in st.cliques:
        assert all(ctx.position[v] >= px for v in c), f"clique {sorted(c)} reaches before {x}"


def eccs2(g: Graph, k: int, *, time_limit: float | None = None, debug: bool = False) -> Solution:
    """Edge clique cover with at most ``k`` cliques."""
    ctx, dep, eidx = _dep(g)
    st = CoverState(g)
    tr = Tracker(time_limit)
    incl, R, cliques = st.incl, st.R, st.cliques

    def rec(budget, hi, depth):
        tr.enter(depth)
        i = hi
        while i >= 0 and incl[eidx[i]]:
            i -= 1
        if i < 0:
            return True
        x, y = dep[i]
        if debug:
            _check_suffix(st, ctx, x)
        cands = sorted(R[x] & R[y])
        tr.branch(len(cands) + (budget > 0))
        for l in cands:
            f = st.cover_edge_in_clique(x, y, l)
            if rec(budget, i - 1, depth + 1):
                return True
            st.undo_cover_edge(f)
        if budget > 0:
            st.add_new_clique(x, y)
            if rec(budget - 1, i - 1, depth + 1):
                return True
            st.remove_last_clique()
        return False

    found = rec(k, len(dep) - 1, 0)
    return Solution(st.frozen_cliques() if found else None, tr.finish())


def accs2(
    g: Graph,
    t: int,
    pre_covered: Iterable = (),
    *,
    time_limit: float | None = None,
    debug: bool = False,
) -> Solution:
    """Clique cover of the edges not in ``pre_covered`` with total size at most ``t``."""
    ctx, dep, eidx = _dep(g)
    st = CoverState(g)
    tr = Tracker(time_limit)
    incl, R, cliques = st.incl, st.R, st.cliques
    free = [False] * g.m
    for u, v in pre_covered:
        free[g.edge_index[(u, v)]] = True

    def rec(budget, hi, depth):
        tr.enter(depth)
        i = hi
        while i >= 0 and (incl[eidx[i]] or free[eidx[i]]):
            i -= 1
        if i < 0:
            return True
        if budget <= 0:
            return False
        x, y = dep[i]
        if debug:
            _check_suffix(st, ctx, x)
        cands = []
        for l in sorted(R[x] & R[y]):
            s = (x not in cliques[l]) + (y not in cliques[l])
            if s <= budget:
                cands.append((l, s))
        tr.branch(len(cands) + (budget >= 2))
        for l, s in cands:
            f = st.cover_edge_in_clique(x, y, l)
            if rec(budget - s, i - 1, depth + 1):
                return True
            st.undo_cover_edge(f)
        if budget >= 2:
            st.add_new_clique(x, y)
            if rec(budget - 2, i - 1, depth + 1):
                return True
            st.remove_last_clique()
        return False

    found = rec(t, len(dep) - 1, 0)
    return Solution(st.frozen_cliques() if found else None, tr.finish())


def awecps(inst: AwecpInstance, *, time_limit: float | None = None, debug: bool = False) -> Solution:
    """Cover in which every edge and every weighted vertex lies in exactly
    as many cliques as its weight; weights act as remaining budgets."""
    g = inst.graph
    ctx, dep, eidx = _dep(g)
    st = CoverState(g)
    tr = Tracker(time_limit)
    R, cliques, idx = st.R, st.cliques, g.edge_index
    we = [inst.edge_w[e] for e in g.edges]
    ws = dict(inst.vertex_w)
    left = [sum(we) + sum(ws.values())]

    def spend_edge(e, delta):
        we[e] -= delta
        left[0] -= delta

    def spend_vertex(v, delta):
        if v in ws:
            ws[v] -= delta
            left[0] -= delta

    def can_include(x, y, c):
        xa, ya = x not in c, y not in c
        if xa and ws.get(x, 1) == 0 or ya and ws.get(y, 1) == 0:
            return False
        for z in c:
            if z == x or z == y:
                continue
            if xa and we[idx[(x, z)]] == 0 or ya and we[idx[(y, z)]] == 0:
                return False
        return True

    def include(x, y, l, e, sign):
        # sign=+1 applies the weight changes of pushing (x, y) into clique l
        c = cliques[l]
        xa, ya = x not in c, y not in c
        for z in c:
            if z == x or z == y:
                continue
            if xa:
                spend_edge(idx[(x, z)], sign)
            if ya:
                spend_edge(idx[(y, z)], sign)
        spend_edge(e, sign)
        if xa:
            spend_vertex(x, sign)
        if ya:
            spend_vertex(y, sign)

    def rec(budget, hi, depth):
        tr.enter(depth)
        if left[0] == 0:
            return True
        i = hi
        while i >= 0 and we[eidx[i]] == 0:
            i -= 1
        if i < 0:
            return False
        x, y = dep[i]
        e = eidx[i]
        if debug:
            _check_suffix(st, ctx, x)
        cands = [l for l in sorted(R[x] & R[y]) if not (x in cliques[l] and y in cliques[l])]
        cands = [l for l in cands if can_include(x, y, cliques[l])]
        fresh = budget > 0 and not (ws.get(x, 1) == 0 or ws.get(y, 1) == 0)
        tr.branch(len(cands) + fresh)
        for l in cands:
            include(x, y, l, e, +1)
            f = st.cover_edge_in_clique(x, y, l)
            if rec(budget, i, depth + 1):
                return True
            st.undo_cover_edge(f)
            include(x, y, l, e, -1)
        if fresh:
            st.add_new_clique(x, y)
            spend_edge(e, 1)
            spend_vertex(x, 1)
            spend_vertex(y, 1)
            if rec(budget - 1, i, depth + 1):
                return True
            spend_edge(e, -1)
            spend_vertex(x, -1)
            spend_vertex(y, -1)
            st.remove_last_clique()
        return False

    found = rec(inst.k, len(dep) - 1, 0)
    return Solution(st.frozen_cliques() if found else None, tr.finish())


def aewcds(
    inst: AewcdInstance,
    *,
    merged: bool = False,
    wmax: int | None = None,
    strict: bool = True,
    time_limit: float | None = None,
) -> Solution:
    """Weighted edge clique decomposition with at most ``k`` cliques.

    Lying in a clique and being *marked* covered are kept apart.  Each node
    selects the last unmarked edge and pushes it into another clique (or a
    new one), trying each choice once with the edge marked and once left
    unmarked so that it can keep collecting cliques.  An edge that already
    lies in a clique may also simply be marked.  When every edge is marked
    the clique weights are solved exactly, or with ``wmax`` searched among
    integers ``1..wmax``.  ``strict`` drops cliques that receive weight zero.

    ``merged`` runs the branch-over-cliques step once with the edge marked
    and once unmarked, instead of doubling every child.
    """
    g = inst.graph
    ctx, dep, eidx = _dep(g)
    st = CoverState(g)
    tr = Tracker(time_limit)
    R, cliques, incl, idx = st.R, st.cliques, st.incl, g.edge_index
    marked = [False] * g.m
    result: list = []
    infeasible: set = set()  # covers whose weight system was already refuted

    def leaf():
        cover = st.frozen_cliques()
        key = tuple(sorted(tuple(sorted(c)) for c in cover))
        if key in infeasible:
            return False
        system = build_lp(cover, inst.edge_w, inst.vertex_w)
        gamma = lp_feasible(system) if wmax is None else integer_gamma_search(system, wmax)
        if gamma is None:
            infeasible.add(key)
            return False
        pairs = list(zip(cover, gamma))
        if strict:
            pairs = [(c, w) for c, w in pairs if w != 0]
        result[:] = pairs
        return True

    def grows_cleanly(x, y, c):
        # A marked edge keeps the cliques it had when it was marked: any
        # cover reachable by sweeping a marked edge into a clique later is
        # also reached by pushing that edge into the clique when selected.
        if x in c and y in c:
            return False
        for a, b in ((x, y), (y, x)):
            if a not in c:
                if any(z != b and marked[idx[(a, z)]] for z in c):
                    return False
        return True

    def fresh_needed(hi):
        # edges in no clique that no existing clique can absorb each need a
        # new clique; count those that pairwise cannot share one
        picked: list = []
        for j in range(hi + 1):
            if incl[eidx[j]]:
                continue
            x, y = dep[j]
            if R[x] & R[y]:
                continue
            if all(not g.is_clique({x, y, u, v}) for u, v in picked):
                picked.append((x, y))
        return len(picked)

    def rec(budget, hi, depth, floor=-1):
        # floor >= 0: this edge was just pushed into clique ``floor`` and left
        # unmarked.  Its further cliques are taken in index order, and marking
        # it here would repeat the sibling that marked it straight away.
        tr.enter(depth)
        i = hi
        while i >= 0 and marked[eidx[i]]:
            i -= 1
        if i < 0:
            return leaf()
        if fresh_needed(i) > budget:
            return False
        x, y = dep[i]
        e = eidx[i]
        cands = [l for l in sorted(R[x] & R[y]) if l > floor and grows_cleanly(x, y, cliques[l])]
        held = incl[e] > 0 and floor < 0
        tr.branch(2 * (len(cands) + (budget > 0)) + held)

        def child(as_covered, b, l):
            if not as_covered:
                return rec(b, i, depth + 1, l)
            marked[e] = True
            ok = rec(b, i - 1, depth + 1)
            marked[e] = False
            return ok

        if held and child(True, budget, -1):
            return True
        if not merged:
            for l in cands:
                f = st.cover_edge_in_clique(x, y, l)
                if child(True, budget, l) or child(False, budget, l):
                    return True
                st.undo_cover_edge(f)
            if budget > 0:
                q = st.add_new_clique(x, y).l
                if child(True, budget - 1, q) or child(False, budget - 1, q):
                    return True
                st.remove_last_clique()
            return False
        for as_covered in (True, False):
            for l in cands:
                f = st.cover_edge_in_clique(x, y, l)
                if child(as_covered, budget, l):
                    return True
                st.undo_cover_edge(f)
            if budget > 0:
                q = st.add_new_clique(x, y).l
                if child(as_covered, budget - 1, q):
                    return True
                st.remove_last_clique()
        return False

    found = rec(inst.k, len(dep) - 1, 0)
    stats = tr.finish()
    if not found:
        return Solution(None, stats)
    return Solution([c for c, _ in result], stats, [w for _, w in result])


def aewcds_integer(inst: AewcdInstance, wmax: int, **kw) -> Solution:
    return aewcds(inst, wmax=wmax, **kw)


def lrccs(
    g: Graph,
    k: int,
    e_star: Iterable = (),
    *,
    time_limit: float | None = None,
    debug: bool = False,
) -> Solution:
    """At most ``k`` cliques covering every vertex and every edge of ``e_star``."""
    ctx, dep, eidx = _dep(g)
    st = CoverState(g)
    tr = Tracker(time_limit)
    R, cliques, incl, vcount = st.R, st.cliques, st.incl, st.vcount
    wanted = set()
    for u, v in e_star:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        wanted.add(g.edge_index[(u, v)])
    targets = [i for i in range(len(dep)) if eidx[i] in wanted]
    order, pos = ctx.ordering, ctx.position

    def rec(budget, hi_e, hi_u, depth):
        tr.enter(depth)
        i = hi_e
        while i >= 0 and incl[eidx[targets[i]]]:
            i -= 1
        j = hi_u
        while j >= 0 and vcount[order[j]]:
            j -= 1
        if i < 0 and j < 0:
            return True
        use_edge = i >= 0
        if use_edge and j >= 0 and pos[dep[targets[i]][0]] < j:
            use_edge = False
        if use_edge:
            x, y = dep[targets[i]]
            cands = sorted(R[x] & R[y])
        else:
            x = y = order[j]
            cands = sorted(R[x])
        if debug:
            _check_suffix(st, ctx, x)
        tr.branch(len(cands) + (budget > 0))
        for l in cands:
            partner = y if use_edge else min(cliques[l])
            f = st.cover_edge_in_clique(x, partner, l)
            if rec(budget, i, j, depth + 1):
                return True
            st.undo_cover_edge(f)
        if budget > 0:
            st.add_new_clique(x, y)
            if rec(budget - 1, i, j, depth + 1):
                return True
            st.remove_last_clique()
        return False

    found = rec(k, len(targets) - 1, g.n - 1, 0)
    return Solution(st.frozen_cliques() if found else None, tr.finish())


def solve_pmc(g: Graph, k: int, pairs: Iterable = (), *, time_limit: float | None = None) -> tuple[dict | None, Solution]:
    """Multi-colouring with at most ``k`` colours where every vertex gets a
    colour, adjacent vertices share none, and every listed pair shares one.

    Returns ``(colours, solution)``; ``colours`` maps each vertex to its set
    of colour indices, or is ``None`` when no colouring exists.
    """
    pairs = list(pairs)
    for u, v in pairs:
        if u == v or not (0 <= u < g.n and 0 <= v < g.n):
            raise ValueError(f"bad pair ({u}, {v})")
        if g.has_edge(u, v):
            raise ValueError(f"pair ({u}, {v}) is adjacent and cannot share a colour")
    sol = lrccs(complement(g), k, pairs, time_limit=time_limit)
    if not sol:
        return None, sol
    colours = {v: set() for v in range(g.n)}
    for i, c in enumerate(sol.cliques):
        for v in c:
            colours[v].add(i)
    return colours, sol
