"""Kernelization for the cover problems and the lifting of kernel solutions.

Every rule application is recorded as a step in a :class:`ReductionTrace`;
``lift_solution`` replays the steps backwards to turn a solution of the
reduced graph into one of the input graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, build_graph, induced_subgraph
from .problems import AwecpInstance

OPEN, NO = "OPEN", "NO"


@dataclass
class ReductionTrace:
    """Rule applications in the order they fired, in input vertex ids.

    Step kinds:

    * ``drop``   vertex removed without consequence for the cover
    * ``twin``   ``vertex`` had the same closed neighbourhood as ``keep``;
                 lifting adds it to every clique containing ``keep``
    * ``copy``   ``vertex`` had the same open neighbourhood as ``keep``;
                 lifting duplicates each clique through ``keep`` with
                 ``vertex`` in its place
    * ``forced`` ``clique`` is part of every lifted solution
    * ``reject`` the instance was decided NO (``why`` names the test)
    """

    problem: str
    n: int
    steps: list = field(default_factory=list)
    kept: list = field(default_factory=list)

    @property
    def rules_applied(self) -> int:
        return sum(1 for s in self.steps if s["kind"] != "reject")

    def to_json(self) -> str:
        return json.dumps({"problem": self.problem, "n": self.n, "steps": self.steps, "kept": self.kept})

    @classmethod
    def from_json(cls, text: str) -> "ReductionTrace":
        obj = json.loads(text)
        return cls(obj["problem"], obj["n"], obj["steps"], obj["kept"])


@dataclass
class ReducedInstance:
    graph: Graph
    parameter: int
    forced_cliques: list
    trace: ReductionTrace
    verdict: str = OPEN
    covered: list = field(default_factory=list)  # edges of ``graph`` needing no clique

    @property
    def kept(self) -> list:
        return self.trace.kept


class _Work:
    """Mutable copy of a graph restricted to the surviving vertices."""

    def __init__(self, g: Graph):
        self.g = g
        self.alive = set(range(g.n))
        self.adj = {v: set(g.adj[v]) for v in range(g.n)}

    def remove(self, v: int) -> None:
        for w in self.adj.pop(v):
            self.adj[w].discard(v)
        self.alive.discard(v)

    def cut(self, u: int, v: int) -> None:
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def closed(self, v: int) -> frozenset:
        return frozenset(self.adj[v] | {v})

    def kernel(self) -> tuple[Graph, list]:
        kept = sorted(self.alive)
        local = {v: i for i, v in enumerate(kept)}
        edges = [(local[u], local[w]) for u in kept for w in self.adj[u] if u < w]
        return build_graph(len(kept), edges), kept


def _merge_twins(w: _Work, trace: ReductionTrace, absorbed: set, open_too: bool = False) -> bool:
    changed = False
    groups: dict = {}
    for v in sorted(w.alive):
        groups.setdefault(w.closed(v), []).append(v)
    for members in groups.values():
        for x in members[1:]:
            w.remove(x)
            trace.steps.append({"kind": "twin", "vertex": x, "keep": members[0]})
            absorbed.add(members[0])
            changed = True
    if open_too:
        groups = {}
        for v in sorted(w.alive):
            if w.adj[v]:
                groups.setdefault(frozenset(w.adj[v]), []).append(v)
        for members in groups.values():
            for x in members[1:]:
                w.remove(x)
                trace.steps.append({"kind": "copy", "vertex": x, "keep": members[0]})
                changed = True
    return changed


def _drop_isolated(w: _Work, trace: ReductionTrace, absorbed: set) -> tuple[bool, int]:
    """Remove isolated vertices; a vertex that absorbed twins stands for a
    whole clique and is emitted as a forced one-vertex clique instead."""
    changed, cost = False, 0
    for v in sorted(w.alive):
        if not w.adj[v]:
            w.remove(v)
            changed = True
            if v in absorbed:
                trace.steps.append({"kind": "forced", "clique": [v]})
                cost += 1
            else:
                trace.steps.append({"kind": "drop", "vertex": v})
    return changed, cost


def reduce_ecc(g: Graph, k: int) -> ReducedInstance:
    """Remove isolated vertices and closed twins, then apply the size tests."""
    trace = ReductionTrace("ecc", g.n)
    w = _Work(g)
    absorbed: set = set()
    forced = 0
    while True:
        changed, cost = _drop_isolated(w, trace, absorbed)
        forced += cost
        if _merge_twins(w, trace, absorbed):
            changed = True
        if not changed:
            break
    kernel, kept = w.kernel()
    trace.kept = kept
    k_left = k - forced
    red = ReducedInstance(kernel, k_left, _forced(trace), trace)
    if k_left < 0:
        return _reject(red, "budget")
    d = kernel.degeneracy.d
    if kernel.n > (d + 1) * k_left:
        return _reject(red, "size")
    if kernel.n >= 2 ** k_left:
        return _reject(red, "exponential")
    return red


def _forced(trace: ReductionTrace) -> list:
    return [frozenset(s["clique"]) for s in trace.steps if s["kind"] == "forced"]


def _reject(red: ReducedInstance, why: str) -> ReducedInstance:
    red.trace.steps.append({"kind": "reject", "why": why})
    red.verdict = NO
    return red


def reduce_acc(g: Graph, t: int, pre_covered: Iterable = ()) -> ReducedInstance:
    """Kernelize an assignment-budget instance.

    Rules, applied to a fixpoint: drop vertices without uncovered edges;
    force ``{x, y}`` for an uncovered edge outside every triangle; force
    ``N[x]`` when it is a clique and every edge at ``x`` is uncovered.
    Finally more surviving vertices than budget means NO.
    """
    trace = ReductionTrace("acc", g.n)
    w = _Work(g)
    done = {frozenset(e) for e in pre_covered}

    def fail(why):
        kernel, kept = w.kernel()
        trace.kept = kept
        return _reject(ReducedInstance(kernel, t, _forced(trace), trace, covered=_local(done, kept)), why)

    while True:
        changed = False
        for v in sorted(w.alive):
            if all(frozenset((v, u)) in done for u in w.adj[v]):
                w.remove(v)
                trace.steps.append({"kind": "drop", "vertex": v})
                changed = True
        for u in sorted(w.alive):
            for v in sorted(w.adj[u]):
                if u < v and frozenset((u, v)) not in done and not (w.adj[u] & w.adj[v]):
                    if t < 2:
                        return fail("budget")
                    w.cut(u, v)
                    t -= 2
                    trace.steps.append({"kind": "forced", "clique": [u, v]})
                    changed = True
        for x in sorted(w.alive):
            nx = w.adj[x]
            if not nx or any(frozenset((x, u)) in done for u in nx):
                continue
            if all(b in w.adj[a] for a in nx for b in nx if a < b):
                clique = sorted(nx | {x})
                if t < len(clique):
                    return fail("budget")
                t -= len(clique)
                for a in nx:
                    for b in nx:
                        if a < b:
                            done.add(frozenset((a, b)))
                w.remove(x)
                trace.steps.append({"kind": "forced", "clique": clique})
                changed = True
        if not changed:
            break
    kernel, kept = w.kernel()
    trace.kept = kept
    red = ReducedInstance(kernel, t, _forced(trace), trace, covered=_local(done, kept))
    if kernel.n > t:
        return _reject(red, "size")
    return red


def _local(done: set, kept: list) -> list:
    local = {v: i for i, v in enumerate(kept)}
    out = []
    for e in done:
        a, b = tuple(e)
        if a in local and b in local:
            out.append(tuple(sorted((local[a], local[b]))))
    return sorted(out)


def reduce_min_assignment(g: Graph) -> ReducedInstance:
    """Repeatedly fold closed twins and open twins into one representative.

    Used before searching for a cover of minimum total size; the parameter
    of the result is unused.
    """
    trace = ReductionTrace("min-assignment", g.n)
    w = _Work(g)
    absorbed: set = set()
    while True:
        changed, _ = _drop_isolated(w, trace, absorbed)
        if _merge_twins(w, trace, absorbed, open_too=True):
            changed = True
        if not changed:
            break
    kernel, kept = w.kernel()
    trace.kept = kept
    return ReducedInstance(kernel, 0, _forced(trace), trace)


def lift_solution(trace: ReductionTrace, reduced_solution: Sequence, graph: Graph | None = None,
                  covered: Iterable = ()) -> list:
    """Map a solution of the kernel back to the input graph.

    When ``graph`` (the kernel) is given the solution is validated first.

    Raises:
        ValueError: for a rejected instance or an invalid kernel solution.
    """
    if any(s["kind"] == "reject" for s in trace.steps):
        raise ValueError("instance was rejected; nothing to lift")
    kept = trace.kept
    sol = [set(c) for c in reduced_solution]
    for c in sol:
        if any(not 0 <= v < len(kept) for v in c):
            raise ValueError(f"clique {sorted(c)} uses a vertex outside the kernel")
    if graph is not None:
        skip = {frozenset(e) for e in covered}
        for c in sol:
            if not graph.is_clique(c):
                raise ValueError(f"{sorted(c)} is not a clique of the kernel")
        for u, v in graph.edges:
            if frozenset((u, v)) not in skip and not any(u in c and v in c for c in sol):
                raise ValueError(f"kernel edge ({u}, {v}) is not covered")
    cover = [{kept[v] for v in c} for c in sol]
    for s in reversed(trace.steps):
        kind = s["kind"]
        if kind == "forced":
            cover.append(set(s["clique"]))
        elif kind == "twin":
            for c in cover:
                if s["keep"] in c:
                    c.add(s["vertex"])
        elif kind == "copy":
            keep, x = s["keep"], s["vertex"]
            cover.extend([(c - {keep}) | {x} for c in cover if keep in c])
    return [frozenset(c) for c in cover]


def awecp_sanity(inst: AwecpInstance) -> str:
    """NO when some weighted vertex cannot match its incident edge weights."""
    g = inst.graph
    for x, wx in inst.vertex_w.items():
        incident = [inst.edge_w[(min(x, u), max(x, u))] for u in g.adj[x]]
        if wx > sum(incident) or wx < max(incident, default=0):
            return NO
    return OPEN


def reduce_vcc_to_acc(g: Graph, k: int) -> tuple[Graph, int]:
    """Pad ``g`` with ``2m + 1`` pairwise non-adjacent vertices joined to every
    original vertex; the vertex clique cover with ``k`` cliques exists iff the
    padded graph has an edge clique cover of total size ``(n + k)(2m + 1) + 2m``."""
    q = 2 * g.m + 1
    edges = list(g.edges) + [(v, g.n + j) for j in range(q) for v in range(g.n)]
    return build_graph(g.n + q, edges), (g.n + k) * q + 2 * g.m
