"""End-to-end solving: kernelize, search, lift, and scan for optima."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .problems import SearchStats, Solution
from .reduction import NO, ReducedInstance, lift_solution, reduce_acc, reduce_ecc, reduce_min_assignment
from .search_f1 import accs, eccg_baseline, eccs
from .search_f2 import accs2, eccs2

ECC_ENGINES = {"f1": eccs, "f2": eccs2, "eccg": eccg_baseline}
ACC_ENGINES = {"f1": accs, "f2": accs2}


@dataclass
class Outcome:
    """Decision result on the input graph plus what the kernelization did."""

    cliques: list | None
    stats: SearchStats = field(default_factory=SearchStats)
    reduced: ReducedInstance | None = None

    @property
    def answer(self) -> bool:
        return self.cliques is not None

    def __bool__(self) -> bool:
        return self.cliques is not None


def _engine(table: dict, name: str):
    try:
        return table[name]
    except KeyError:
        raise ValueError(f"unknown engine {name!r}; choose from {sorted(table)}") from None


def solve_ecc(g: Graph, k: int, engine: str = "f2", reduce: bool = True, time_limit: float | None = None) -> Outcome:
    solver = _engine(ECC_ENGINES, engine)
    if not reduce:
        sol = solver(g, k, time_limit=time_limit)
        return Outcome(sol.cliques, sol.stats)
    red = reduce_ecc(g, k)
    if red.verdict == NO:
        return Outcome(None, SearchStats(), red)
    sol = solver(red.graph, red.parameter, time_limit=time_limit)
    if not sol:
        return Outcome(None, sol.stats, red)
    return Outcome(lift_solution(red.trace, sol.cliques), sol.stats, red)


def solve_acc(g: Graph, t: int, engine: str = "f2", reduce: bool = True, time_limit: float | None = None) -> Outcome:
    solver = _engine(ACC_ENGINES, engine)
    if not reduce:
        sol = solver(g, t, time_limit=time_limit)
        return Outcome(sol.cliques, sol.stats)
    red = reduce_acc(g, t)
    if red.verdict == NO:
        return Outcome(None, SearchStats(), red)
    sol = solver(red.graph, red.parameter, red.covered, time_limit=time_limit)
    if not sol:
        return Outcome(None, sol.stats, red)
    return Outcome(lift_solution(red.trace, sol.cliques), sol.stats, red)


def _add_stats(total: SearchStats, s: SearchStats) -> None:
    total.nodes += s.nodes
    total.max_depth = max(total.max_depth, s.max_depth)
    total.max_branching = max(total.max_branching, s.max_branching)
    total.wall_time += s.wall_time


def min_ecc(g: Graph, engine: str = "f2", reduce: bool = True) -> tuple[int, list, SearchStats]:
    """Smallest ``k`` with a ``k``-clique edge cover, scanning ``k`` upwards."""
    total = SearchStats()
    for k in range(0, max(g.m, 0) + 1):
        out = solve_ecc(g, k, engine, reduce)
        _add_stats(total, out.stats)
        if out:
            return k, out.cliques, total
    raise AssertionError("the edges themselves always form a cover")


def min_assignment_cover(g: Graph, engine: str = "f2", fold_twins: bool = False) -> tuple[int, list, SearchStats]:
    """Edge clique cover of smallest total clique size, scanning the budget upwards.

    ``fold_twins`` first folds closed and open twins into one representative
    and lifts the kernel optimum back.  That is fast but not exact: the
    lifted cost depends on how often the representative is used, which the
    kernel search does not minimise (see ``tests/test_drivers.py`` for
    graphs where it overshoots).  The default solves the input graph.
    """
    if fold_twins:
        folded = reduce_min_assignment(g)
        kernel, trace = folded.graph, folded.trace
    else:
        kernel, trace = g, None
    total = SearchStats()
    for t in range(0, 2 * kernel.m + 1):
        out = solve_acc(kernel, t, engine)
        _add_stats(total, out.stats)
        if out:
            cover = out.cliques if trace is None else lift_solution(trace, out.cliques)
            return sum(len(c) for c in cover), cover, total
    raise AssertionError("the edges themselves always form a cover")
