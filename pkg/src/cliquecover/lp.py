"""Exact feasibility of the clique-weight linear system.

Given a fixed cover, the unknown clique weights must reproduce every edge
weight and every prescribed vertex weight.  Feasibility is decided with a
phase-one simplex over :class:`~fractions.Fraction` using Bland's rule, so the
answer and the returned weights are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class LinearSystem:
    """Rows ``sum(gamma[j] for j in row) == rhs`` over ``n_vars`` unknowns."""

    n_vars: int
    rows: tuple  # of (tuple of column indices, Fraction)
    labels: tuple = ()


def build_lp(cover: Sequence, edge_w: dict, vertex_w: dict | None = None) -> LinearSystem:
    """Assemble the system for ``cover``.

    Raises:
        ValueError: if some weighted edge lies in no clique of the cover.
    """
    vertex_w = vertex_w or {}
    rows, labels = [], []
    for (u, v), w in sorted(edge_w.items()):
        cols = tuple(j for j, c in enumerate(cover) if u in c and v in c)
        if not cols:
            raise ValueError(f"edge ({u}, {v}) is not covered")
        rows.append((cols, Fraction(w)))
        labels.append(("edge", (u, v)))
    for x, w in sorted(vertex_w.items()):
        cols = tuple(j for j, c in enumerate(cover) if x in c)
        rows.append((cols, Fraction(w)))
        labels.append(("vertex", x))
    return LinearSystem(len(cover), tuple(rows), tuple(labels))


def lp_feasible(system: LinearSystem) -> list | None:
    """Return a non-negative solution as a list of Fractions, or ``None``."""
    n, rows = system.n_vars, system.rows
    mrows = len(rows)
    if mrows == 0:
        return [Fraction(0)] * n
    # columns 0..n-1 are the unknowns, n..n+mrows-1 the artificials
    width = n + mrows
    tab = []
    for i, (cols, rhs) in enumerate(rows):
        row = [Fraction(0)] * (width + 1)
        sign = -1 if rhs < 0 else 1
        for j in cols:
            row[j] += sign
        row[n + i] = Fraction(1)
        row[width] = Fraction(rhs) * sign
        tab.append(row)
    basis = [n + i for i in range(mrows)]
    # reduced costs of the phase-one objective (sum of artificials)
    obj = [Fraction(0)] * (width + 1)
    for row in tab:
        for j in range(n):
            obj[j] -= row[j]
        obj[width] -= row[width]

    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i, row in enumerate(tab):
            a = row[enter]
            if a > 0:
                ratio = row[width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # cannot happen: phase one is bounded below by zero
            break
        _pivot(tab, obj, leave, enter)
        basis[leave] = enter

    if obj[width] != 0:
        return None
    gamma = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            gamma[b] = tab[i][width]
    return gamma


def _pivot(tab, obj, r, c):
    prow = tab[r]
    p = prow[c]
    if p != 1:
        prow[:] = [a / p for a in prow]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            row[:] = [a - f * b for a, b in zip(row, prow)]
    if obj[c] != 0:
        f = obj[c]
        obj[:] = [a - f * b for a, b in zip(obj, prow)]


def check_gamma(system: LinearSystem, gamma: Sequence) -> bool:
    if len(gamma) != system.n_vars or any(g < 0 for g in gamma):
        return False
    return all(sum(gamma[j] for j in cols) == rhs for cols, rhs in system.rows)


def integer_gamma_search(system: LinearSystem, wmax: int) -> list | None:
    """Search ``gamma`` in ``{1..wmax}^k`` by backtracking with row bounds."""
    n = system.n_vars
    rows = system.rows
    if n == 0:
        return [] if all(rhs == 0 for _, rhs in rows) else None
    # rows closed once the last of their columns is assigned
    closes = [[] for _ in range(n)]
    touches = [[] for _ in range(n)]
    for i, (cols, _) in enumerate(rows):
        if not cols:
            if rows[i][1] != 0:
                return None
            continue
        closes[max(cols)].append(i)
        for j in cols:
            touches[j].append(i)
    sums = [0] * len(rows)
    gamma = [0] * n

    def go(j):
        if j == n:
            return True
        for val in range(1, wmax + 1):
            ok = True
            for i in touches[j]:
                sums[i] += val
                if sums[i] > rows[i][1]:
                    ok = False
            if ok:
                ok = all(sums[i] == rows[i][1] for i in closes[j])
            if ok:
                gamma[j] = val
                if go(j + 1):
                    return True
            for i in touches[j]:
                sums[i] -= val
        return False

    return [Fraction(g) for g in gamma] if go(0) else None


def brute_integer_gamma(system: LinearSystem, wmax: int) -> list | None:
    """Plain enumeration of ``{1..wmax}^k``; slow, used as a cross-check."""
    for combo in itertools.product(range(1, wmax + 1), repeat=system.n_vars):
        if check_gamma(system, combo):
            return [Fraction(g) for g in combo]
    return None
