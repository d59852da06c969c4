"""Reading and writing graphs, weights and solutions."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .graph import Graph, build_graph


class FormatError(ValueError):
    """Malformed input; the message carries the offending line number."""


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "#" or line == "c" or line.startswith(("c ", "c\t")):
            continue
        yield no, line.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {no}: expected an integer, got {tok!r}") from None


def parse_graph_text(text: str, fmt: str = "auto") -> Graph:
    """Parse DIMACS (``p edge n m`` / ``e u v``, 1-based) or a 0-based edge list.

    The edge list may declare its vertex count with a line ``n N``; otherwise
    the largest endpoint decides.
    """
    rows = list(_lines(text))
    if fmt == "auto":
        fmt = "dimacs" if any(toks[0] == "p" for _, toks in rows) else "edgelist"
    edges = []
    n = None
    if fmt == "dimacs":
        for no, toks in rows:
            if toks[0] == "p":
                if len(toks) != 4:
                    raise FormatError(f"line {no}: bad problem line")
                n = _int(toks[2], no)
            elif toks[0] == "e":
                if n is None:
                    raise FormatError(f"line {no}: edge before problem line")
                if len(toks) != 3:
                    raise FormatError(f"line {no}: expected 'e u v'")
                u, v = _int(toks[1], no) - 1, _int(toks[2], no) - 1
                _check(u, v, n, no)
                edges.append((u, v))
            else:
                raise FormatError(f"line {no}: unexpected record {toks[0]!r}")
        if n is None:
            raise FormatError("missing problem line")
    elif fmt == "edgelist":
        top = -1
        for no, toks in rows:
            if toks[0] == "n" and len(toks) == 2:
                n = _int(toks[1], no)
                continue
            if len(toks) != 2:
                raise FormatError(f"line {no}: expected 'u v'")
            u, v = _int(toks[0], no), _int(toks[1], no)
            _check(u, v, n, no)
            top = max(top, u, v)
            edges.append((u, v))
        if n is None:
            n = top + 1
        elif top >= n:
            raise FormatError(f"vertex {top} exceeds declared count {n}")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return build_graph(n, edges)


def _check(u, v, n, no):
    if u < 0 or v < 0 or (n is not None and (u >= n or v >= n)):
        raise FormatError(f"line {no}: vertex out of range in ({u}, {v})")
    if u == v:
        raise FormatError(f"line {no}: self-loop ({u}, {v})")


def parse_graph(path, fmt: str = "auto") -> Graph:
    return parse_graph_text(Path(path).read_text(), fmt)


def parse_number(tok: str, no: int = 0) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"line {no}: bad number {tok!r}") from None


def parse_weighted_text(text: str) -> tuple[dict, dict]:
    """Parse ``u v w`` edge weights and ``v s W`` vertex weights.

    Returns ``(edge_weights, vertex_weights)``; edge keys are ``(min, max)``
    pairs and values are exact :class:`Fraction` objects.
    """
    we, ws = {}, {}
    for no, toks in _lines(text):
        if len(toks) == 3 and toks[1] == "s":
            v = _int(toks[0], no)
            w = parse_number(toks[2], no)
            if w <= 0:
                raise FormatError(f"line {no}: weight must be positive")
            ws[v] = w
        elif len(toks) == 3:
            u, v = _int(toks[0], no), _int(toks[1], no)
            _check(u, v, None, no)
            w = parse_number(toks[2], no)
            if w <= 0:
                raise FormatError(f"line {no}: weight must be positive")
            we[(min(u, v), max(u, v))] = w
        else:
            raise FormatError(f"line {no}: expected 'u v w' or 'v s W'")
    return we, ws


def parse_weighted(path) -> tuple[dict, dict]:
    return parse_weighted_text(Path(path).read_text())


def parse_pairs(path) -> list:
    pairs = []
    for no, toks in _lines(Path(path).read_text()):
        if len(toks) != 2:
            raise FormatError(f"line {no}: expected 'u v'")
        pairs.append((_int(toks[0], no), _int(toks[1], no)))
    return pairs


def write_edgelist(g: Graph) -> str:
    out = [f"n {g.n}"]
    out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def write_dimacs(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}"]
    out += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def fraction_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cover_to_json(cover: Iterable, gamma=None) -> dict:
    out = {"cover": [sorted(c) for c in cover]}
    if gamma is not None:
        out["gamma"] = [fraction_str(x) for x in gamma]
    return out


def load_solution(path) -> tuple[list, list | None]:
    """Read a solution file: either the JSON envelope or one clique per line."""
    text = Path(path).read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        cover = [frozenset(_int(t, no) for t in toks) for no, toks in _lines(text)]
        return cover, None
    cover = [frozenset(c) for c in obj.get("cover") or []]
    gamma = obj.get("gamma")
    if gamma is not None:
        gamma = [Fraction(x) for x in gamma]
    return cover, gamma
