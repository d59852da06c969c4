"""Small named graphs used throughout the tests and examples."""

from __future__ import annotations

import random
from importlib import resources

from .formats import parse_graph_text, parse_pairs, parse_weighted_text
from .graph import Graph, build_graph

ISR_NAMES = "xywzabcd"
K4W_NAMES = "abcd"
LRCC_NAMES = "abcdefg"


def data_path(name: str):
    return resources.files("cliquecover") / "data" / name


def _read(name: str) -> str:
    return data_path(name).read_text()


def g_isr() -> Graph:
    """Eight vertices: two degree-5 hubs ``w, z``, two degree-4 vertices
    ``x, y`` and four pendant triangles through ``a, b, c, d``."""
    return parse_graph_text(_read("g_isr.edges"))


def k4_weighted() -> tuple[Graph, dict]:
    g = parse_graph_text(_read("k4w.edges"))
    we, _ = parse_weighted_text(_read("k4w.weights"))
    return g, we


def g_lrcc() -> Graph:
    return parse_graph_text(_read("g_lrcc.edges"))


def g_lrcc_estar() -> list:
    return parse_pairs(data_path("g_lrcc.estar"))


def named(names: str, *edges: str) -> Graph:
    """``named("abc", "ab", "bc")`` builds a graph from letter pairs."""
    idx = {c: i for i, c in enumerate(names)}
    return build_graph(len(names), [(idx[e[0]], idx[e[1]]) for e in edges])


def complete(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Centre ``0`` joined to ``n`` leaves."""
    return build_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def k3() -> Graph:
    return complete(3)


def p3() -> Graph:
    return path(3)


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def all_graphs(n: int):
    """Every labelled graph on ``n`` vertices."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
