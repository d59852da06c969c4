import itertools
import math

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliquecover.fixtures import ISR_NAMES, complete, g_isr, gnp, named, path, star
from cliquecover.graph import build_graph, complement, degeneracy_context, enumerate_cliques_with_edge, induced_subgraph
from cliquecover.oracles import all_cliques, maximal_cliques

from conftest import graphs, graphs_with_edge


def brute_degeneracy(g):
    # largest minimum degree over all induced subgraphs
    best = 0
    for r in range(1, g.n + 1):
        for vs in itertools.combinations(range(g.n), r):
            s = set(vs)
            best = max(best, min(len(g.adj[v] & s) for v in vs))
    return best


def bipartite(p, q):
    return build_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def test_build_k3():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.m == 3 and all(g.degree(v) == 2 for v in range(3))


def test_build_isr_degrees():
    g = g_isr()
    deg = {ISR_NAMES[v]: g.degree(v) for v in range(g.n)}
    assert g.m == 13
    assert deg == {"w": 5, "z": 5, "x": 4, "y": 4, "a": 2, "b": 2, "c": 2, "d": 2}


def test_build_edgeless():
    g = build_graph(4, [])
    assert g.m == 0 and g.edges == ()


def test_build_dedupes_and_rejects():
    assert build_graph(2, [(0, 1), (1, 0), (0, 1)]).m == 1
    with pytest.raises(ValueError, match=r"\(0, 5\)"):
        build_graph(3, [(0, 5)])
    with pytest.raises(ValueError, match="self-loop"):
        build_graph(3, [(1, 1)])


def test_degeneracy_examples():
    assert star(6).degeneracy.d == 1
    for p, q in [(2, 3), (3, 3), (1, 4), (4, 2)]:
        assert bipartite(p, q).degeneracy.d == min(p, q)
    assert g_isr().degeneracy.d == 2
    assert complete(5).degeneracy.d == 4


@given(graphs(max_n=8))
def test_degeneracy_matches_brute_force(g):
    ctx = degeneracy_context(g)
    assert ctx.d == brute_degeneracy(g)


@given(st.integers(5, 40), st.floats(0.05, 0.8), st.integers(0, 10**6))
def test_degeneracy_matches_networkx_cores(n, p, seed):
    g = gnp(n, p, seed)
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(g.edges)
    assert g.degeneracy.d == max(nx.core_number(h).values(), default=0)


@given(graphs(max_n=9))
def test_dep_invariants(g):
    ctx = g.degeneracy
    assert sorted(ctx.ordering) == list(range(g.n))
    assert all(ctx.ordering[ctx.position[v]] == v for v in range(g.n))
    assert all(len(ctx.later[v]) <= ctx.d for v in range(g.n))
    # each edge exactly once, oriented forwards, in block order
    assert sorted(tuple(sorted(e)) for e in ctx.dep) == list(g.edges)
    keys = [(ctx.position[x], ctx.position[y]) for x, y in ctx.dep]
    assert all(px < py for px, py in keys)
    assert keys == sorted(keys)


def test_enumerate_k4():
    g = complete(4)
    assert list(enumerate_cliques_with_edge(g, 0, 1, None, "maximal")) == [frozenset(range(4))]
    got = {tuple(sorted(c)) for c in enumerate_cliques_with_edge(g, 0, 1, None, "all")}
    assert got == {(0, 1), (0, 1, 2), (0, 1, 3), (0, 1, 2, 3)}


def test_enumerate_isr_restricted():
    g = g_isr()
    x, w = ISR_NAMES.index("x"), ISR_NAMES.index("w")
    ctx = g.degeneracy
    a, b = (x, w) if ctx.position[x] < ctx.position[w] else (w, x)
    restrict = ctx.later_closed(a) & g.closed(b)
    got = set(enumerate_cliques_with_edge(g, a, b, restrict, "maximal"))
    h, kept = induced_subgraph(g, restrict)
    want = {frozenset(kept[v] for v in c) for c in _mask_sets(maximal_cliques(h)) if {a, b} <= {kept[v] for v in c}}
    assert got == want


def _mask_sets(masks):
    return [{v for v in range(m.bit_length()) if m >> v & 1} for m in masks]


def test_enumerate_rejects_non_edge():
    with pytest.raises(ValueError):
        list(enumerate_cliques_with_edge(path(3), 0, 2))


@given(graphs_with_edge(max_n=8), st.data())
def test_enumerate_all_matches_brute_force(ge, data):
    g, (x, y) = ge
    others = [v for v in range(g.n) if v not in (x, y)]
    restrict = {x, y} | set(data.draw(st.lists(st.sampled_from(others), unique=True) if others else st.just([])))
    got = sorted(tuple(sorted(c)) for c in enumerate_cliques_with_edge(g, x, y, restrict, "all"))
    want = []
    rest = sorted(restrict - {x, y})
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            z = {x, y, *extra}
            if g.is_clique(z):
                want.append(tuple(sorted(z)))
    assert got == sorted(want)
    assert len(got) == len(set(got))


@given(graphs_with_edge(max_n=8))
def test_enumerate_maximal_matches_brute_force(ge):
    g, (x, y) = ge
    got = sorted(tuple(sorted(c)) for c in enumerate_cliques_with_edge(g, x, y, None, "maximal"))
    want = sorted(tuple(sorted(c)) for c in _mask_sets(maximal_cliques(g)) if {x, y} <= c)
    assert got == want


@given(graphs(max_n=12))
def test_maximal_clique_count_bound(g):
    found = set()
    for x, y in g.edges:
        found.update(enumerate_cliques_with_edge(g, x, y, None, "maximal"))
    assert len(found) <= 3 ** (g.n / 3) + 1e-9


def test_complement_examples():
    assert complement(complete(3)).m == 0
    assert complement(build_graph(4, [])) == complete(4)
    g = g_isr()
    assert complement(complement(g)) == g


@given(graphs(max_n=8))
def test_complement_is_exact(g):
    h = complement(g)
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                assert h.has_edge(u, v) != g.has_edge(u, v)


def test_induced_examples():
    h, kept = induced_subgraph(complete(4), [0, 1, 2])
    assert h == complete(3) and kept == [0, 1, 2]
    g = g_isr()
    h, kept = induced_subgraph(g, [ISR_NAMES.index(c) for c in "xwz"])
    assert h.m == 3
    h, kept = induced_subgraph(g, [])
    assert h.n == 0 and kept == []


@given(graphs(max_n=8), st.data())
def test_induced_keeps_exactly_inner_edges(g, data):
    vs = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)))) if g.n else set()
    h, kept = induced_subgraph(g, vs)
    back = {tuple(sorted((kept[u], kept[v]))) for u, v in h.edges}
    assert back == {(u, v) for u, v in g.edges if u in vs and v in vs}


def test_named_helper():
    g = named("abc", "ab", "bc")
    assert g.edges == ((0, 1), (1, 2))


@given(graphs(max_n=10))
def test_all_cliques_oracle_agrees_with_enumeration(g):
    total = sum(1 for c in all_cliques(g) if c.bit_count() >= 2)
    per_edge = sum(1 for x, y in g.edges for _ in enumerate_cliques_with_edge(g, x, y, None, "all"))
    # a clique of size s contains s(s-1)/2 edges
    weighted = sum(math.comb(c.bit_count(), 2) for c in all_cliques(g) if c.bit_count() >= 2)
    assert per_edge == weighted
    assert total <= weighted
