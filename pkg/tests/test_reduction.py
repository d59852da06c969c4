import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquecover.drivers import solve_acc, solve_ecc
from cliquecover.fixtures import all_graphs, complete, g_isr, k3, named, p3
from cliquecover.graph import build_graph
from cliquecover.oracles import oracle_acc, oracle_min_assignment, oracle_min_ecc, oracle_vcc, verify_solution
from cliquecover.problems import AwecpInstance
from cliquecover.reduction import (
    NO,
    OPEN,
    ReductionTrace,
    awecp_sanity,
    lift_solution,
    reduce_acc,
    reduce_ecc,
    reduce_vcc_to_acc,
)
from cliquecover.search_f2 import accs2, eccs2

from conftest import graphs


def sets(cover):
    return sorted(sorted(c) for c in cover)


def test_ecc_isolated_vertex_is_dropped_once():
    g = build_graph(4, [(0, 1), (1, 2), (0, 2)])
    red = reduce_ecc(g, 1)
    drops = [s for s in red.trace.steps if s["kind"] == "drop"]
    assert drops == [{"kind": "drop", "vertex": 3}]
    assert red.verdict == OPEN
    assert sets(lift_solution(red.trace, [])) == [[0, 1, 2]]


def test_ecc_complete_graph_collapses():
    red = reduce_ecc(complete(4), 1)
    twins = [s for s in red.trace.steps if s["kind"] == "twin"]
    assert len(twins) == 3 and red.verdict == OPEN
    # the merged class becomes one forced clique, lifted back to the whole K4
    assert red.graph.n == 0 and red.parameter == 0
    assert sets(lift_solution(red.trace, [])) == [[0, 1, 2, 3]]


def test_ecc_isr_is_already_reduced():
    red = reduce_ecc(g_isr(), 5)
    assert red.trace.steps == [] and red.verdict == OPEN and red.graph == g_isr()


def test_ecc_size_checks():
    # P5 has n=5 > (d+1)k = 4 for k=2
    red = reduce_ecc(build_graph(5, [(i, i + 1) for i in range(4)]), 2)
    assert red.verdict == NO and red.trace.steps[-1] == {"kind": "reject", "why": "size"}
    # a perfect matching on 8 vertices: n = 8 > (d+1)k = 6
    red = reduce_ecc(build_graph(8, [(0, 1), (2, 3), (4, 5), (6, 7)]), 3)
    assert red.verdict == NO


def test_gyarfas_check_fires_alone():
    # C6 needs six cliques; with k=2 the size test passes (6 <= 3*2) but 6 >= 2^2
    c6 = build_graph(6, [(i, (i + 1) % 6) for i in range(6)])
    red = reduce_ecc(c6, 2)
    assert red.verdict == NO and red.trace.steps[-1]["why"] == "exponential"


def test_acc_examples():
    red = reduce_acc(k3(), 3)
    assert red.graph.n == 0 and red.parameter == 0 and sets(red.forced_cliques) == [[0, 1, 2]]
    red = reduce_acc(p3(), 4)
    assert sets(red.forced_cliques) == [[0, 1], [1, 2]] and red.parameter == 0 and red.verdict == OPEN
    assert sets(lift_solution(red.trace, [])) == [[0, 1], [1, 2]]
    red = reduce_acc(p3(), 3)
    assert red.verdict == NO
    assert oracle_min_assignment(p3())[0] == 4


def test_twin_gadget_lift():
    g = named("abcd", "ab", "bc", "bd", "cd")
    red = reduce_ecc(g, 2)
    assert [s["kind"] for s in red.trace.steps] == ["twin"]
    sol = eccs2(red.graph, red.parameter)
    lifted = lift_solution(red.trace, sol.cliques, red.graph)
    assert sets(lifted) == [[0, 1], [1, 2, 3]]
    assert verify_solution("ecc", g, lifted, 2)


def test_lift_rejects_bad_input():
    g = named("abcd", "ab", "bc", "bd", "cd")
    red = reduce_ecc(g, 2)
    with pytest.raises(ValueError, match="not covered"):
        lift_solution(red.trace, [{0, 1}], red.graph)
    with pytest.raises(ValueError, match="outside the kernel"):
        lift_solution(red.trace, [{0, 7}])
    bad = reduce_ecc(build_graph(5, [(i, i + 1) for i in range(4)]), 2)
    with pytest.raises(ValueError, match="rejected"):
        lift_solution(bad.trace, [])


def test_trace_json_round_trip():
    red = reduce_ecc(named("abcde", "ab", "bc", "bd", "cd"), 2)
    back = ReductionTrace.from_json(red.trace.to_json())
    assert back == red.trace


def test_awecp_sanity_examples():
    we = {e: 2 for e in k3().edges}
    assert awecp_sanity(AwecpInstance(k3(), 3, we, {0: 1})) == NO
    assert awecp_sanity(AwecpInstance(k3(), 3, we, {0: 5})) == NO
    assert awecp_sanity(AwecpInstance(k3(), 3, we, {0: 2})) == OPEN


def test_vcc_to_acc_examples():
    h, t = reduce_vcc_to_acc(p3(), 2)
    assert (h.n, t) == (8, 29) and oracle_acc(h, t)
    h, t = reduce_vcc_to_acc(p3(), 1)
    assert t == 24 and not oracle_acc(h, t)
    h, t = reduce_vcc_to_acc(k3(), 1)
    # ten vertices is past the oracle's size guard; both engines must agree
    assert t == 34 and accs2(h, t) and solve_acc(h, t, "f1")


def test_vcc_to_acc_equivalence_small():
    for n in range(1, 4):
        for g in all_graphs(n):
            for k in range(n + 1):
                h, t = reduce_vcc_to_acc(g, k)
                assert solve_acc(h, t).answer == oracle_vcc(g, k)


@given(graphs(max_n=8), st.integers(0, 6))
def test_ecc_fixpoint_properties(g, k):
    red = reduce_ecc(g, k)
    if red.verdict == NO:
        return
    h = red.graph
    assert all(h.adj[v] for v in range(h.n))
    closed = [h.closed(v) for v in range(h.n)]
    assert len(set(closed)) == len(closed)


def test_ecc_soundness_exhaustive_small():
    for n in range(1, 6):
        for g in all_graphs(n):
            best = oracle_min_ecc(g)[0]
            for k in range(best + 2):
                out = solve_ecc(g, k)
                assert out.answer == (k >= best)
                if out:
                    assert verify_solution("ecc", g, out.cliques, k)


@settings(max_examples=40)
@given(graphs(min_n=6, max_n=6))
def test_ecc_soundness_n6(g):
    best = oracle_min_ecc(g)[0]
    for k in range(best + 2):
        out = solve_ecc(g, k, "f1")
        assert out.answer == (k >= best)
        if out:
            assert verify_solution("ecc", g, out.cliques, k)


@given(graphs(max_n=6))
def test_acc_soundness(g):
    best = oracle_min_assignment(g)[0]
    for t in range(max(0, best - 2), best + 2):
        out = solve_acc(g, t)
        assert out.answer == (t >= best)
        if out:
            assert verify_solution("acc", g, out.cliques, t)
