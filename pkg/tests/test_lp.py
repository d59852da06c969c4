import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import linprog

from cliquecover.fixtures import k4_weighted
from cliquecover.lp import LinearSystem, brute_integer_gamma, build_lp, check_gamma, integer_gamma_search, lp_feasible


def test_k4w_cover_weights():
    g, we = k4_weighted()
    cover = [{0, 1, 2, 3}, {0, 1, 2}, {0, 1}]
    gamma = lp_feasible(build_lp(cover, we))
    assert gamma is not None and check_gamma(build_lp(cover, we), gamma)
    # the system has full column rank here, so gamma is unique
    assert gamma == [1, 1, 99]


def test_uncovered_edge_is_rejected():
    with pytest.raises(ValueError, match="not covered"):
        build_lp([{0, 1}], {(0, 1): 1, (1, 2): 1})


def test_small_examples():
    one = LinearSystem(1, (((0,), Fraction(1)),))
    assert lp_feasible(one) == [1]
    # x = 1 and x = 2 cannot both hold
    clash = LinearSystem(1, (((0,), Fraction(1)), ((0,), Fraction(2))))
    assert lp_feasible(clash) is None
    # x + y = 1, x = 2 needs y < 0
    neg = LinearSystem(2, (((0, 1), Fraction(1)), ((0,), Fraction(2))))
    assert lp_feasible(neg) is None
    # a fractional solution
    half = LinearSystem(2, (((0, 1), Fraction(1)), ((0,), Fraction(1, 2)), ((1,), Fraction(1, 2))))
    assert lp_feasible(half) == [Fraction(1, 2), Fraction(1, 2)]
    assert lp_feasible(LinearSystem(3, ())) == [0, 0, 0]


def test_vertex_rows():
    cover = [{0, 1}, {1, 2}]
    sys_ = build_lp(cover, {(0, 1): 2, (1, 2): 3}, {1: 5})
    assert lp_feasible(sys_) == [2, 3]
    assert lp_feasible(build_lp(cover, {(0, 1): 2, (1, 2): 3}, {1: 4})) is None


def test_integer_search_examples():
    sys_ = LinearSystem(2, (((0, 1), Fraction(3)),))
    assert integer_gamma_search(sys_, 2) in ([1, 2], [2, 1])
    assert integer_gamma_search(sys_, 1) is None
    half = LinearSystem(1, (((0,), Fraction(1, 2)),))
    assert integer_gamma_search(half, 5) is None
    assert lp_feasible(half) == [Fraction(1, 2)]


@st.composite
def systems(draw, max_vars=5, max_rows=6, max_rhs=6):
    n = draw(st.integers(1, max_vars))
    rows = []
    for _ in range(draw(st.integers(0, max_rows))):
        cols = tuple(sorted(draw(st.sets(st.integers(0, n - 1), min_size=1))))
        rows.append((cols, Fraction(draw(st.integers(0, max_rhs)))))
    return LinearSystem(n, tuple(rows))


def scipy_feasible(system):
    if not system.rows:
        return True
    a = np.zeros((len(system.rows), system.n_vars))
    b = np.zeros(len(system.rows))
    for i, (cols, rhs) in enumerate(system.rows):
        for j in cols:
            a[i, j] = 1
        b[i] = float(rhs)
    res = linprog(np.zeros(system.n_vars), A_eq=a, b_eq=b, bounds=[(0, None)] * system.n_vars, method="highs")
    return res.status == 0


@given(systems())
def test_feasibility_agrees_with_scipy(system):
    gamma = lp_feasible(system)
    assert (gamma is not None) == scipy_feasible(system)
    if gamma is not None:
        assert check_gamma(system, gamma)


@given(systems(max_vars=4, max_rhs=4), st.integers(1, 3))
def test_integer_search_agrees_with_enumeration(system, wmax):
    got = integer_gamma_search(system, wmax)
    want = brute_integer_gamma(system, wmax)
    assert (got is None) == (want is None)
    if got is not None:
        assert check_gamma(system, got) and all(1 <= x <= wmax for x in got)


@given(systems(), st.randoms())
def test_feasibility_is_permutation_invariant(system, rnd):
    perm = list(range(system.n_vars))
    rnd.shuffle(perm)
    rows = [(tuple(sorted(perm[j] for j in cols)), rhs) for cols, rhs in system.rows]
    rnd.shuffle(rows)
    other = LinearSystem(system.n_vars, tuple(rows))
    assert (lp_feasible(system) is None) == (lp_feasible(other) is None)


def test_random_planted_solutions():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        gamma = [Fraction(rng.randint(0, 8), rng.randint(1, 4)) for _ in range(n)]
        rows = []
        for _ in range(rng.randint(1, 8)):
            cols = tuple(sorted(rng.sample(range(n), rng.randint(1, n))))
            rows.append((cols, sum(gamma[j] for j in cols)))
        system = LinearSystem(n, tuple(rows))
        found = lp_feasible(system)
        assert found is not None and check_gamma(system, found)
