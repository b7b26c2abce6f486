import random

import pytest
from hypothesis import given, settings, strategies as st

from lhcds import (CliqueSet, enumerate_cliques, init_weights, objective,
                   oracle_compact_numbers, run_iterations)
from helpers import gnp, k_n, triangle


def test_init_triangle():
    ws = init_weights(enumerate_cliques(triangle(), 3))
    assert ws.share == [[pytest.approx(1 / 3)] * 3]
    assert ws.load == [pytest.approx(1 / 3)] * 3


def test_init_k4():
    ws = init_weights(enumerate_cliques(k_n(4), 3))
    assert ws.load == [pytest.approx(1.0)] * 4


def test_init_empty():
    empty = CliqueSet(h=3, cliques=[], degree=[0, 0], incidence=[[], []])
    ws = init_weights(empty)
    assert ws.load == [0.0, 0.0]
    assert objective(ws) == 0.0


def test_one_round_hand_trace():
    # scale by 1/2, then the single clique tops up its minimum (vertex 0 by
    # the id tie-break): loads (2/3, 1/6, 1/6)
    ws = run_iterations(init_weights(enumerate_cliques(triangle(), 3)), 1)
    assert ws.load == [pytest.approx(2 / 3), pytest.approx(1 / 6), pytest.approx(1 / 6)]


def test_zero_rounds_identity():
    ws = run_iterations(init_weights(enumerate_cliques(k_n(4), 3)), 0)
    assert ws.load == [pytest.approx(1.0)] * 4


def test_k4_twenty_rounds_near_compact_numbers():
    ws = run_iterations(init_weights(enumerate_cliques(k_n(4), 3)), 20)
    assert max(abs(x - 1.0) for x in ws.load) <= 0.15


def test_objective_examples():
    assert objective(init_weights(enumerate_cliques(triangle(), 3))) == \
        pytest.approx(1 / 3)
    assert objective(init_weights(enumerate_cliques(k_n(4), 3))) == \
        pytest.approx(4.0)


def test_objective_settles_below_start():
    g = gnp(random.Random(3), 9, 0.6)
    ws = init_weights(enumerate_cliques(g, 3))
    start = objective(ws)
    run_iterations(ws, 50)
    settled = objective(ws)
    run_iterations(ws, 200)
    assert objective(ws) <= settled + 1e-9
    assert objective(ws) <= start + 1e-9


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 500), st.integers(3, 9), st.sampled_from([2, 3]),
       st.integers(0, 40))
def test_simplex_preserved_per_clique(seed, n, h, rounds):
    g = gnp(random.Random(seed), n, 0.6)
    cs = enumerate_cliques(g, h)
    ws = run_iterations(init_weights(cs), rounds)
    for row in ws.share:
        assert abs(sum(row) - 1.0) <= 1e-9
        assert all(x >= 0.0 for x in row)
    for v in range(n):
        total = sum(ws.share[c][ws.cs.cliques[c].index(v)] for c in cs.incidence[v])
        assert abs(ws.load[v] - total) <= 1e-9 * max(1, cs.degree[v])
    assert abs(sum(ws.load) - len(cs.cliques)) <= 1e-9 * max(1, len(cs.cliques))


def test_long_run_approaches_compact_numbers():
    g = gnp(random.Random(17), 8, 0.6)
    cs = enumerate_cliques(g, 3)
    phi = [float(x) for x in oracle_compact_numbers(g, 3)]
    ws = run_iterations(init_weights(cs), 10_000)
    assert max(abs(ws.load[v] - phi[v]) for v in range(g.n)) <= 0.05
