import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from graphwarmth import generators as gen
from graphwarmth.chromatic import (
    chromatic_number,
    greedy_clique,
    greedy_coloring,
    is_k_colorable,
)
from graphwarmth.graphs import Graph


def brute_force_colorable(g, k):
    if any(g.has_loop(v) for v in range(g.n)):
        return False
    for colors in itertools.product(range(k), repeat=g.n):
        if all(colors[u] != colors[v] for u, v in g.edges()):
            return True
    return False


def test_known_values():
    for n in (2, 3, 4, 5):
        assert chromatic_number(gen.complete(n)) == n
    assert chromatic_number(gen.petersen()) == 3
    assert chromatic_number(gen.mycielski(gen.cycle(5))) == 4
    assert chromatic_number(gen.complete_bipartite(3, 4)) == 2
    assert chromatic_number(gen.cycle(7)) == 3
    assert chromatic_number(Graph(3)) == 1


def test_loops_give_infinity():
    assert chromatic_number(Graph(2, [(0, 0), (0, 1)])) == math.inf
    assert not is_k_colorable(Graph(1, [(0, 0)]), 5)


def test_mycielski_increments_chi():
    g = gen.complete(2)
    for expect in (3, 4):
        g = gen.mycielski(g)
        assert chromatic_number(g) == expect


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_decision_matches_brute_force(seed, k):
    g = gen.erdos_renyi(6, 0.5, seed=seed)
    assert is_k_colorable(g, k) == brute_force_colorable(g, k)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_chromatic_number_is_the_threshold(seed):
    g = gen.erdos_renyi(7, 0.5, seed=seed)
    chi = chromatic_number(g)
    assert brute_force_colorable(g, chi)
    if chi > 1:
        assert not brute_force_colorable(g, chi - 1)


def test_greedy_coloring_is_proper():
    for seed in range(6):
        g = gen.erdos_renyi(12, 0.4, seed="gc:%d" % seed)
        k, colors = greedy_coloring(g)
        assert all(colors[u] != colors[v] for u, v in g.edges() if u != v)
        assert k >= chromatic_number(g)


def test_greedy_clique_is_a_clique():
    for seed in range(6):
        g = gen.erdos_renyi(10, 0.5, seed="cl:%d" % seed)
        clique = greedy_clique(g)
        assert all(
            g.has_edge(u, v) for u in clique for v in clique if u != v
        )


def test_budget_exhaustion_returns_interval():
    g = gen.mycielski(gen.mycielski(gen.cycle(5)))
    out = chromatic_number(g, time_budget_ms=0)
    assert isinstance(out, tuple)
    lo, hi = out
    assert lo <= 5 <= hi
