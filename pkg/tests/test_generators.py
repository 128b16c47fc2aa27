import math

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from graphwarmth import generators as gen
from graphwarmth.graphs import Graph


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def isomorphic(a, b):
    return nx.is_isomorphic(to_nx(a), to_nx(b))


def test_complete_and_cycle_counts():
    assert gen.complete(5).edge_count == 10
    assert gen.cycle(7).edge_count == 7
    assert gen.path(6).edge_count == 5
    assert gen.complete_bipartite(3, 4).edge_count == 12
    with pytest.raises(ValueError):
        gen.cycle(2)


def test_looped_cycle():
    g = gen.looped_cycle(6)
    assert g.n == 6
    assert all(g.has_loop(v) for v in range(6))
    assert g.edge_count == 12


def test_kneser_examples():
    assert isomorphic(gen.kneser(3, 1), gen.complete(3))
    p = gen.kneser(5, 2)
    assert p.n == 10 and p.edge_count == 15
    assert all(p.degree(v) == 3 for v in range(10))
    k62 = gen.kneser(6, 2)
    assert k62.n == 15
    assert all(k62.degree(v) == 6 for v in range(15))
    for n in range(2, 8):
        assert isomorphic(gen.kneser(n, 1), gen.complete(n))


def test_mycielski():
    assert isomorphic(gen.mycielski(gen.complete(2)), gen.cycle(5))
    grotzsch = gen.mycielski(gen.cycle(5))
    assert grotzsch.n == 11 and grotzsch.edge_count == 20
    with pytest.raises(ValueError):
        gen.mycielski(Graph(2, [(0, 0), (0, 1)]))


def test_z2_action_validation():
    c6 = gen.cycle(6)
    act = gen.antipodal_action(c6)
    assert [act(v) for v in range(6)] == [3, 4, 5, 0, 1, 2]
    with pytest.raises(ValueError):
        gen.Z2Action(c6, [1, 2, 3, 4, 5, 0])  # not an involution
    with pytest.raises(ValueError):
        gen.Z2Action(gen.path(4), [1, 0, 2, 3])  # not an automorphism
    with pytest.raises(ValueError):
        gen.antipodal_action(gen.cycle(5))


def test_twisted_product_with_trivial_actions_is_categorical_product():
    g, h = gen.complete(3), gen.path(3)
    prod, quotient = gen.twisted_product(
        g, gen.Z2Action.trivial(g), h, gen.Z2Action.trivial(h)
    )
    assert prod.n == g.n * h.n
    # categorical product adjacency
    inv = {i: xy for xy, i in quotient.items()}
    for i in range(prod.n):
        for j in range(prod.n):
            (x1, y1), (x2, y2) = inv[i], inv[j]
            expect = g.has_edge(x1, x2) and h.has_edge(y1, y2)
            assert prod.has_edge(i, j) == expect


def test_twisted_product_quotient_is_homomorphism():
    k2 = gen.complete(2)
    c6 = gen.looped_cycle(6)
    prod, quotient = gen.twisted_product(
        k2, gen.swap_action(k2), c6, gen.antipodal_action(c6)
    )
    for x in range(2):
        for y in range(6):
            for x2 in range(2):
                for y2 in range(6):
                    if k2.has_edge(x, x2) and c6.has_edge(y, y2):
                        assert prod.has_edge(quotient[(x, y)], quotient[(x2, y2)])


def test_twisted_toroidal_counts_and_regularity():
    for k in range(4):
        for m in range(1, 8):
            g = gen.twisted_toroidal(k, m)
            assert g.n == 2 * m ** k
            if m >= 3 or (k <= 1 and m >= 2):
                assert {g.degree(v) for v in range(g.n)} == {3 ** k}
    assert isomorphic(gen.twisted_toroidal(0, 5), gen.complete(2))


def test_twisted_toroidal_matches_recursive_construction():
    for k in range(3):
        for m in (2, 3, 5):
            a = gen.twisted_toroidal(k, m)
            b = gen.twisted_toroidal_recursive(k, m)
            assert a.n == b.n
            assert isomorphic(a, b)


def test_t13_from_twisted_product():
    k2 = gen.complete(2)
    c6 = gen.looped_cycle(6)
    prod, _ = gen.twisted_product(k2, gen.swap_action(k2), c6, gen.antipodal_action(c6))
    assert prod.n == 6
    assert isomorphic(prod, gen.twisted_toroidal(1, 3))


def test_erdos_renyi_determinism_and_density():
    a = gen.erdos_renyi(30, 0.3, seed="s1")
    b = gen.erdos_renyi(30, 0.3, seed="s1")
    c = gen.erdos_renyi(30, 0.3, seed="s2")
    assert a == b
    assert a != c  # astronomically unlikely to coincide
    # binomial concentration: 435 pairs at p=0.3, mean 130.5, sd ~ 9.6
    counts = [gen.erdos_renyi(30, 0.3, seed=i).edge_count for i in range(20)]
    mean = sum(counts) / len(counts)
    assert 100 < mean < 160
    with pytest.raises(ValueError):
        gen.erdos_renyi(5, 1.5, seed=0)


def test_chung_lu_validation_and_density():
    with pytest.raises(ValueError):
        gen.chung_lu([10, 1, 1], seed=0)  # w_i > n-1
    w = [3.0] * 12
    counts = [gen.chung_lu(w, seed=i).edge_count for i in range(30)]
    mean = sum(counts) / len(counts)  # expected ~ n*w/2 = 18
    assert 10 < mean < 26


def test_chung_lu_constant_weights_match_gnp_density():
    # report-style sanity: constant w_i = p(n-1) gives G(n,p)-like density
    n, p = 14, 0.4
    w = [p * (n - 1)] * n
    cl = [gen.chung_lu(w, seed=i).edge_count for i in range(30)]
    er = [gen.erdos_renyi(n, p, seed=i).edge_count for i in range(30)]
    # same expected edge count p*C(n,2) = 36.4; allow generous slack
    assert abs(sum(cl) / 30 - sum(er) / 30) < 8
