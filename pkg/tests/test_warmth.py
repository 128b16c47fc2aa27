import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

import importlib

from graphwarmth import generators as gen

# the package re-exports the warmth() function, so fetch the module directly
wm = importlib.import_module("graphwarmth.warmth")
from graphwarmth.graphs import Graph, mask_of
from graphwarmth.homcomplex import EvenClosedWalk


# -- independent oracles ---------------------------------------------------

def oracle_d_stable_exists(g, d):
    """Greatest-fixed-point oracle written with plain frozensets only."""
    verts = frozenset(range(g.n))

    def nbhd(s):
        out = set()
        for v in s:
            for u in range(g.n):
                if g.has_edge(v, u):
                    out.add(u)
        return frozenset(out)

    family = {frozenset(s) for k in range(1, g.n)
              for s in itertools.combinations(range(g.n), k)}
    changed = True
    while changed:
        changed = False
        nbs = {a: nbhd(a) for a in family}
        keep = set()
        for a in family:
            ok = False
            for combo in itertools.combinations_with_replacement(sorted(family, key=sorted), d):
                inter = verts
                for b in combo:
                    inter &= nbs[b]
                if inter == a:
                    ok = True
                    break
            if ok:
                keep.add(a)
        if keep != family:
            family = keep
            changed = True
    return bool(family)


def oracle_warmth(g, cap=6):
    """1 + least d with a d-stable family, by the oracle above; None if > cap."""
    for d in range(1, cap + 1):
        if oracle_d_stable_exists(g, d):
            return d + 1
    return None


def doubly_exponential_exists(g, d):
    """Enumerate every subfamily of the powerset directly (n <= 4 only)."""
    subsets = [frozenset(s) for k in range(1, g.n)
               for s in itertools.combinations(range(g.n), k)]

    def nbhd(s):
        out = set()
        for v in s:
            for u in range(g.n):
                if g.has_edge(v, u):
                    out.add(u)
        return frozenset(out)

    for picks in itertools.product([0, 1], repeat=len(subsets)):
        fam = [s for s, take in zip(subsets, picks) if take]
        if not fam:
            continue
        good = True
        for a in fam:
            hit = False
            for combo in itertools.combinations_with_replacement(fam, d):
                inter = frozenset(range(g.n))
                for b in combo:
                    inter &= nbhd(b)
                if inter == a:
                    hit = True
                    break
            if not hit:
                good = False
                break
        if good:
            return True
    return False


def small_graphs(seed_count=14):
    out = [gen.cycle(5), gen.cycle(6), gen.complete(4), gen.complete_bipartite(2, 3),
           gen.path(5), Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)]),
           Graph(3, [(0, 0), (0, 1), (1, 2)])]
    for i in range(seed_count):
        out.append(gen.erdos_renyi(6, 0.4, seed="wo:%d" % i))
    return [g for g in out if g.edge_count > 0]


# -- d_stable_family_exists ------------------------------------------------

def test_exact_matches_pure_python_oracle():
    for g in small_graphs():
        for d in (1, 2, 3):
            fam = wm.d_stable_family_exists(g, d, mode="exact")
            assert (fam is not None) == oracle_d_stable_exists(g, d), (g, d)


def test_exact_matches_doubly_exponential_enumeration():
    graphs = [gen.complete(3), gen.cycle(4), gen.path(4),
              Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)]),
              Graph(4, [(0, 0), (0, 1), (2, 3)])]
    for g in graphs:
        for d in (1, 2, 3):
            got = wm.d_stable_family_exists(g, d, mode="exact") is not None
            assert got == doubly_exponential_exists(g, d), (g, d)


def test_bipartite_one_stable_family():
    g = gen.complete_bipartite(2, 3)
    fam = wm.d_stable_family_exists(g, 1, mode="exact")
    assert fam is not None
    assert mask_of([0, 1]) in fam.members and mask_of([2, 3, 4]) in fam.members


def test_c5_singletons_at_d2():
    fam = wm.d_stable_family_exists(gen.cycle(5), 2, mode="exact")
    assert fam is not None
    for v in range(5):
        assert (1 << v) in fam.members


def test_complete_graph_thresholds():
    for n in (3, 4, 5):
        assert wm.d_stable_family_exists(gen.complete(n), n - 2, mode="exact") is None
        fam = wm.d_stable_family_exists(gen.complete(n), n - 1, mode="exact")
        assert fam is not None
        assert all((1 << v) in fam.members for v in range(n))


def test_capacity_error():
    g = gen.erdos_renyi(25, 0.3, seed=1)
    with pytest.raises(wm.CapacityError):
        wm.d_stable_family_exists(g, 2, mode="exact")
    # heuristic mode works at that size
    wm.d_stable_family_exists(g, 3, mode="heuristic")


def test_heuristic_is_sound():
    # any family the heuristic returns must verify; across several graphs
    for g in small_graphs(8):
        for d in (1, 2, 3):
            fam = wm.d_stable_family_exists(g, d, mode="heuristic")
            if fam is not None:
                assert wm.verify_stable_family(g, fam)
                assert oracle_d_stable_exists(g, d)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_monotone_existence_in_d(seed, d):
    g = gen.erdos_renyi(7, 0.4, seed=seed)
    if g.edge_count == 0:
        return
    if wm.d_stable_family_exists(g, d, mode="exact") is not None:
        assert wm.d_stable_family_exists(g, d + 1, mode="exact") is not None


def test_greatest_fixed_point_is_maximal():
    # the returned family must contain the known hand families
    fam = wm.d_stable_family_exists(gen.cycle(5), 2, mode="exact")
    singles = {1 << v for v in range(5)}
    assert singles <= set(fam.members)


# -- verify_stable_family --------------------------------------------------

def test_verify_rejects_bad_families():
    g = gen.cycle(5)
    full = g.vertex_mask
    with pytest.raises(ValueError):
        wm.verify_stable_family(g, wm.StableFamily(1, 5, frozenset(), {}))
    with pytest.raises(ValueError):
        wm.verify_stable_family(
            g, wm.StableFamily(1, 5, frozenset([full]), {full: (full,)})
        )
    with pytest.raises(ValueError):
        # wrong witness arity
        wm.verify_stable_family(
            g, wm.StableFamily(2, 5, frozenset([1]), {1: (1,)})
        )


# -- warmth ----------------------------------------------------------------

def test_warmth_complete_graphs():
    for n in (3, 4, 5, 6):
        assert wm.warmth(gen.complete(n), mode="exact").value == n


def test_warmth_shortcuts():
    r = wm.warmth(gen.complete_bipartite(3, 3))
    assert r.value == 2 and r.shortcut == "bipartite"
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    r = wm.warmth(g)
    assert r.value == 2 and r.shortcut == "disconnected"
    r = wm.warmth(gen.petersen())
    assert r.value == 3 and r.shortcut == "girth>=5"
    with pytest.raises(ValueError):
        wm.warmth(Graph(3))


def test_warmth_dismantlable_is_infinite():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 3), (3, 0), (3, 1), (3, 2)])
    r = wm.warmth(g)
    assert r.value == math.inf


def test_warmth_odd_cycles_and_grotzsch():
    for m in (5, 7, 9):
        assert wm.warmth(gen.cycle(m)).value == 3
    assert wm.warmth(gen.mycielski(gen.cycle(5))).value == 3


def test_warmth_matches_oracle_on_small_graphs():
    for g in small_graphs(10):
        r = wm.warmth(g, mode="exact")
        expect = oracle_warmth(g)
        if r.value == math.inf:
            assert expect is None
        else:
            assert r.value == expect, g


def test_warmth_certificates_verify():
    for g in (gen.cycle(5), gen.complete(5), gen.complete_bipartite(2, 4),
              gen.mycielski(gen.cycle(5))):
        r = wm.warmth(g)
        if r.value not in (None, math.inf):
            assert wm.verify_stable_family(r.certificate_graph, r.certificate)
            assert r.certificate.d == r.value - 1


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_warmth_fold_invariant(seed):
    from graphwarmth.folding import stiff_reduction

    g = gen.erdos_renyi(8, 0.35, seed=seed)
    if g.edge_count == 0:
        return
    res, _ = stiff_reduction(g)
    if res.n == 1 and res.has_loop(0):
        return
    a = wm.warmth(g, mode="exact", pre_fold=False)
    b = wm.warmth(res, mode="exact", pre_fold=False)
    assert (a.lo, a.hi) == (b.lo, b.hi)


def test_warmth_heuristic_interval_collapse():
    # T_{2,5} is large, but upper bound 3 meets the non-bipartite lower bound
    r = wm.warmth(gen.twisted_toroidal(2, 5), mode="heuristic")
    assert r.value == 3 and r.mode == "exact"


# -- the smaller operations ------------------------------------------------

def test_minimal_witness_size():
    g = gen.cycle(5)
    family = [1 << v for v in range(5)]
    assert wm.minimal_witness_size(g, family, 1 << 0) == 2
    bip = gen.complete_bipartite(2, 3)
    parts = [mask_of([0, 1]), mask_of([2, 3, 4])]
    assert wm.minimal_witness_size(bip, parts, mask_of([2, 3, 4])) == 1
    assert wm.minimal_witness_size(g, family, mask_of([0, 1])) is None


def test_generated_by_at_most():
    g = gen.cycle(5)
    got = wm.generated_by_at_most(g, 0, 2)
    assert got == mask_of([1, 4])
    k4 = gen.complete(4)
    assert wm.generated_by_at_most(k4, 0, 2) is None
    got = wm.generated_by_at_most(k4, 0, 3)
    assert got == mask_of([1, 2, 3])
    for n in (4, 5):
        kn = gen.complete(n)
        got = wm.generated_by_at_most(kn, 1, n - 1)
        assert got == kn.vertex_mask & ~(1 << 1)


def test_find_complete_bipartite():
    c4 = gen.cycle(4)
    got = wm.find_complete_bipartite(c4, 2, 2)
    assert got is not None
    a, b = got
    assert {a, b} == {mask_of([0, 2]), mask_of([1, 3])}
    assert wm.find_complete_bipartite(gen.petersen(), 2, 2) is None
    got = wm.find_complete_bipartite(gen.complete(5), 2, 3)
    assert got is not None
    a, b = got
    assert a.bit_count() == 2 and b.bit_count() == 3 and not a & b


def test_find_complete_bipartite_oracle():
    # exhaustive oracle on small random graphs
    for seed in range(8):
        g = gen.erdos_renyi(7, 0.45, seed="kab:%d" % seed)
        for a, b in ((2, 2), (2, 3)):
            got = wm.find_complete_bipartite(g, a, b)
            brute = False
            for A in itertools.combinations(range(7), a):
                rest = [v for v in range(7) if v not in A]
                for B in itertools.combinations(rest, b):
                    if all(g.has_edge(u, v) for u in A for v in B):
                        brute = True
            assert (got is not None) == brute
            if got is not None:
                am, bm = got
                from graphwarmth.graphs import bits
                assert all(g.has_edge(u, v) for u in bits(am) for v in bits(bm))


# -- two_stable_witness_search ---------------------------------------------

def test_two_stable_search_c6_single_lap():
    c6 = gen.cycle(6)
    fam = wm.two_stable_witness_search(c6, EvenClosedWalk(c6, range(6)))
    assert fam is not None
    assert wm.verify_stable_family(c6, fam)
    assert set(fam.members) == {1 << v for v in range(6)}


def test_two_stable_search_c5_two_laps():
    c5 = gen.cycle(5)
    walk = EvenClosedWalk(c5, [0, 1, 2, 3, 4, 0, 1, 2, 3, 4])
    fam = wm.two_stable_witness_search(c5, walk)
    assert fam is not None
    assert wm.verify_stable_family(c5, fam)


def test_two_stable_search_rejects_null_homologous():
    c4 = gen.cycle(4)
    with pytest.raises(ValueError):
        wm.two_stable_witness_search(c4, EvenClosedWalk(c4, range(4)))
