"""Constructors for the graph families used throughout the library.

Random models use Python's Mersenne Twister (random.Random) so that a given
seed reproduces the same graph on every platform.
"""

import itertools
import random

from .graphs import Graph, bits


# -- deterministic families -----------------------------------------------

def complete(n):
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(k):
    """Path on k vertices (k-1 edges)."""
    if k < 1:
        raise ValueError("path(k) needs k >= 1")
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(m):
    if m < 3:
        raise ValueError("cycle(m) needs m >= 3")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def looped_cycle(length):
    """Even cycle with a loop at every vertex."""
    if length < 3:
        raise ValueError("looped_cycle needs length >= 3")
    edges = [(i, (i + 1) % length) for i in range(length)]
    edges += [(i, i) for i in range(length)]
    return Graph(length, edges)


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite(a, b) needs a, b >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def kneser(n, k):
    """Vertices are the k-subsets of an n-set; edges join disjoint subsets."""
    if k < 1 or n < 2 * k:
        raise ValueError("kneser(n, k) needs n >= 2k >= 2")
    subsets = [frozenset(c) for c in itertools.combinations(range(n), k)]
    edges = [
        (i, j)
        for i in range(len(subsets))
        for j in range(i + 1, len(subsets))
        if not (subsets[i] & subsets[j])
    ]
    return Graph(len(subsets), edges, labels=[tuple(sorted(s)) for s in subsets])


def mycielski(g):
    """Mycielski construction: V + shadow copy V' + apex z.

    Edges: original edges; u' ~ v for every edge uv; every v' ~ z.
    Undefined for graphs with loops.
    """
    if any(g.has_loop(v) for v in range(g.n)):
        raise ValueError("Mycielski construction requires a loop-free graph")
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((n + u, v))
        edges.append((n + v, u))
    z = 2 * n
    edges.extend((n + v, z) for v in range(n))
    return Graph(2 * n + 1, edges)


def petersen():
    return kneser(5, 2)


# -- twisted products -----------------------------------------------------

class Z2Action:
    """An involutive graph automorphism, given as a vertex permutation."""

    def __init__(self, g, perm):
        perm = tuple(perm)
        if sorted(perm) != list(range(g.n)):
            raise ValueError("not a permutation of 0..%d" % (g.n - 1))
        for v in range(g.n):
            if perm[perm[v]] != v:
                raise ValueError("permutation is not an involution")
        for v in range(g.n):
            image = 0
            for u in bits(g.adj[v]):
                image |= 1 << perm[u]
            if image != g.adj[perm[v]]:
                raise ValueError("permutation is not a graph automorphism")
        self.graph = g
        self.perm = perm

    @classmethod
    def trivial(cls, g):
        return cls(g, range(g.n))

    def __call__(self, v):
        return self.perm[v]


def swap_action(k2):
    """The action interchanging the two endpoints of an edge graph."""
    if k2.n != 2:
        raise ValueError("swap_action expects a 2-vertex graph")
    return Z2Action(k2, (1, 0))


def antipodal_action(g):
    """v -> v + n/2 on a cycle-like graph with an even vertex count."""
    if g.n % 2:
        raise ValueError("antipodal action needs an even vertex count")
    h = g.n // 2
    return Z2Action(g, [(v + h) % g.n for v in range(g.n)])


def twisted_product(g, act_g, h, act_h):
    """Categorical product of g and h quotiented by (gamma·x, y) ~ (x, gamma·y).

    Returns (graph, quotient) where quotient maps each pair (x, y) of
    V(g) x V(h) to its class index.  Classes are numbered by their
    lexicographically least representative.
    """
    if act_g.graph is not g and act_g.graph != g:
        raise ValueError("act_g does not act on g")
    if act_h.graph is not h and act_h.graph != h:
        raise ValueError("act_h does not act on h")

    def canon(x, y):
        return min((x, y), (act_g(x), act_h(y)))

    classes = sorted({canon(x, y) for x in range(g.n) for y in range(h.n)})
    index = {rep: i for i, rep in enumerate(classes)}
    quotient = {
        (x, y): index[canon(x, y)] for x in range(g.n) for y in range(h.n)
    }

    edges = set()
    # Adjacency between classes holds iff SOME representatives are adjacent in
    # both coordinates; it suffices to pair each representative of one class
    # against both representatives of the other, which the loop below covers
    # by ranging over all pairs of pairs through the quotient map.
    for x, y in quotient:
        for x2 in bits(g.adj[x]):
            for y2 in bits(h.adj[y]):
                a, b = quotient[(x, y)], quotient[(x2, y2)]
                edges.add((min(a, b), max(a, b)))
    out = Graph(len(classes), sorted(edges), labels=classes)
    return out, quotient


def twisted_toroidal(k, m):
    """Iterated Z2-twisted product of K2 with looped even cycles of length 2m.

    Built from the concrete representation: vertices are classes of tuples
    (eps, a_1..a_k) with eps in {0,1} and a_i mod 2m, where adding m to one
    coordinate flips eps.  Canonical form: every a_i reduced below m, with the
    parity of the reductions folded into eps.  Neighbors change eps and shift
    every coordinate by -1, 0 or +1.
    """
    if k < 0 or m < 1:
        raise ValueError("twisted_toroidal(k, m) needs k >= 0, m >= 1")

    def canon(eps, coords):
        flips = 0
        reduced = []
        for a in coords:
            a %= 2 * m
            if a >= m:
                a -= m
                flips ^= 1
            reduced.append(a)
        return (eps ^ flips, tuple(reduced))

    verts = sorted(
        {canon(e, c) for e in (0, 1) for c in itertools.product(range(2 * m), repeat=k)}
    )
    index = {rep: i for i, rep in enumerate(verts)}
    edges = set()
    for eps, coords in verts:
        i = index[(eps, coords)]
        for shift in itertools.product((-1, 0, 1), repeat=k):
            j = index[canon(1 - eps, [a + s for a, s in zip(coords, shift)])]
            edges.add((min(i, j), max(i, j)))
    return Graph(len(verts), sorted(edges), labels=verts)


def twisted_toroidal_recursive(k, m):
    """Reference construction by iterating twisted_product; used to cross-check.

    The Z2 action on each intermediate product is the one induced on classes
    by acting on the first coordinate: gamma·[x, y] = [gamma·x, y].
    """
    if k < 0 or m < 1:
        raise ValueError("twisted_toroidal_recursive(k, m) needs k >= 0, m >= 1")
    g = complete(2)
    act = swap_action(g)
    for _ in range(k):
        c = looped_cycle(2 * m)
        g2, quotient = twisted_product(g, act, c, antipodal_action(c))
        perm = [0] * g2.n
        for (x, y), i in quotient.items():
            perm[i] = quotient[(act(x), y)]
        g, act = g2, Z2Action(g2, perm)
    return g


# -- random models --------------------------------------------------------

def erdos_renyi(n, p, seed):
    """G(n, p): each non-loop pair is an edge with probability p, independently."""
    if not 0 <= p <= 1:
        raise ValueError("edge probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def chung_lu(w, seed):
    """Random graph with expected degrees w: P[ij] = w_i w_j / sum(w)."""
    w = [float(x) for x in w]
    n = len(w)
    total = sum(w)
    for i, wi in enumerate(w):
        if not 0 <= wi <= n - 1:
            raise ValueError("expected degree w[%d]=%r outside [0, n-1]" % (i, wi))
        if wi * wi > total + 1e-9:
            raise ValueError("w[%d]^2 exceeds sum of expected degrees" % i)
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            pij = w[u] * w[v] / total if total > 0 else 0.0
            if rng.random() < pij:
                edges.append((u, v))
    return Graph(n, edges)
