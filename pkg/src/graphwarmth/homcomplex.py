"""The polyhedral complex of edge homomorphisms into a graph.

Cells are pairs (sigma, tau) of nonempty vertex sets with every cross pair an
edge of G (v in both sides is allowed only when v is looped).  0-cells are
the directed edges of G; a cell sigma x tau has dimension |sigma|+|tau|-2.
Cells are products of simplices, so the cellular boundary is the standard
product formula with vertices of each factor ordered ascending by index.
"""

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .graphs import bits, mask_of
from .intlinalg import rank_exact, smith_normal_form

DEFAULT_MAX_DIM = 6


class EmptyComplexError(ValueError):
    pass


@dataclass(frozen=True)
class Cell:
    sigma: int  # vertex mask
    tau: int    # vertex mask

    @property
    def dim(self):
        return self.sigma.bit_count() + self.tau.bit_count() - 2


class CellComplex:
    """Dimension-graded cells with integer boundary matrices.

    boundary[k] maps k-chains to (k-1)-chains, shape (#cells_{k-1}, #cells_k).
    Immutable after construction.
    """

    def __init__(self, cells_by_dim, truncated, graph):
        self.cells = cells_by_dim            # list of lists of (sigma, tau)
        self.index = [
            {cell: i for i, cell in enumerate(layer)} for layer in cells_by_dim
        ]
        self.truncated = truncated
        self.graph = graph
        self.boundary = _boundary_matrices(self)
        _check_boundary_squares_to_zero(self)

    @property
    def top_dim(self):
        return len(self.cells) - 1

    def f_vector(self):
        return [len(layer) for layer in self.cells]

    def euler_characteristic(self):
        return sum((-1) ** k * f for k, f in enumerate(self.f_vector()))

    def component_count(self):
        """Connected components of the 1-skeleton (union-find oracle for b0)."""
        n0 = len(self.cells[0])
        parent = list(range(n0))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        if self.top_dim >= 1:
            for smask, tmask in self.cells[1]:
                endpoints = []
                if smask.bit_count() == 2:
                    a, b = bits(smask)
                    endpoints = [(1 << a, tmask), (1 << b, tmask)]
                else:
                    a, b = bits(tmask)
                    endpoints = [(smask, 1 << a), (smask, 1 << b)]
                i = self.index[0][endpoints[0]]
                j = self.index[0][endpoints[1]]
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
        return len({find(i) for i in range(n0)})


def build_hom_k2(g, max_dim=None):
    """All cells of the edge-homomorphism complex up to dimension max_dim.

    Enumeration: for each sigma with common neighborhood C(sigma) nonempty,
    emit (sigma, tau) for every nonempty tau within C(sigma); subsets of such
    sigma have larger common neighborhoods, so the result is closed under
    faces by construction.
    """
    if g.edge_count == 0:
        raise EmptyComplexError("graph has no edge; the complex is empty")
    size_cap = g.n if max_dim is None else min(g.n, max_dim + 2)

    sigmas = []       # (mask, common neighborhood), |sigma| < size_cap
    truncated = False

    def extend(smask, common, start):
        nonlocal truncated
        size = smask.bit_count()
        if size + common.bit_count() > size_cap:
            truncated = True
        if size >= size_cap:
            return
        sigmas.append((smask, common))
        for v in range(start, g.n):
            c2 = common & g.adj[v]
            if c2:
                extend(smask | (1 << v), c2, v + 1)

    for v in range(g.n):
        if g.adj[v]:
            extend(1 << v, g.adj[v], v + 1)

    layers = {}
    for smask, common in sigmas:
        ssize = smask.bit_count()
        members = list(bits(common))
        for tsize in range(1, size_cap - ssize + 1):
            for combo in itertools.combinations(members, tsize):
                cell = (smask, mask_of(combo))
                layers.setdefault(ssize + tsize - 2, []).append(cell)

    top = max(layers)
    cells_by_dim = [sorted(layers.get(k, [])) for k in range(top + 1)]
    return CellComplex(cells_by_dim, truncated, g)


def _position_sign(v, mask):
    # (-1)^(position of v in ascending vertex order of mask)
    below = mask & ((1 << v) - 1)
    return -1 if below.bit_count() % 2 else 1


def _boundary_matrices(cx):
    mats = [np.zeros((0, len(cx.cells[0])), dtype=np.int64)]
    for k in range(1, cx.top_dim + 1):
        mat = np.zeros((len(cx.cells[k - 1]), len(cx.cells[k])), dtype=np.int64)
        for col, (smask, tmask) in enumerate(cx.cells[k]):
            if smask.bit_count() >= 2:
                for v in bits(smask):
                    face = (smask ^ (1 << v), tmask)
                    mat[cx.index[k - 1][face], col] += _position_sign(v, smask)
            if tmask.bit_count() >= 2:
                cross = -1 if (smask.bit_count() - 1) % 2 else 1
                for w in bits(tmask):
                    face = (smask, tmask ^ (1 << w))
                    mat[cx.index[k - 1][face], col] += cross * _position_sign(w, tmask)
        mats.append(mat)
    return mats


def _check_boundary_squares_to_zero(cx):
    for k in range(2, cx.top_dim + 1):
        prod = cx.boundary[k - 1] @ cx.boundary[k]
        if prod.size and np.any(prod):
            raise AssertionError("boundary does not square to zero at dimension %d" % k)


@dataclass
class HomologySummary:
    """Betti numbers and torsion coefficients per dimension.

    A torsion layer of None means torsion was not computed there (fast path);
    vanishing claims at such a dimension are then free-part only.
    """

    betti: list
    torsion: list            # per dimension: list of coefficients >= 2, or None
    computed_dim: int
    truncated: bool = False

    def torsion_known(self, k):
        return self.torsion[k] is not None

    def reduced_is_zero(self, k):
        b = self.betti[k] - (1 if k == 0 else 0)
        return b == 0 and not self.torsion[k]


def homology(cx, max_dim=None):
    """Integer homology via Smith normal form, exact arithmetic throughout."""
    top = cx.top_dim
    # With all cells present, homology is exact up to top_dim; a truncated
    # complex is reliable only strictly below the last built dimension.
    reliable = top if not cx.truncated else top - 1
    limit = reliable if max_dim is None else min(max_dim, reliable)
    if limit < 0:
        raise ValueError("complex too truncated to report any homology")

    ranks = [0] * (top + 2)
    snfs = {}
    for k in range(1, min(limit + 1, top) + 1):
        snfs[k] = smith_normal_form(cx.boundary[k])
        ranks[k] = len(snfs[k])
    betti, torsion = [], []
    for k in range(limit + 1):
        cycles = len(cx.cells[k]) - ranks[k]
        betti.append(cycles - ranks[k + 1])
        torsion.append([d for d in snfs.get(k + 1, []) if d > 1])
    # Above the top cell dimension of a complete complex, homology vanishes.
    if max_dim is not None and not cx.truncated:
        while len(betti) <= max_dim:
            betti.append(0)
            torsion.append([])
        limit = max_dim
    return HomologySummary(betti, torsion, limit, cx.truncated)


def betti_numbers_fast(cx, max_dim=None):
    """Betti numbers only, via ranks over Q (no torsion)."""
    top = cx.top_dim
    reliable = top if not cx.truncated else top - 1
    limit = reliable if max_dim is None else min(max_dim, reliable)
    ranks = [0] * (top + 2)
    for k in range(1, min(limit + 1, top) + 1):
        ranks[k] = rank_exact(cx.boundary[k])
    betti = [len(cx.cells[k]) - ranks[k] - ranks[k + 1] for k in range(limit + 1)]
    if max_dim is not None and not cx.truncated:
        betti.extend([0] * (max_dim - limit))
    return betti


def homology_fast(cx, max_dim=None):
    """A HomologySummary from rational ranks; torsion layers are None."""
    betti = betti_numbers_fast(cx, max_dim)
    # H_0 of any complex is free, so its (empty) torsion is known exactly
    torsion = [[]] + [None] * (len(betti) - 1)
    return HomologySummary(betti, torsion, len(betti) - 1, cx.truncated)


def homological_connectivity(summary):
    """Largest k with vanishing reduced homology through dimension k.

    Returns (value, caveat): -1 when the complex is disconnected; math.inf
    when everything computed vanishes and the complex was not truncated.  The
    caveat flag is set when H_1 = 0, since the fundamental group is not
    computed and the homological value can then overestimate topological
    connectivity.
    """
    if summary.betti[0] > 1:
        return -1, False
    k = 0
    while k <= summary.computed_dim and summary.reduced_is_zero(k):
        k += 1
    h1_trivial = summary.computed_dim >= 1 and summary.reduced_is_zero(1)
    caveat = h1_trivial or summary.computed_dim < 1
    # vanishing claims below k that rest on uncomputed torsion are unsafe
    caveat = caveat or any(not summary.torsion_known(i) for i in range(min(k, summary.computed_dim + 1)))
    if k > summary.computed_dim:
        value = math.inf if not summary.truncated else summary.computed_dim
    else:
        value = k - 1
    return value, caveat


def h1_free_rank(summary):
    """Rank of the free part of H_1; positive iff H_1 has an infinite cyclic subgroup."""
    if summary.computed_dim < 1:
        raise ValueError("H_1 was not computed")
    return summary.betti[1]


# -- chains from even closed walks ----------------------------------------

class EvenClosedWalk:
    """A closed walk a_0, b_1, a_1, b_2, ..., b_0 of even length in a graph.

    vertices[2i] plays the role of a_i and vertices[2i-1] of b_i.
    """

    def __init__(self, g, vertices):
        vertices = list(vertices)
        if len(vertices) < 2 or len(vertices) % 2:
            raise ValueError("walk must have positive even length")
        for i, v in enumerate(vertices):
            u = vertices[(i + 1) % len(vertices)]
            if not g.has_edge(v, u):
                raise ValueError("consecutive pair (%d, %d) is not an edge" % (v, u))
        self.graph = g
        self.vertices = tuple(vertices)

    def __len__(self):
        return len(self.vertices)

    def half_length(self):
        return len(self.vertices) // 2

    def a(self, i):
        return self.vertices[(2 * i) % len(self.vertices)]

    def b(self, i):
        return self.vertices[(2 * i - 1) % len(self.vertices)]


def cycle_chain(cx, walk):
    """The 1-chain of an even closed walk; always a cycle (asserted).

    Terms ({a_i} x {b_i, b_{i+1}}) and ({a_{i-1}, a_i} x {b_i}), with sign
    matching the walk direction against the ascending-order orientation of
    each cell; backtracking (degenerate) terms contribute nothing.
    """
    if walk.graph != cx.graph:
        raise ValueError("walk and complex belong to different graphs")
    n = walk.half_length()
    coeffs = np.zeros(len(cx.cells[1]), dtype=np.int64) if cx.top_dim >= 1 else np.zeros(0, dtype=np.int64)

    def add(smask, tmask, lo, hi):
        if lo == hi:
            return
        cell = (smask, tmask)
        sign = 1 if lo < hi else -1
        coeffs[cx.index[1][cell]] += sign

    for i in range(n):
        ai, bi, bi1 = walk.a(i), walk.b(i), walk.b(i + 1)
        add(1 << ai, (1 << bi) | (1 << bi1), bi, bi1)
        aim1 = walk.a(i - 1)
        add((1 << aim1) | (1 << ai), 1 << bi, aim1, ai)

    if cx.top_dim >= 1 and coeffs.any():
        db = cx.boundary[1] @ coeffs
        assert not np.any(db), "chain of a closed walk must be a cycle"
    return coeffs


def enumerate_even_closed_walks(g, max_length, start_vertices=None):
    """Yield even closed walks of length 2..max_length as vertex tuples.

    Each walk is produced from its minimum vertex (other rotations are not
    repeated); exponential in max_length, intended for small graphs.
    """
    dist = _all_pairs_distance(g)
    starts = range(g.n) if start_vertices is None else start_vertices
    for length in range(2, max_length + 1, 2):
        for s in starts:
            stack = [(s, [s])]
            while stack:
                v, seq = stack.pop()
                steps_left = length - len(seq)
                if steps_left == 0:
                    if g.has_edge(v, s):
                        yield tuple(seq)
                    continue
                for u in bits(g.adj[v]):
                    if u < s:
                        continue  # min-vertex canonical start
                    # from u: steps_left - 1 more vertices, then the closing
                    # edge back to s, so steps_left edges remain in total
                    if dist[u][s] <= steps_left:
                        stack.append((u, seq + [u]))


def _all_pairs_distance(g):
    dist = []
    for s in range(g.n):
        d = [math.inf] * g.n
        d[s] = 0
        queue = [s]
        while queue:
            nxt = []
            for v in queue:
                for u in bits(g.adj[v]):
                    if d[u] == math.inf:
                        d[u] = d[v] + 1
                        nxt.append(u)
            queue = nxt
        dist.append(d)
    return dist


@dataclass
class SpanReport:
    free_rank: int
    spanned_rank: int
    walks_tried: int
    walk_length_cap: int

    @property
    def attained(self):
        return self.spanned_rank == self.free_rank


def h1_span_check(cx, walk_length_cap):
    """Do chains of even closed walks span the free part of H_1?

    Enumerates walks up to the cap, accumulating the rank of their classes in
    H_1 tensor Q; stops early once the free rank is attained.
    """
    summary = homology(cx, max_dim=1)
    b1 = summary.betti[1] if summary.computed_dim >= 1 else 0
    if b1 == 0:
        return SpanReport(0, 0, 0, walk_length_cap)

    d2 = cx.boundary[2] if cx.top_dim >= 2 else np.zeros((len(cx.cells[1]), 0), dtype=np.int64)
    base_rank = rank_exact(d2)
    columns = [d2[:, j] for j in range(d2.shape[1])]
    current = base_rank
    tried = 0
    seen = set()
    g = cx.graph
    for seq in enumerate_even_closed_walks(g, walk_length_cap):
        chain = cycle_chain(cx, EvenClosedWalk(g, seq))
        tried += 1
        key = chain.tobytes()
        if key in seen or not chain.any():
            continue
        seen.add(key)
        candidate = np.column_stack(columns + [chain]) if columns else chain[:, None]
        r = rank_exact(candidate)
        if r > current:
            columns.append(chain)
            current = r
            if current - base_rank == b1:
                break
    return SpanReport(b1, current - base_rank, tried, walk_length_cap)
