"""Warmth of a graph, decided through d-stable families.

A family of nonempty proper vertex subsets is d-stable when every member A is
exactly the intersection of the neighborhoods of d members (repetition
allowed).  The warmth is 1 + the least d admitting such a family, and is
infinite exactly for dismantlable graphs.

Existence of a d-stable family is decided as the greatest fixed point of a
pruning operator: start from a candidate universe and repeatedly delete any
set that cannot be written as an intersection of d member neighborhoods.  The
fixed point is the union of all d-stable families inside the universe, so it
is nonempty iff one exists.  Exact mode uses the full powerset as universe;
heuristic mode uses the intersection-closure of the vertex neighborhoods,
which can only miss families (sound for existence, inconclusive for
non-existence).
"""

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .folding import stiff_reduction
from .graphs import bits, mask_of

DEFAULT_EXACT_CAP = 20
AUTO_EXACT_THRESHOLD = 13
HEURISTIC_UNIVERSE_CAP = 20000
INFINITE = math.inf


class CapacityError(ValueError):
    """Exact search refused; use heuristic mode for graphs this large."""


@dataclass
class StableFamily:
    """A verified d-stable family with a witness multiset per member.

    Members and witnesses are vertex masks; witnesses[A] is a tuple of d
    member masks whose neighborhoods intersect to exactly A.
    """

    d: int
    n: int
    members: frozenset
    witnesses: dict


def verify_stable_family(g, fam):
    """Check every invariant of a stable family; raises ValueError on failure."""
    full = g.vertex_mask
    if not fam.members:
        raise ValueError("family is empty")
    for a in fam.members:
        if a == 0 or a & ~full or a == full:
            raise ValueError("member %x is not a nonempty proper subset" % a)
        wit = fam.witnesses.get(a)
        if wit is None or len(wit) != fam.d:
            raise ValueError("member %x lacks a witness multiset of size %d" % (a, fam.d))
        inter = full
        for b in wit:
            if b not in fam.members:
                raise ValueError("witness of %x uses a non-member" % a)
            inter &= g.set_neighborhood(b)
        if inter != a:
            raise ValueError("witness neighborhoods of %x intersect to %x" % (a, inter))
    return True


@dataclass
class WarmthResult:
    """Warmth value or bracket, with its certificate.

    lo == hi means the value is exact (mode "exact"); otherwise mode is
    "heuristic" and the true warmth lies in [lo, hi].  The certificate is a
    StableFamily for finite upper bounds, or the fold sequence for infinite
    warmth.  certificate_graph is the (possibly fold-reduced) graph the
    certificate lives on.
    """

    lo: float
    hi: float
    certificate: object
    certificate_graph: object
    shortcut: str = ""

    @property
    def mode(self):
        return "exact" if self.lo == self.hi else "heuristic"

    @property
    def value(self):
        return self.lo if self.lo == self.hi else None

    def __repr__(self):
        if self.lo == self.hi:
            return "WarmthResult(%s)" % self.lo
        return "WarmthResult([%s, %s])" % (self.lo, self.hi)


# -- cover search ---------------------------------------------------------

def _cover_at_most(a, candidates, limit, full):
    """<= limit masks from candidates (each a superset of a) intersecting to a.

    candidates must jointly intersect to a.  Greedy first; exact
    branch-and-bound when greedy exceeds the limit.  Returns a list of masks
    or None.
    """
    rem = full & ~a
    if rem == 0:
        return [candidates[0]] if candidates else None
    chosen = []
    pool = list(candidates)
    while rem and len(chosen) < limit:
        best, best_gain = None, 0
        for m in pool:
            gain = (rem & ~m).bit_count()
            if gain > best_gain:
                best, best_gain = m, gain
        if best is None:
            return None
        chosen.append(best)
        rem &= best
    if rem == 0:
        return chosen
    return _cover_exact(a, candidates, limit, full)


def _cover_exact(a, candidates, limit, full):
    rem0 = full & ~a
    # Deduplicate by cleared-bit pattern and drop dominated candidates.
    by_clear = {}
    for m in candidates:
        clear = rem0 & ~m
        if clear:
            prev = by_clear.get(clear)
            if prev is None:
                by_clear[clear] = m
    items = sorted(by_clear.items(), key=lambda kv: -kv[0].bit_count())
    kept = []
    for clear, m in items:
        if not any(clear & ~kc == 0 for kc, _ in kept):
            kept.append((clear, m))
    if not kept:
        return None
    max_gain = kept[0][0].bit_count()

    best = [None]

    def rec(rem, chosen, start):
        if rem == 0:
            best[0] = list(chosen)
            return True
        if len(chosen) >= limit:
            return False
        need = -(-rem.bit_count() // max_gain)
        if len(chosen) + need > limit:
            return False
        for i in range(start, len(kept)):
            clear, m = kept[i]
            if rem & clear:
                chosen.append(m)
                if rec(rem & ~clear, chosen, i + 1):
                    return True
                chosen.pop()
        return False

    rec(rem0, [], 0)
    return best[0]


def _minimum_cover_size(a, candidates, full):
    """Smallest number of candidate masks intersecting to exactly a, or None."""
    for limit in range(1, len(candidates) + 1):
        got = _cover_at_most(a, candidates, limit, full)
        if got is not None:
            return len(got)
    return None


# -- the pruning engine ---------------------------------------------------

class _StableSearch:
    """Greatest-fixed-point computation over a fixed candidate universe."""

    def __init__(self, g, universe, neighborhoods):
        self.g = g
        self.full = g.vertex_mask
        self.universe = universe          # list of member masks
        self.nb_of = neighborhoods        # dict member mask -> N(member)

    def run(self, d):
        """Return a StableFamily (the greatest d-stable family in the
        universe) or None if the fixed point is empty."""
        full = self.full
        alive = set(self.universe)
        nb_of = self.nb_of
        nbcount = Counter(nb_of[a] for a in alive)
        holders = {}
        for a in alive:
            holders.setdefault(nb_of[a], set()).add(a)
        distinct = set(nbcount)
        use_np = self.g.n <= 62
        witness = {}
        users = {}

        def distinct_array():
            return np.fromiter(distinct, dtype=np.int64, count=len(distinct))

        def candidates_for(a, arr):
            if use_np:
                sel = arr[(arr & a) == a]
                if sel.size == 0:
                    return None
                inter = np.bitwise_and.reduce(sel)
                if int(inter) != a:
                    return None
                return [int(x) for x in sel]
            sel = [m for m in distinct if m & a == a]
            if not sel:
                return None
            inter = full
            for m in sel:
                inter &= m
            if inter != a:
                return None
            return sel

        def register(a, masks):
            witness[a] = tuple(masks)
            for m in masks:
                users.setdefault(m, set()).add(a)

        def kill(a, removed_masks):
            alive.discard(a)
            nb = nb_of[a]
            nbcount[nb] -= 1
            holders[nb].discard(a)
            if nbcount[nb] == 0:
                distinct.discard(nb)
                removed_masks.append(nb)

        arr = distinct_array() if use_np else None
        removed = []
        for a in list(alive):
            cand = candidates_for(a, arr)
            cover = None if cand is None else _cover_at_most(a, cand, d, full)
            if cover is None:
                kill(a, removed)
            else:
                register(a, cover)

        # Bulk-synchronous worklist: members whose witness lost a mask are
        # rechecked against the shrunken universe of neighborhoods.
        while removed:
            affected = set()
            for m in removed:
                affected |= users.pop(m, set())
            removed = []
            affected = {a for a in affected if a in alive}
            if not affected:
                continue
            arr = distinct_array() if use_np else None
            for a in affected:
                if any(nbcount.get(m, 0) == 0 for m in witness[a]):
                    cand = candidates_for(a, arr)
                    cover = None if cand is None else _cover_at_most(a, cand, d, full)
                    if cover is None:
                        kill(a, removed)
                    else:
                        register(a, cover)

        if not alive:
            return None
        witnesses = {}
        for a in alive:
            members = []
            for m in witness[a]:
                members.append(min(holders[m]))
            while len(members) < d:
                members.append(members[0])
            witnesses[a] = tuple(members)
        return StableFamily(d, self.g.n, frozenset(alive), witnesses)


def _subset_neighborhoods(g):
    """N(A) for every subset mask, by dynamic programming over bit levels."""
    size = 1 << g.n
    nb = np.zeros(size, dtype=np.int64)
    for v in range(g.n):
        nb[1 << v] = g.adj[v]
    masks = np.arange(size, dtype=np.int64)
    counts = np.bitwise_count(masks)
    for k in range(2, g.n + 1):
        sel = masks[counts == k]
        nb[sel] = nb[sel & (sel - 1)] | nb[sel & -sel]
    return nb


def _exact_search(g, exact_cap):
    if g.n > exact_cap:
        raise CapacityError(
            "exact search is capped at %d vertices (got %d); use heuristic mode"
            % (exact_cap, g.n)
        )
    nb = _subset_neighborhoods(g)
    full = g.vertex_mask
    universe = [a for a in range(1, full)]
    return _StableSearch(g, universe, {a: int(nb[a]) for a in universe})


def _heuristic_universe(g, cap=HEURISTIC_UNIVERSE_CAP):
    """Closure of the vertex neighborhoods under pairwise intersection."""
    full = g.vertex_mask
    base = {g.adj[v] for v in range(g.n)} - {0, full}
    closure = set(base)
    frontier = list(base)
    while frontier and len(closure) < cap:
        nxt = []
        for a in frontier:
            for b in list(closure):
                c = a & b
                if c and c != full and c not in closure:
                    closure.add(c)
                    nxt.append(c)
                    if len(closure) >= cap:
                        break
            if len(closure) >= cap:
                break
        frontier = nxt
    return sorted(closure)


def _heuristic_search(g):
    universe = _heuristic_universe(g)
    return _StableSearch(g, universe, {a: g.set_neighborhood(a) for a in universe})


def d_stable_family_exists(g, d, mode="exact", exact_cap=DEFAULT_EXACT_CAP):
    """The greatest d-stable family within the mode's universe, or None.

    Exact mode searches the full powerset (None is a proof of non-existence);
    heuristic mode searches the intersection-closure of vertex neighborhoods
    (None is inconclusive).
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if mode == "exact":
        search = _exact_search(g, exact_cap)
    elif mode == "heuristic":
        search = _heuristic_search(g)
    else:
        raise ValueError("mode must be 'exact' or 'heuristic'")
    fam = search.run(d)
    if fam is not None:
        verify_stable_family(g, fam)
    return fam


def minimal_witness_size(g, family, a):
    """Min k such that k family members' neighborhoods intersect to exactly a."""
    full = g.vertex_mask
    if a == 0 or a == full:
        raise ValueError("a must be a nonempty proper subset")
    nbs = sorted({g.set_neighborhood(b) for b in family if g.set_neighborhood(b) & a == a})
    if not nbs:
        return None
    inter = full
    for m in nbs:
        inter &= m
    if inter != a:
        return None
    return _minimum_cover_size(a, nbs, full)


def generated_by_at_most(g, v, k):
    """A set U of at most k vertices with the intersection of their
    neighborhoods equal to {v}, or None."""
    if not 0 <= v < g.n:
        raise ValueError("vertex out of range")
    if k < 1:
        raise ValueError("k must be >= 1")
    target = 1 << v
    full = g.vertex_mask
    by_nb = {}
    for u in bits(g.adj[v]):  # only neighbors of v have v in their neighborhood
        by_nb.setdefault(g.adj[u], u)
    nbs = sorted(by_nb)
    if not nbs:
        return None
    inter = full
    for m in nbs:
        inter &= m
    if inter != target:
        return None
    cover = _cover_at_most(target, nbs, k, full)
    if cover is None:
        return None
    return mask_of(by_nb[m] for m in cover)


def find_complete_bipartite(g, a, b):
    """Disjoint vertex sets (A, B), |A|=a, |B|=b, with all cross pairs edges.

    Subgraph containment (not induced).  Returns masks or None.
    """
    if a < 1 or b < 1:
        raise ValueError("side sizes must be >= 1")

    def rec(chosen, common, start):
        if len(chosen) == a:
            avail = common & ~mask_of(chosen)
            if avail.bit_count() >= b:
                picked = 0
                for w in bits(avail):
                    picked |= 1 << w
                    if picked.bit_count() == b:
                        break
                return mask_of(chosen), picked
            return None
        for v in range(start, g.n):
            common2 = common & g.adj[v]
            # B needs b vertices outside A, so at least b plus the already
            # chosen A-vertices that happen to sit inside common2.
            if common2.bit_count() < b:
                continue
            if g.n - v - 1 < a - len(chosen) - 1:
                break
            chosen.append(v)
            got = rec(chosen, common2, v + 1)
            if got:
                return got
            chosen.pop()
        return None

    return rec([], g.vertex_mask, 0)


# -- shortcut certificates ------------------------------------------------

def _path_to_root(parent, x):
    out = []
    while x is not None:
        out.append(x)
        x = parent[x]
    return out


def _shortest_cycle(g):
    """Vertex list of a shortest cycle (loop-free graphs), or None for forests."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: None}
        queue = [root]
        while queue:
            nxt = []
            for v in queue:
                if best is not None and 2 * dist[v] >= len(best):
                    continue
                for u in bits(g.adj[v]):
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        parent[u] = v
                        nxt.append(u)
                    elif u != parent[v]:
                        pv = _path_to_root(parent, v)
                        pu = _path_to_root(parent, u)
                        su = set(pu)
                        lca = next(w for w in pv if w in su)
                        # BFS-tree paths are disjoint below the meeting
                        # point, so this is a simple cycle closed by edge uv.
                        cyc = pv[: pv.index(lca) + 1] + pu[: pu.index(lca)][::-1]
                        if len(cyc) >= 3 and (best is None or len(cyc) < len(best)):
                            best = cyc
            queue = nxt
    return best


def _cycle_singleton_family(g, cyc):
    n = len(cyc)
    members = frozenset(1 << v for v in cyc)
    witnesses = {}
    for i, v in enumerate(cyc):
        witnesses[1 << v] = (1 << cyc[(i - 1) % n], 1 << cyc[(i + 1) % n])
    fam = StableFamily(2, g.n, members, witnesses)
    verify_stable_family(g, fam)
    return fam


# -- the main entry point -------------------------------------------------

def warmth(
    g,
    mode="auto",
    d_cap=None,
    exact_cap=DEFAULT_EXACT_CAP,
    pre_fold=True,
    chromatic_budget_ms=2000,
):
    """Warmth of g, exactly when feasible, else a bracket with certificates.

    mode: "exact" (full powerset universe, capped at exact_cap vertices),
    "heuristic" (sound upper bounds only), or "auto" (exact when the working
    graph is small enough).  pre_fold reduces to the stiff residue first;
    warmth is fold-invariant.
    """
    if g.edge_count == 0:
        raise ValueError("warmth is defined for graphs with at least one edge")

    if pre_fold:
        work, folds = stiff_reduction(g)
    else:
        work, folds = g, None

    if work.n == 1 and work.has_loop(0):
        return WarmthResult(INFINITE, INFINITE, folds, work, shortcut="dismantlable")

    comps = work.components()
    if len(comps) > 1:
        comp = next(c for c in comps if c.bit_count() >= 2 or work.has_loop(next(bits(c))))
        fam = StableFamily(1, work.n, frozenset([comp]), {comp: (comp,)})
        verify_stable_family(work, fam)
        return WarmthResult(2, 2, fam, work, shortcut="disconnected")

    bip, parts = work.is_bipartite()
    if bip:
        fam = StableFamily(
            1, work.n, frozenset(parts), {parts[0]: (parts[1],), parts[1]: (parts[0],)}
        )
        verify_stable_family(work, fam)
        return WarmthResult(2, 2, fam, work, shortcut="bipartite")

    # Connected and not bipartite: the neighborhood operator is primitive, so
    # no 1-stable family of proper subsets can exist and warmth is >= 3.
    lo = 3

    if work.girth() >= 5:
        fam = _cycle_singleton_family(work, _shortest_cycle(work))
        return WarmthResult(3, 3, fam, work, shortcut="girth>=5")

    cap = _resolve_d_cap(work, d_cap, chromatic_budget_ms)

    if mode == "auto":
        mode = "exact" if work.n <= AUTO_EXACT_THRESHOLD else "heuristic"

    if mode == "exact":
        search = _exact_search(work, exact_cap)
        for d in range(2, cap + 1):
            fam = search.run(d)
            if fam is not None:
                verify_stable_family(work, fam)
                return WarmthResult(d + 1, d + 1, fam, work)
        # No family up to the cap: warmth exceeds cap + 1.
        return WarmthResult(cap + 2, INFINITE, None, work, shortcut="cap-exhausted")

    search = _heuristic_search(work)
    for d in range(2, cap + 1):
        fam = search.run(d)
        if fam is not None:
            verify_stable_family(work, fam)
            return WarmthResult(lo, d + 1, fam, work)
    return WarmthResult(lo, INFINITE, None, work, shortcut="heuristic-exhausted")


# -- 2-stable families forced by an even closed walk ----------------------

def two_stable_witness_search(g, walk, walk_cap=None, max_walks=200000):
    """Try to grow a 2-stable family around an even closed walk.

    The walk's cycle chain must have infinite order in the first homology of
    the edge-homomorphism complex (rejected with ValueError otherwise).  Seeds
    A_i = {a_i}, B_i = {b_i} are closed under forcing: every even closed walk
    of length 2rn whose chain is homologous to r times the seed chain and
    which meets the current sets in phase contributes its vertices.  After
    each pass the stability equations N(A_i) cap N(A_{i+1}) = B_{i+1} and
    N(B_i) cap N(B_{i+1}) = A_i are tested; on success the verified family is
    returned, otherwise None (inconclusive).
    """
    from . import homcomplex
    from .intlinalg import in_integer_image, rank_exact

    cx = homcomplex.build_hom_k2(g, max_dim=2)
    cvec = np.asarray(homcomplex.cycle_chain(cx, walk), dtype=np.int64)
    if cx.top_dim >= 2:
        d2 = cx.boundary[2]
    else:
        d2 = np.zeros((len(cvec), 0), dtype=np.int64)
    if d2.shape[1] == 0:
        stacked_rank = 1 if cvec.any() else 0
    else:
        stacked_rank = rank_exact(np.column_stack([d2, cvec]))
    if stacked_rank == rank_exact(d2):
        raise ValueError("the walk's cycle chain has finite order in homology")

    half = walk.half_length()
    length = 2 * half
    if walk_cap is None:
        walk_cap = 6 * length
    verts = walk.vertices
    a_sets = [{verts[2 * i]} for i in range(half)]
    b_sets = [{verts[(2 * i - 1) % length]} for i in range(half)]

    def masks():
        return [mask_of(s) for s in a_sets], [mask_of(s) for s in b_sets]

    def verified():
        am, bm = masks()
        full = g.vertex_mask
        for i in range(half):
            if g.set_neighborhood(am[i]) & g.set_neighborhood(am[(i + 1) % half]) != bm[(i + 1) % half]:
                return None
            if g.set_neighborhood(bm[i]) & g.set_neighborhood(bm[(i + 1) % half]) != am[i]:
                return None
        members = set(am) | set(bm)
        if any(m == 0 or m == full for m in members):
            return None
        witnesses = {}
        for i in range(half):
            witnesses[bm[(i + 1) % half]] = (am[i], am[(i + 1) % half])
            witnesses[am[i]] = (bm[i], bm[(i + 1) % half])
        fam = StableFamily(2, g.n, frozenset(members), witnesses)
        verify_stable_family(g, fam)
        return fam

    fam = verified()
    if fam is not None:
        return fam

    budget = [max_walks]
    changed = True
    while changed:
        changed = False
        for r in range(1, walk_cap // length + 1):
            for arr in _aligned_walks(g, a_sets, b_sets, 2 * r * half, budget):
                chain = homcomplex.cycle_chain(cx, homcomplex.EvenClosedWalk(g, arr))
                diff = np.asarray(chain, dtype=np.int64) - r * cvec
                ok = not diff.any() or (
                    d2.shape[1] > 0 and in_integer_image(d2, diff)
                )
                if not ok:
                    continue
                for q, x in enumerate(arr):
                    if q % 2 == 0:
                        tgt = a_sets[(q // 2) % half]
                    else:
                        tgt = b_sets[((q + 1) // 2) % half]
                    if x not in tgt:
                        tgt.add(x)
                        changed = True
            if budget[0] <= 0:
                changed = False
                break
        if changed:
            fam = verified()
            if fam is not None:
                return fam
    return verified()


def _aligned_walks(g, a_sets, b_sets, total, budget):
    """Closed walks of the given even length hitting an anchor set in phase.

    Yields vertex arrays indexed by global position; position q corresponds to
    phase q mod 2n (even phases are a-type).  Each walk is anchored at its
    first in-phase meeting position to limit duplication.
    """
    half = len(a_sets)
    period = 2 * half
    dist = _bfs_distances(g)

    def phase_set(q):
        q %= period
        if q % 2 == 0:
            return a_sets[(q // 2) % half]
        return b_sets[((q + 1) // 2) % half]

    for p0 in range(total):
        anchors = phase_set(p0)
        for x in sorted(anchors):
            # walks whose FIRST anchored position is (p0, x)
            arr = [None] * total
            arr[p0] = x

            def rec(t, cur):
                budget[0] -= 1
                if budget[0] <= 0:
                    return
                if t == total:
                    if g.has_edge(cur, arr[p0]):
                        yield list(arr)
                    return
                # edges still to traverse, counting the closing edge
                rem_edges = total - t + 1
                if dist[arr[p0]].get(cur, math.inf) > rem_edges:
                    return
                q_abs = (p0 + t) % total
                for nxt in bits(g.adj[cur]):
                    # skip walks that met an anchor in phase earlier
                    if q_abs < p0 and nxt in phase_set(q_abs):
                        continue
                    arr[q_abs] = nxt
                    yield from rec(t + 1, nxt)
                    arr[q_abs] = None

            yield from rec(1, x)


def _bfs_distances(g):
    out = []
    for s in range(g.n):
        d = {s: 0}
        queue = [s]
        while queue:
            nxt = []
            for v in queue:
                for u in bits(g.adj[v]):
                    if u not in d:
                        d[u] = d[v] + 1
                        nxt.append(u)
            queue = nxt
        out.append(d)
    return out


def _resolve_d_cap(g, d_cap, chromatic_budget_ms):
    if d_cap is not None:
        return d_cap
    if any(g.has_loop(v) for v in range(g.n)):
        return g.n
    from .chromatic import chromatic_number

    chi = chromatic_number(g, time_budget_ms=chromatic_budget_ms)
    hi = chi[1] if isinstance(chi, tuple) else chi
    if hi == INFINITE:
        return g.n
    return max(2, int(hi) - 1)
