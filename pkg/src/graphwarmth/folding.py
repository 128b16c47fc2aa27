"""Fold detection and stiff reduction.

A fold removes a vertex v whose neighborhood is contained in the neighborhood
of another vertex w; both warmth and the homology of the edge-homomorphism
complex are invariant under folds, so reduction to the stiff residue is a safe
preprocessing step.
"""

from dataclasses import dataclass, field

from .graphs import Graph


@dataclass
class FoldSequence:
    """Ordered (removed, absorbed_into) pairs, in original vertex labels."""

    steps: list = field(default_factory=list)

    def __len__(self):
        return len(self.steps)


def find_fold(g):
    """A pair (v, w), v != w, with N(v) subseteq N(w), or None if g is stiff.

    Deterministic: lowest removable v first, then lowest absorber w.
    """
    for v in range(g.n):
        nv = g.adj[v]
        if nv == 0:
            # an isolated vertex is not foldable: absorbing it into another
            # component would change warmth (it keeps the graph disconnected)
            continue
        for w in range(g.n):
            if w == v:
                continue
            if nv & ~g.adj[w] == 0:
                return (v, w)
    return None


def _remove_vertex(g, v, names):
    keep = [u for u in range(g.n) if u != v]
    remap = {u: i for i, u in enumerate(keep)}
    edges = [
        (remap[a], remap[b]) for a, b in g.edges() if a != v and b != v
    ]
    return Graph(len(keep), edges), [names[u] for u in keep]


def stiff_reduction(g):
    """Fold repeatedly until no fold is available.

    Returns (residue, FoldSequence); the fold steps are recorded with the
    vertex labels of the input graph.
    """
    names = list(range(g.n))
    seq = FoldSequence()
    cur = g
    while cur.n > 1:
        pair = find_fold(cur)
        if pair is None:
            break
        v, w = pair
        seq.steps.append((names[v], names[w]))
        cur, names = _remove_vertex(cur, v, names)
    return cur, seq


def is_stiff(g):
    return find_fold(g) is None


def is_dismantlable(g):
    """True iff folding terminates at a single looped vertex."""
    residue, _ = stiff_reduction(g)
    return residue.n == 1 and residue.has_loop(0)
