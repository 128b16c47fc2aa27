"""Folding: reduce a graph before computing anything expensive.

A fold removes a vertex whose neighborhood is contained in another vertex's
neighborhood.  Warmth and the homology of the edge-homomorphism complex are
both fold-invariant, so computing on the stiff residue is always safe and
often much cheaper.
"""

from graphwarmth import (
    build_hom_k2,
    complete,
    cycle,
    homology,
    is_dismantlable,
    looped_cycle,
    path,
    stiff_reduction,
    warmth,
)
from graphwarmth.generators import erdos_renyi

print("Trees fold down to a single edge:")
residue, seq = stiff_reduction(path(8))
print("  P8 -> %d vertices after %d folds: %s" % (residue.n, len(seq), seq.steps))

print()
print("A looped path folds all the way down to one looped vertex, which makes")
print("it dismantlable and gives it infinite warmth.  A looped cycle of length")
print(">= 4 is already stiff:")
from graphwarmth.graphs import Graph
lp = Graph(4, [(0, 1), (1, 2), (2, 3)] + [(v, v) for v in range(4)])
print("  dismantlable(looped P4) =", is_dismantlable(lp))
print("  zeta(looped P4) =", warmth(lp).value)
print("  dismantlable(looped C6) =", is_dismantlable(looped_cycle(6)))
print("  zeta(looped C6) =", warmth(looped_cycle(6)).value)

print()
print("Folding preserves warmth and homology.  Take K4 with a pendant path:")
g = complete(4)
edges = list(g.edges()) + [(3, 4), (4, 5)]
g = Graph(6, edges)
residue, seq = stiff_reduction(g)
print("  %d vertices -> %d after folding" % (6, residue.n))
for name, h in [("original", g), ("residue", residue)]:
    s = homology(build_hom_k2(h))
    print("  %-9s zeta = %s, betti = %s" % (name, warmth(h).value, s.betti))

print()
print("Random graphs usually have a few folds at low density:")
for i in range(3):
    g = erdos_renyi(10, 0.25, "demo:%d" % i)
    residue, seq = stiff_reduction(g)
    print("  G(10, 0.25) trial %d: %d -> %d vertices (%d folds)"
          % (i, g.n, residue.n, len(seq)))
