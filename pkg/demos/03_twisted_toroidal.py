"""Twisted toroidal graphs: high connectivity with constant warmth.

T_{k,m} is built by repeatedly taking the Z2-twisted product with a looped
even cycle.  The family matters because its members have warmth 3 (for
m >= 5) while the homological connectivity of their hom complexes grows,
which separates warmth from the connectivity lower bound on chi.
"""

from graphwarmth import build_hom_k2, homology, twisted_toroidal, warmth
from graphwarmth.generators import twisted_toroidal_recursive

print("vertex counts 2m^k and 3^k-regularity (m >= 3):")
for k in range(4):
    for m in (3, 5, 7):
        g = twisted_toroidal(k, m)
        degs = sorted({g.degree(v) for v in range(g.n)})
        print("  T_%d,%d: %4d vertices, degrees %s" % (k, m, g.n, degs))

print()
print("the explicit and recursive constructions agree (here: vertex/edge counts):")
for k in range(3):
    a = twisted_toroidal(k, 5)
    b = twisted_toroidal_recursive(k, 5)
    print("  k=%d: %d=%d vertices, %d=%d edges"
          % (k, a.n, b.n, a.edge_count, b.edge_count))

print()
print("warmth stays at 3:")
for k in (1, 2):
    r = warmth(twisted_toroidal(k, 5))
    print("  zeta(T_%d,5) = %s  [%s mode]" % (k, r.value, r.mode))

print()
print("low-dimensional homology of hom(K2, T_1,5):")
s = homology(build_hom_k2(twisted_toroidal(1, 5), max_dim=3))
print("  betti (computed through dim %d): %s" % (s.computed_dim, s.betti[: s.computed_dim + 1]))
