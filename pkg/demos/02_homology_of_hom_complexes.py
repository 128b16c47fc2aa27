"""Homology of the edge-homomorphism complex for familiar graphs.

Cells of hom(K2, G) are pairs (sigma, tau) of vertex sets with every cross
pair an edge.  For complete graphs the complex is the boundary of a polytope,
hence a sphere; for odd cycles it is a circle; for bipartite graphs it falls
apart into two pieces.
"""

from graphwarmth import (
    build_hom_k2,
    complete,
    cycle,
    homological_connectivity,
    homology,
    mycielski,
)

print("hom(K2, K_n) is a sphere S^{n-2}:")
for n in (3, 4, 5):
    cx = build_hom_k2(complete(n))
    s = homology(cx)
    print("  K%d: f-vector %-18s betti %s" % (n, cx.f_vector(), s.betti))

print()
print("Odd cycles give a single circle, even cycles two components:")
for m in (4, 5, 6, 7):
    s = homology(build_hom_k2(cycle(m)))
    print("  C%d: betti %s" % (m, s.betti))

print()
print("The Grotzsch graph (Mycielski of C5) gives S^2, so its homological")
print("connectivity is 1 and the bound hconn + 3 <= chi is tight at chi = 4:")
cx = build_hom_k2(mycielski(cycle(5)))
s = homology(cx)
hconn, caveat = homological_connectivity(s)
print("  betti %s  torsion %s" % (s.betti, s.torsion))
print("  hconn = %s (caveat: H1 = 0, so this is a homological proxy)" % hconn)

print()
print("Euler characteristics agree with the alternating Betti sums:")
for name, g in [("K5", complete(5)), ("C7", cycle(7))]:
    cx = build_hom_k2(g)
    s = homology(cx)
    alt = sum((-1) ** k * b for k, b in enumerate(s.betti))
    print("  %s: chi(complex) = %d = %d" % (name, cx.euler_characteristic(), alt))
