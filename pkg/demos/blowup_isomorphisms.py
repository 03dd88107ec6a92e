# Isomorphisms between blow-ups respect classes; extending a reduced
# isomorphism needs equal class sizes.
#
# Run:  python3 demos/blowup_isomorphisms.py

from cpgraph import build_blowup, build_reduced, find_isomorphism
from cpgraph.build import Vertex
from cpgraph.errors import ExtensionError, ModelViolation
from cpgraph.isomorphism import (
    GraphIso,
    extend_isomorphism,
    point_permutation_iso,
    restrict_isomorphism,
)
from cpgraph.model import PointSet

n, m = 4, 3
G = build_reduced(n, "ag")
B = build_blowup(n, "ag", m)
print(f"reduced: {G.n_vertices} vertices; blow-up: {B.n_vertices} vertices")

# a search on the blow-up finds some automorphism; restricting it to classes
# always gives an automorphism of the reduced graph
psi = find_isomorphism(B, B)
phi = restrict_isomorphism(psi)
moved = sum(1 for A, img in phi.forward.items() if A != img)
print(f"found automorphism restricts to classes, moving {moved} of {G.n_vertices}")

# %% extend a point permutation, shuffling copies inside every class
perm = [1, 2, 3, 0]
phi = point_permutation_iso(G, perm)
psi = extend_isomorphism(phi, m, m, seed=7)
x1 = PointSet.of(n, 1)
print("copies of", x1, "->", [str(psi(Vertex(x1, c))) for c in range(m)])
print("roundtrip identical:", restrict_isomorphism(psi).forward == phi.forward)

# %% unequal class sizes cannot be matched
try:
    extend_isomorphism(phi, 2, 3)
except ExtensionError as exc:
    print("extension refused:", exc)

# %% a vertex map that splits one class is reported, not silently restricted
fwd = {v: v for v in B.labels}
a, b = Vertex(x1, 1), Vertex(PointSet.of(n, 2), 1)
fwd[a], fwd[b] = b, a
try:
    restrict_isomorphism(GraphIso(B, B, fwd, validate=False))
except ModelViolation as exc:
    print("restriction refused:", exc)
