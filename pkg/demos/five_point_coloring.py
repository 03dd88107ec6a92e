# Walk through the level coloring on five points.
#
# Run:  python3 demos/five_point_coloring.py  [out.dot]

import sys
from collections import Counter

import numpy as np

from cpgraph import build_reduced, level_color, verify_coloring
from cpgraph.export import NAMED_FILLS, to_dot
from cpgraph.model import PointSet

n = 5
G = build_reduced(n, "ag")
print(f"{G.n_vertices} vertices, {G.edge_count()} edges")

# %% degrees by level: every set of size k has the same degree
deg = np.array([G.degree(A) for A in G.labels])
size = np.array([A.size for A in G.labels])
for k in range(1, n):
    print(f"  |A|={k}: degree {np.unique(deg[size == k])}")

# %% the coloring, level by level, with the source each color came from
c = level_color(n)
for k in range(1, n):
    row = []
    for bits, col in c.assignment.items():
        if bits.bit_count() == k:
            A = PointSet(bits, n)
            src = c.source.get(bits)
            arrow = f" <- {PointSet(src, n)}" if src else ""
            row.append(f"{A}:{NAMED_FILLS[col]}{arrow}")
    print(f"level {k}:")
    for item in row:
        print("   ", item)

# %% palette size and class sizes
print("palette:", c.palette)
print("class sizes:", sorted(Counter(c.assignment.values()).values(), reverse=True))
print("proper:", verify_coloring(G, c).proper)

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(to_dot(G, c, name="five_points"))
    print("wrote", sys.argv[1])
