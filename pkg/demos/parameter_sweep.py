# Predicted vs computed parameters for a range of point counts, plus the
# growth of the chromatic number against the number of vertices.
#
# Run:  python3 demos/parameter_sweep.py

import time

import numpy as np

from cpgraph import FiniteIsolated, GraphKind, compare, level_color

names = ["diameter", "radius", "girth", "dt", "dt_total", "clique", "chromatic"]

print("n  " + "  ".join(f"{k:>9}" for k in names) + "   agree")
for n in range(3, 9):
    r = compare(FiniteIsolated(n), [GraphKind.AG], m=2)
    vals = [str(r.get(k, "AG").computed) for k in names]
    print(f"{n:<2} " + "  ".join(f"{v:>9}" for v in vals) + f"   {r.all_agree}")

# %% chromatic number is the width of the middle level, so its share of the
# vertex set shrinks like 1/sqrt(n)
ns = np.arange(2, 17)
vertices = 2.0**ns - 2
chi = []
for n in ns:
    t = time.perf_counter()
    chi.append(level_color(int(n)).palette)
    if n >= 14:
        print(f"n={n}: colored {int(vertices[n - 2])} vertices in {time.perf_counter() - t:.2f}s")
chi = np.array(chi)
ratio = chi / vertices
print("chi / |V|       :", np.round(ratio, 4))
print("chi / |V| * sqrt(n):", np.round(ratio * np.sqrt(ns), 3))
