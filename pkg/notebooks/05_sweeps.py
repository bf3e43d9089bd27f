"""
Sweeping small graphs
=====================

Every connected graph up to 7 vertices, sorted into three cells, and the
minimum-degree conditions for dp.
"""

from collections import Counter

from distpres.families import connected_graphs
from distpres.graph import min_degree
from distpres.sweeps import classify, run_conjecture, run_theorem

cells = Counter()
for g in connected_graphs(7):
    cells[g.n, classify(g)] += 1
for n in range(1, 8):
    print(n, {c: cells[n, c] for c in ("dp_sdp", "dp_not_sdp", "not_dp")})

res = run_theorem("lemma-w4s", max_n=6)
print(res.name, res.checked, len(res.violations))

half = run_conjecture("min-degree-half", max_n=7)
print(half.checked, len(half.findings))

# the non-dp graphs on 7 vertices have low minimum degree
print(sorted(min_degree(g) for g in connected_graphs(7, min_n=7) if classify(g) == "not_dp"))

frac = run_conjecture("dp-fraction", max_n=5)
print(frac.notes["per_n"])
