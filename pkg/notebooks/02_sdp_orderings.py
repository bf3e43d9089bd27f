"""
Elimination orderings
=====================

Sequential distance preservation, weakly k-simplicial and k-simplicial
vertices, and the longest induced cycle.
"""

from distpres import find_sdp_ordering, is_dp, is_sdp
from distpres.families import cycle, figure1_graph
from distpres.graph import build_graph
from distpres.simplicial import (
    chordality,
    find_k_simplicial_ordering,
    is_k_simplicial,
    is_weakly_k_simplicial,
    verify_ordering,
)

g = figure1_graph()  # drawn labels 1..7 are indices 0..6
ordering = find_sdp_ordering(g)
print("sdp ordering:", [v + 1 for v in ordering.order], verify_ordering(g, ordering))

report = chordality(g)
print("longest induced cycle", report.longest_induced_cycle)

# vertex 1 passes the weak test at k=4 but a chordless 2-3-4-5 path closes a 5-cycle
print(is_weakly_k_simplicial(g, 0, 4), is_k_simplicial(g, 0, 4))
print(find_k_simplicial_ordering(g, 4))
print(find_k_simplicial_ordering(g, 5).order)

# a C5 with a triangle on one edge: dp, but without an sdp ordering
house = build_graph(6, [(0, 2), (0, 5), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])
print(is_dp(house), is_sdp(house))

# cycles need k at least their length
for k in (4, 5, 6):
    print(k, find_k_simplicial_ordering(cycle(6), k) is not None)
