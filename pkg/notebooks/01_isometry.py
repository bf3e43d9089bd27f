"""
Isometric subgraphs and the dp profile
======================================

Which orders of isometric subgraph does a small graph have?
"""

import numpy as np

from distpres import apsp, build_graph, dp_profile, is_isometric
from distpres.families import cycle, path
from distpres.graph import mask_of, members

c5 = cycle(5)
print(apsp(c5))

# three consecutive vertices of C5 keep their distances
print(is_isometric(c5, mask_of([0, 1, 2])))
# four do not: the two ends are 2 apart in C5 but 3 apart on the path
print(is_isometric(c5, mask_of([0, 1, 2, 3])))

prof = dp_profile(c5)
print("ddp(C5) =", sorted(prof.ddp), "missing", prof.missing)

# longer cycles skip every order from floor(k/2)+2 up to k-1
for k in range(5, 11):
    print(k, sorted(dp_profile(cycle(k)).ddp))

# witnesses are the lexicographically first isometric set of each order
c6 = dp_profile(cycle(6))
for order, w in c6.witnesses.items():
    print(order, members(w) if w is not None else None)

# a tree is isometric in itself and every subtree is too
tree = build_graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
print(dp_profile(tree).is_dp)

d = apsp(path(6))
print(np.diag(d, 1), d.max())
