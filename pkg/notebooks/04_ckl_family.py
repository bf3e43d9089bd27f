"""
Cycles with a few attached vertices
===================================

Members of C_{k,l} stay non-dp while the cycle is long compared with l.
"""

from distpres import dp_profile, find_isometric_of_order
from distpres.families import Attachment, CkLSpec, build_ckl, count_ckl, sample_ckl
from distpres.graph import members
from distpres.sweeps import converse_search

pendant = build_ckl(CkLSpec(9, (Attachment(0, (0,)),)))
print(members(pendant.added), sorted(dp_profile(pendant.graph).ddp))

# five cycle vertices plus the pendant already give an isometric set of order 6
w = find_isometric_of_order(pendant.graph, 6)
print(members(w))

print(count_ckl(11, 2))
spec = sample_ckl(11, 2, seed=3)
print(spec)
print(dp_profile(build_ckl(spec).graph).missing)

# beyond k > 2(l+2) membership no longer forces dp, but non-dp members still exist
found, missing = converse_search(10, 3)
print(found, missing)
