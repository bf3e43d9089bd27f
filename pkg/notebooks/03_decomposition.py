"""
Cut vertices and path joins
===========================

ddp of a separable graph from the two sides of a cut vertex.
"""

from distpres import dp_profile
from distpres.decomposition import (
    PathJoinSpec,
    anchored_ddp,
    build_path_join,
    compose_ddp,
    ddp_via_decomposition,
    path_join_ddp,
    path_join_ddp_closed_form,
    split_at_cut_vertex,
)
from distpres.families import complete, cycle
from distpres.graph import build_graph, members

bowtie = build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
s = split_at_cut_vertex(bowtie, 2)
print(members(s.left), members(s.right))

# sizes through the shared vertex add up minus one; sets avoiding it stay on one side
need, avoid = anchored_ddp(complete(3), 0)
print(need, avoid, compose_ddp(need, need, avoid, avoid))

# nested cut vertices
chain = build_graph(8, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 3)])
print(sorted(ddp_via_decomposition(chain)), sorted(dp_profile(chain).ddp))

# two C5s joined by one edge: the one-line sumset claims 9, brute force disagrees
spec = PathJoinSpec(cycle(5), 0, cycle(5), 0, 1)
joined = build_path_join(spec)
print(sorted(dp_profile(joined).ddp))
print(sorted(path_join_ddp(spec)))
print(sorted(path_join_ddp_closed_form(spec)))

probe = PathJoinSpec(complete(3), 0, complete(3), 0, 2)
print(build_path_join(probe).n, sorted(path_join_ddp(probe)))
