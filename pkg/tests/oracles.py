"""Reference implementations built on networkx, kept independent of distpres kernels."""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from distpres.graph import Graph, build_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_isometric(h: nx.Graph, nodes) -> bool:
    nodes = list(nodes)
    sub = h.subgraph(nodes)
    full = dict(nx.all_pairs_shortest_path_length(h))
    inner = dict(nx.all_pairs_shortest_path_length(sub))
    for u in nodes:
        for v in nodes:
            if inner[u].get(v) != full[u].get(v):
                return False
    return True


def brute_ddp(g: Graph, avoid=(), meet=()) -> set[int]:
    """Sizes of isometric vertex sets by full subset enumeration."""
    h = to_nx(g)
    avoid, meet = set(avoid), set(meet)
    out = set()
    for i in range(1, g.n + 1):
        for a in combinations(range(g.n), i):
            s = set(a)
            if s & avoid or (meet and not s & meet):
                continue
            if nx_isometric(h, a):
                out.add(i)
                break
    return out


def longest_induced_cycle(g: Graph) -> int:
    h = to_nx(g)
    best = 0
    for cyc in nx.chordless_cycles(h):
        best = max(best, len(cyc))
    return best if best >= 3 else 0


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[u], perm[v]) for u, v in edges])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])
