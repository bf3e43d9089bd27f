"""Immutable bitset graphs, hop distances, induced subgraphs and cut vertices.

Vertices are the integers ``0..n-1`` and vertex sets are plain ``int``
bitmasks (bit ``v`` set means vertex ``v`` is in the set).  Every kernel in the
package works on these masks, so the helpers here are deliberately small.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import Disconnected, EmptySet, OutOfRange, SelfLoop, TooLarge

MAX_N = 64
UNREACHABLE = -1

VertexSet = int


def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour bitmask of ``v``.  Use :func:`build_graph` to
    construct one from an edge list; the constructor itself only validates.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise TooLarge(f"graph order must be in 1..{MAX_N}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise OutOfRange(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise SelfLoop(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at {u},{v}")

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @cached_property
    def distances(self) -> np.ndarray:
        return _bfs_all_pairs(self)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse silently."""
    if not 1 <= n <= MAX_N:
        raise TooLarge(f"graph order must be in 1..{MAX_N}, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _bfs_all_pairs(g: Graph) -> np.ndarray:
    n = g.n
    d = np.full((n, n), UNREACHABLE, dtype=np.int16)
    adj = g.adj
    for s in range(n):
        row = d[s]
        seen = frontier = 1 << s
        depth = 0
        while frontier:
            for v in iter_bits(frontier):
                row[v] = depth
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            depth += 1
    d.flags.writeable = False
    return d


def apsp(g: Graph) -> np.ndarray:
    """All-pairs hop distances as a read-only ``n x n`` array.

    Pairs in different components hold :data:`UNREACHABLE`.
    """
    return g.distances


def reach(adj: tuple[int, ...] | list[int], start: int, within: VertexSet) -> VertexSet:
    """Vertices of ``within`` reachable from ``start`` using only ``within``."""
    seen = frontier = (1 << start) & within
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def distances_from(adj, start: int, within: VertexSet, limit: int | None = None) -> dict[int, int]:
    """BFS layers from ``start`` inside ``within``, optionally cut off at ``limit``."""
    out = {start: 0}
    seen = frontier = 1 << start
    depth = 0
    while frontier and (limit is None or depth < limit):
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
        depth += 1
        for v in iter_bits(frontier):
            out[v] = depth
    return out


def components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    rest = g.vertices if within is None else within
    out = []
    while rest:
        comp = reach(g.adj, lowest(rest), rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph, within: VertexSet | None = None) -> bool:
    within = g.vertices if within is None else within
    if not within:
        return False
    return reach(g.adj, lowest(within), within) == within


def _check_set(g: Graph, a: VertexSet) -> None:
    if a & ~g.vertices:
        raise OutOfRange("vertex set contains vertices outside the graph")
    if not a:
        raise EmptySet("vertex set is empty")


def induced_subgraph(g: Graph, a: VertexSet) -> tuple[Graph, dict[int, int]]:
    """``G[a]`` relabelled to ``0..|a|-1``, plus the old -> new index map."""
    _check_set(g, a)
    old = members(a)
    index = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        row = 0
        for u in iter_bits(g.adj[v] & a):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(old), tuple(adj)), index


def graph_power(g: Graph, ell: int) -> Graph:
    if ell < 1:
        raise OutOfRange("power must be at least 1")
    d = g.distances
    adj = []
    for u in range(g.n):
        near = np.flatnonzero((d[u] >= 1) & (d[u] <= ell))
        adj.append(mask_of(int(v) for v in near))
    return Graph(g.n, tuple(adj))


def cut_vertices(g: Graph, within: VertexSet | None = None) -> VertexSet:
    """Cut vertices of ``G[within]`` (default: the whole graph).

    Uses the deletion definition directly: ``v`` is a cut vertex when removing
    it leaves the rest of the (connected) vertex set disconnected.
    """
    within = g.vertices if within is None else within
    if not is_connected(g, within):
        raise Disconnected("cut vertices need a connected graph", len(components(g, within)))
    out = 0
    for v in iter_bits(within):
        rest = within & ~(1 << v)
        if rest and not is_connected(g, rest):
            out |= 1 << v
    return out


def neighborhood(g: Graph, v: int, closed: bool = False) -> VertexSet:
    if not 0 <= v < g.n:
        raise OutOfRange(f"vertex {v} not in graph of order {g.n}")
    return g.adj[v] | (1 << v) if closed else g.adj[v]


def min_degree(g: Graph) -> int:
    return min(row.bit_count() for row in g.adj)


def diameter(g: Graph) -> int:
    d = g.distances
    if (d == UNREACHABLE).any():
        raise Disconnected("diameter of a disconnected graph", len(components(g)))
    return int(d.max())


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
