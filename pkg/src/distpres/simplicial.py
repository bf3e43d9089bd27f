"""Weakly k-simplicial / k-simplicial vertices, elimination orderings, chordality.

All vertex tests take an optional ``within`` mask and then act on the induced
graph ``G[within]`` without materialising it; the ordering searches use this
to test vertices of the shrinking residual graph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, islice
from typing import Callable

import numpy as np

from .errors import Disconnected, OutOfRange
from .graph import (
    Graph,
    VertexSet,
    components,
    distances_from,
    is_connected,
    iter_bits,
    mask_of,
    members,
)
from .isometry import is_isometric


class OrderingKind(enum.Enum):
    SDP = "sdp"
    WEAKLY_K_SIMPLICIAL = "weakly-k-simplicial"
    K_SIMPLICIAL = "k-simplicial"


@dataclass(frozen=True)
class EliminationOrdering:
    order: tuple[int, ...]
    kind: OrderingKind
    k: int


@dataclass(frozen=True)
class ChordalityReport:
    longest_induced_cycle: int
    witness: VertexSet | None

    @property
    def acyclic(self) -> bool:
        return self.longest_induced_cycle == 0


def _check_vertex(g: Graph, v: int, within: VertexSet) -> None:
    if not 0 <= v < g.n or not within >> v & 1:
        raise OutOfRange(f"vertex {v} not in graph")


def _weakly(g: Graph, within: VertexSet, v: int, k: int) -> bool:
    nbrs = members(g.adj[v] & within)
    if len(nbrs) <= 1:
        return True
    rest = within & ~(1 << v)
    reach = k - 2
    for i, x in enumerate(nbrs[:-1]):
        near = distances_from(g.adj, x, rest, limit=reach)
        if any(y not in near for y in nbrs[i + 1:]):
            return False
    return True


def _has_long_chordless_path(g: Graph, within: VertexSet, v: int, x: int, y: int, min_len: int) -> bool:
    """Is there a chordless x..y path of ``>= min_len`` edges with interior outside N[v]?"""
    adj = g.adj
    interior = within & ~(adj[v] | (1 << v))
    ybit = 1 << y

    def extend(last: int, forbidden: int, length: int) -> bool:
        cand = adj[last] & within & ~forbidden
        if cand & ybit and length + 1 >= min_len:
            return True
        nxt_forbidden = forbidden | adj[last] | (1 << last)
        if nxt_forbidden & ybit:
            return False
        for w in iter_bits(cand & interior):
            if extend(w, nxt_forbidden, length + 1):
                return True
        return False

    return extend(x, 0, 0)


def _k_simplicial(g: Graph, within: VertexSet, v: int, k: int) -> bool:
    if not _weakly(g, within, v, k):
        return False
    nbrs = members(g.adj[v] & within)
    for x, y in combinations(nbrs, 2):
        if g.adj[x] >> y & 1:
            continue
        if _has_long_chordless_path(g, within, v, x, y, k - 1):
            return False
    return True


def is_weakly_k_simplicial(g: Graph, v: int, k: int, within: VertexSet | None = None) -> bool:
    """``N(v)`` is a clique in ``(G - v)^(k-2)``."""
    within = g.vertices if within is None else within
    _check_vertex(g, v, within)
    if k < 3:
        raise OutOfRange("k must be at least 3")
    return _weakly(g, within, v, k)


def is_k_simplicial(g: Graph, v: int, k: int, within: VertexSet | None = None) -> bool:
    """Weakly k-simplicial, and every chordless path between two non-adjacent
    neighbours of ``v`` routed outside ``N[v]`` has at most ``k - 2`` edges."""
    within = g.vertices if within is None else within
    _check_vertex(g, v, within)
    if k < 3:
        raise OutOfRange("k must be at least 3")
    return _k_simplicial(g, within, v, k)


def _search(g: Graph, step: Callable[[VertexSet, int], bool]) -> list[int] | None:
    """Backtracking elimination search; failed residual masks are memoised."""
    failed: set[int] = set()

    def rec(rest: int) -> list[int] | None:
        if not rest:
            return []
        if rest in failed:
            return None
        for v in iter_bits(rest):
            if step(rest, v):
                tail = rec(rest & ~(1 << v))
                if tail is not None:
                    return [v, *tail]
        failed.add(rest)
        return None

    return rec(g.vertices)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected("graph is not connected", len(components(g)))


def find_weakly_k_simplicial_ordering(g: Graph, k: int) -> EliminationOrdering | None:
    _require_connected(g)
    if k < 3:
        raise OutOfRange("k must be at least 3")
    order = _search(g, lambda rest, v: _weakly(g, rest, v, k))
    if order is None:
        return None
    return EliminationOrdering(tuple(order), OrderingKind.WEAKLY_K_SIMPLICIAL, k)


def find_k_simplicial_ordering(g: Graph, k: int) -> EliminationOrdering | None:
    _require_connected(g)
    if k < 3:
        raise OutOfRange("k must be at least 3")
    order = _search(g, lambda rest, v: _k_simplicial(g, rest, v, k))
    if order is None:
        return None
    return EliminationOrdering(tuple(order), OrderingKind.K_SIMPLICIAL, k)


def suffixes_isometric(g: Graph, order: tuple[int, ...] | list[int]) -> bool:
    """Deleting each prefix of ``order`` leaves an isometric subgraph of ``g``."""
    rest = g.vertices
    for v in order[:-1]:
        rest &= ~(1 << v)
        if not is_isometric(g, rest):
            return False
    return True


def find_sdp_ordering(g: Graph) -> EliminationOrdering | None:
    """An sdp ordering, found as a weakly 4-simplicial ordering and then
    re-checked suffix by suffix with the isometry definition."""
    found = find_weakly_k_simplicial_ordering(g, 4)
    if found is None:
        return None
    if not suffixes_isometric(g, found.order):
        raise AssertionError(f"weakly 4-simplicial ordering {found.order} failed suffix isometry")
    return EliminationOrdering(found.order, OrderingKind.SDP, 4)


def is_sdp(g: Graph) -> bool:
    return find_sdp_ordering(g) is not None


def verify_ordering(g: Graph, ordering: EliminationOrdering) -> bool:
    """Check a certificate step by step against its declared kind."""
    order = list(ordering.order)
    if sorted(order) != list(range(g.n)):
        return False
    if ordering.kind is OrderingKind.SDP:
        return suffixes_isometric(g, order)
    test = _weakly if ordering.kind is OrderingKind.WEAKLY_K_SIMPLICIAL else _k_simplicial
    rest = g.vertices
    for v in order:
        if not test(g, rest, v, ordering.k):
            return False
        rest &= ~(1 << v)
    return True


def induces_cycle(g: Graph, a: VertexSet) -> bool:
    if a.bit_count() < 3:
        return False
    if any((g.adj[v] & a).bit_count() != 2 for v in iter_bits(a)):
        return False
    return is_connected(g, a)


def chordality(g: Graph) -> ChordalityReport:
    """Longest induced cycle by exhaustive search, largest sizes first."""
    n = g.n
    adj = np.zeros((n, n), dtype=np.int16)
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = 1
    chunk = max(1, (1 << 20) // max(n, 1))
    for size in range(n, 2, -1):
        if size > g.size:
            continue
        combos = combinations(range(n), size)
        while True:
            block = list(islice(combos, chunk))
            if not block:
                break
            s = np.zeros((len(block), n), dtype=bool)
            s[np.arange(len(block))[:, None], np.asarray(block)] = True
            deg = s.astype(np.int16) @ adj
            two_regular = ((deg == 2) | ~s).all(axis=1)
            for row in np.flatnonzero(two_regular):
                a = mask_of(block[row])
                if is_connected(g, a):
                    return ChordalityReport(size, a)
    return ChordalityReport(0, None)


def is_k_chordal(g: Graph, k: int) -> bool:
    """No induced cycle longer than ``k`` (acyclic graphs qualify for every k)."""
    return chordality(g).longest_induced_cycle <= k
