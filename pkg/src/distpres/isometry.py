"""Isometric subgraph tests and distance-preserving profiles.

The batch kernel decides isometry of many vertex sets at once.  A set ``A`` is
isometric exactly when every pair ``u, v`` of ``A`` at host distance ``>= 2``
has a neighbour ``w`` of ``u`` inside ``A`` with ``d(w, v) = d(u, v) - 1``;
induction on the distance then walks a host geodesic entirely inside ``A``.
Sets whose induced graph is disconnected always fail this test, so no separate
connectivity filter is needed in front of it.

:func:`is_isometric` is the plain definition (BFS inside ``G[A]``) and is kept
independent of the kernel so the two can be checked against each other.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, islice

import numpy as np

from .errors import Disconnected, EmptySet, OutOfRange, OverlappingConstraint, TooLarge
from .graph import (
    UNREACHABLE,
    Graph,
    VertexSet,
    components,
    distances_from,
    is_connected,
    iter_bits,
    mask_of,
    members,
)

log = logging.getLogger(__name__)

DP_PROFILE_MAX_N = 20
DP_PROFILE_WARN_N = 16
_CHUNK_CELLS = 1 << 22


def is_isometric(g: Graph, a: VertexSet) -> bool:
    """True when ``G[a]`` preserves every host distance between its vertices."""
    if not a:
        raise EmptySet("is_isometric needs a non-empty vertex set")
    if a & ~g.vertices:
        raise OutOfRange("vertex set contains vertices outside the graph")
    d = g.distances
    for u in iter_bits(a):
        inner = distances_from(g.adj, u, a)
        for v in iter_bits(a):
            host = int(d[u, v])
            if inner.get(v, UNREACHABLE) != host:
                return False
    return True


class IsometryKernel:
    """Vectorised isometry test for many vertex sets of one host graph."""

    def __init__(self, g: Graph):
        self.g = g
        n = g.n
        d = g.distances.astype(np.int32)
        us, vs = np.nonzero(np.triu(d >= 2))
        self.us = us
        self.vs = vs
        adj = np.zeros((n, n), dtype=bool)
        for u, v in g.edges():
            adj[u, v] = adj[v, u] = True
        # step[w, p]: w is a neighbour of us[p] one step closer to vs[p]
        closer = d[:, vs] == (d[us, vs] - 1)[None, :]
        self.step = (adj[:, us] & closer).astype(np.float32)

    def check(self, sets: np.ndarray) -> np.ndarray:
        """Boolean isometry flags for the rows of an ``m x n`` membership matrix."""
        m = sets.shape[0]
        if len(self.us) == 0 or m == 0:
            return np.ones(m, dtype=bool)
        out = np.empty(m, dtype=bool)
        rows = max(1, _CHUNK_CELLS // len(self.us))
        for lo in range(0, m, rows):
            s = sets[lo:lo + rows]
            reachable = s.astype(np.float32) @ self.step
            both = s[:, self.us] & s[:, self.vs]
            out[lo:lo + rows] = ~(both & (reachable < 0.5)).any(axis=1)
        return out


def _rows(pool: list[int], size: int, n: int, fixed: VertexSet, chunk: int):
    """Yield membership matrices for ``fixed | C`` over ``size``-subsets ``C`` of ``pool``."""
    fixed_idx = members(fixed)
    combos = combinations(pool, size)
    while True:
        block = list(islice(combos, chunk))
        if not block:
            return
        s = np.zeros((len(block), n), dtype=bool)
        if size:
            idx = np.asarray(block, dtype=np.intp)
            s[np.arange(len(block))[:, None], idx] = True
        if fixed_idx:
            s[:, fixed_idx] = True
        yield s


def _to_mask(row: np.ndarray) -> VertexSet:
    return mask_of(int(v) for v in np.flatnonzero(row))


def first_isometric(
    g: Graph,
    order: int,
    *,
    include: VertexSet = 0,
    exclude: VertexSet = 0,
    meet: VertexSet = 0,
    kernel: IsometryKernel | None = None,
) -> VertexSet | None:
    """Lexicographically first isometric set of the given order, under constraints.

    The set must contain all of ``include``, avoid ``exclude`` and, when
    ``meet`` is non-zero, contain at least one vertex of ``meet``.  Candidates
    are visited in :func:`itertools.combinations` order, so the witness is the
    smallest sorted vertex tuple.
    """
    kernel = kernel or IsometryKernel(g)
    if include & exclude:
        return None
    fixed = include.bit_count()
    if order < max(fixed, 1) or order > g.n:
        return None
    pool = members(g.vertices & ~exclude & ~include)
    need = order - fixed
    if need > len(pool):
        return None
    # merging the shared fixed vertices into each free combination keeps the
    # lexicographic order of the combinations
    chunk = max(1, _CHUNK_CELLS // max(g.n * 8, 1))
    meet_idx = members(meet) if meet else None
    for s in _rows(pool, need, g.n, include, chunk):
        ok = kernel.check(s)
        if meet_idx is not None:
            ok &= s[:, meet_idx].any(axis=1)
        hit = np.flatnonzero(ok)
        if hit.size:
            return _to_mask(s[hit[0]])
    return None


def find_isometric_of_order(g: Graph, i: int) -> VertexSet | None:
    if not 1 <= i <= g.n:
        raise OutOfRange(f"order {i} outside 1..{g.n}")
    _require_connected(g)
    return first_isometric(g, i)


@dataclass(frozen=True)
class DpProfile:
    """Witness (or ``None``) for every order ``1..n``."""

    n: int
    witnesses: dict[int, VertexSet | None] = field(repr=False)

    @property
    def ddp(self) -> frozenset[int]:
        return frozenset(i for i, w in self.witnesses.items() if w is not None)

    @property
    def missing(self) -> list[int]:
        return sorted(i for i, w in self.witnesses.items() if w is None)

    @property
    def is_dp(self) -> bool:
        return not self.missing


@dataclass(frozen=True)
class DpConstraint:
    """Sets that must be avoided (``avoid``) and met (``meet``).

    An empty ``meet`` places no intersection requirement.
    """

    avoid: VertexSet = 0
    meet: VertexSet = 0

    def __post_init__(self):
        if self.avoid & self.meet:
            raise OverlappingConstraint("avoid and meet sets overlap")


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected("graph is not connected", len(components(g)))


def _check_size(g: Graph, force: bool) -> None:
    if g.n > DP_PROFILE_MAX_N and not force:
        raise TooLarge(f"dp profile refused for n={g.n} > {DP_PROFILE_MAX_N}; pass force=True")
    if g.n > DP_PROFILE_WARN_N:
        log.warning("dp profile on n=%d enumerates up to %d subsets", g.n, 1 << g.n)


def dp_profile(g: Graph, force: bool = False) -> DpProfile:
    """Lexicographically first isometric witness for each order, top-down."""
    _require_connected(g)
    _check_size(g, force)
    kernel = IsometryKernel(g)
    witnesses = {}
    for i in range(g.n, 0, -1):
        witnesses[i] = first_isometric(g, i, kernel=kernel)
    return DpProfile(g.n, dict(sorted(witnesses.items())))


def is_dp(g: Graph, force: bool = False) -> bool:
    """Distance preserving test; stops at the first order without a witness."""
    _require_connected(g)
    _check_size(g, force)
    kernel = IsometryKernel(g)
    # orders 1, 2 and n always have witnesses in a connected graph
    for i in range(g.n - 1, 2, -1):
        if first_isometric(g, i, kernel=kernel) is None:
            return False
    return True


def ddp_constrained(g: Graph, c: DpConstraint) -> dict[int, VertexSet]:
    """Sizes of isometric sets avoiding ``c.avoid`` and meeting ``c.meet``.

    Returns ``{size: lexicographically first witness}``; ``set(result)`` is the
    constrained size set.
    """
    _require_connected(g)
    if c.avoid & ~g.vertices or c.meet & ~g.vertices:
        raise OutOfRange("constraint mentions vertices outside the graph")
    return isometric_sizes(g, exclude=c.avoid, meet=c.meet)


def isometric_sizes(
    g: Graph, *, include: VertexSet = 0, exclude: VertexSet = 0, meet: VertexSet = 0
) -> dict[int, VertexSet]:
    kernel = IsometryKernel(g)
    out = {}
    for i in range(1, g.n + 1):
        w = first_isometric(g, i, include=include, exclude=exclude, meet=meet, kernel=kernel)
        if w is not None:
            out[i] = w
    return out
