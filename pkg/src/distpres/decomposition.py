"""Cut-vertex splits and the ddp algebra for graphs glued at one vertex.

For ``G +_x H`` (two graphs sharing only ``x``) the isometric sets through
``x`` are exactly unions of an isometric set of each side through ``x``, and
the isometric sets avoiding ``x`` lie inside one side.  Hence

    ddp(G +_x H) = (ddp^x(G) + ddp^x(H) - 1) | ddp_x(G) | ddp_x(H)

with ``+`` the sumset.  :func:`ddp_via_decomposition` applies this recursively
along cut vertices, carrying the required/forbidden anchors each side needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import Disconnected, NotCutVertex, OutOfRange
from .graph import (
    Graph,
    VertexSet,
    build_graph,
    components,
    cut_vertices,
    induced_subgraph,
    is_connected,
    lowest,
    members,
)
from .isometry import dp_profile, isometric_sizes


@dataclass(frozen=True)
class SeparableSplit:
    x: int
    left: VertexSet
    right: VertexSet


def sumset(*sets: Iterable[int]) -> set[int]:
    out = {0}
    for s in sets:
        out = {a + b for a in out for b in s}
    return out


def _split(g: Graph, within: VertexSet, x: int) -> SeparableSplit | None:
    rest = within & ~(1 << x)
    comps = components(g, rest)
    if len(comps) < 2:
        return None
    left = comps[0] | (1 << x)
    return SeparableSplit(x, left, (rest & ~comps[0]) | (1 << x))


def split_at_cut_vertex(g: Graph, x: int) -> SeparableSplit:
    """``left`` is the component of ``G - x`` holding the lowest vertex, plus ``x``;
    ``right`` is everything else plus ``x``."""
    if not 0 <= x < g.n:
        raise OutOfRange(f"vertex {x} not in graph")
    if not is_connected(g):
        raise Disconnected("graph is not connected", len(components(g)))
    split = _split(g, g.vertices, x)
    if split is None:
        raise NotCutVertex(f"vertex {x} is not a cut vertex")
    return split


def compose_ddp(need_g: Iterable[int], need_h: Iterable[int],
                avoid_g: Iterable[int], avoid_h: Iterable[int]) -> set[int]:
    """ddp of ``G +_x H`` from ``ddp^x`` (need) and ``ddp_x`` (avoid) of each side."""
    return sumset(need_g, need_h, {-1}) | set(avoid_g) | set(avoid_h)


class _Decomposer:
    def __init__(self, g: Graph):
        self.g = g
        self.memo: dict[tuple[int, int, int], frozenset[int]] = {}

    def sizes(self, piece: VertexSet, include: VertexSet, exclude: VertexSet) -> frozenset[int]:
        """Sizes of isometric sets of ``G[piece]`` containing ``include`` and avoiding ``exclude``."""
        include &= piece
        exclude &= piece
        key = (piece, include, exclude)
        if key not in self.memo:
            self.memo[key] = frozenset(self._sizes(piece, include, exclude))
        return self.memo[key]

    def _sizes(self, piece, include, exclude):
        cuts = cut_vertices(self.g, piece) if piece.bit_count() > 2 else 0
        if not cuts:
            return self._direct(piece, include, exclude)
        split = _split(self.g, piece, lowest(cuts))
        z = split.x
        zbit = 1 << z
        out = set()
        if not exclude & zbit:
            out |= sumset(self.sizes(split.left, include | zbit, exclude),
                          self.sizes(split.right, include | zbit, exclude), {-1})
        if not include & zbit:
            # a set avoiding z sits inside one side, so it must carry all of include
            for side in (split.left, split.right):
                if include & ~side == 0:
                    out |= self.sizes(side, include, exclude | zbit)
        return out

    def _direct(self, piece, include, exclude):
        sub, index = induced_subgraph(self.g, piece)

        def remap(mask):
            return sum(1 << index[v] for v in members(mask))

        return set(isometric_sizes(sub, include=remap(include), exclude=remap(exclude)))


def ddp_via_decomposition(g: Graph) -> set[int]:
    """ddp computed by recursive cut-vertex splitting; 2-connected pieces are
    enumerated directly."""
    if not is_connected(g):
        raise Disconnected("graph is not connected", len(components(g)))
    if not cut_vertices(g):
        return set(dp_profile(g).ddp)
    return set(_Decomposer(g).sizes(g.vertices, 0, 0))


def anchored_ddp(g: Graph, x: int) -> tuple[set[int], set[int]]:
    """``(ddp^x(g), ddp_x(g))``: sizes of isometric sets through / avoiding ``x``."""
    if not 0 <= x < g.n:
        raise OutOfRange(f"vertex {x} not in graph")
    need = set(isometric_sizes(g, include=1 << x))
    avoid = set(isometric_sizes(g, exclude=1 << x))
    return need, avoid


@dataclass(frozen=True)
class PathJoinSpec:
    """Disjoint ``g`` and ``h`` joined by a path of ``r`` edges from ``x`` to ``y``."""

    g: Graph
    x: int
    h: Graph
    y: int
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise OutOfRange("path length must be at least 1")
        if not 0 <= self.x < self.g.n or not 0 <= self.y < self.h.n:
            raise OutOfRange("path endpoint outside its graph")


def build_path_join(spec: PathJoinSpec) -> Graph:
    """Vertices of ``g``, then ``h`` shifted by ``|g|``, then the ``r - 1`` path interior."""
    ng, nh = spec.g.n, spec.h.n
    edges = list(spec.g.edges()) + [(u + ng, v + ng) for u, v in spec.h.edges()]
    chain = [spec.x] + [ng + nh + i for i in range(spec.r - 1)] + [ng + spec.y]
    edges += list(zip(chain, chain[1:]))
    return build_graph(ng + nh + spec.r - 1, edges)


def _sides(spec: PathJoinSpec, sides):
    if sides is None:
        need_g, avoid_g = anchored_ddp(spec.g, spec.x)
        need_h, avoid_h = anchored_ddp(spec.h, spec.y)
        return need_g, avoid_g, need_h, avoid_h
    return tuple(set(s) for s in sides)


def path_join_ddp(spec: PathJoinSpec,
                  sides: tuple[Iterable[int], Iterable[int], Iterable[int], Iterable[int]] | None = None
                  ) -> set[int]:
    """ddp of the path join by gluing ``g``, the path and ``h`` one cut vertex at a time.

    ``sides`` is ``(ddp^x(g), ddp_x(g), ddp^y(h), ddp_y(h))``; computed when omitted.
    """
    need_g, avoid_g, need_h, avoid_h = _sides(spec, sides)
    r = spec.r
    # g +_x path, anchored at the far end y of the path (r + 1 path vertices)
    need_gp = sumset(need_g, {r + 1}, {-1}) | set(range(1, r + 1))
    avoid_gp = sumset(need_g, range(1, r + 1), {-1}) | avoid_g | set(range(1, r))
    return compose_ddp(need_gp, need_h, avoid_gp, avoid_h)


def path_join_ddp_closed_form(spec: PathJoinSpec,
                              sides: tuple[Iterable[int], Iterable[int], Iterable[int], Iterable[int]] | None = None
                              ) -> set[int]:
    """The one-line sumset ``(ddp^x(g) + ddp^y(h) + {-1..r-1}) | ddp_x(g) | ddp_y(h)``.

    Agrees with :func:`path_join_ddp` when both anchored sets are intervals
    ``{1..m}``; with gaps (``g = C5``) it also admits sizes no isometric set has.
    """
    need_g, avoid_g, need_h, avoid_h = _sides(spec, sides)
    return sumset(need_g, need_h, range(-1, spec.r)) | set(avoid_g) | set(avoid_h)
