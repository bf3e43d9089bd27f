"""Graph families: cycles, paths, cliques, C_{k,l} cycle attachments, the
seven-vertex sdp example, and small-graph catalogs for sweeps."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from importlib import resources
from itertools import combinations, islice, product
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .errors import InvalidSpec, OutOfRange, TooLarge
from .graph import Graph, build_graph, is_connected, min_degree
from .isometry import is_isometric

EXHAUSTIVE_MAX_N = 7
UNLABELED_MAX_N = 8
_CATALOG_FILE = "connected_graphs_1to8.g6"


def cycle(k: int) -> Graph:
    if k < 3:
        raise OutOfRange("a cycle needs at least 3 vertices")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(n: int) -> Graph:
    if n < 1:
        raise OutOfRange("a path needs at least 1 vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise OutOfRange("a complete graph needs at least 1 vertex")
    return build_graph(n, combinations(range(n), 2))


# Drawn labels 1..7 map to indices 0..6.
FIGURE1_EDGES = [(7, 6), (7, 2), (7, 5), (6, 5), (6, 3), (5, 4), (5, 1), (4, 3), (3, 2), (1, 2)]


def figure1_graph() -> Graph:
    """Seven-vertex graph with an induced 5-cycle whose labels 1..7 form an sdp ordering."""
    return build_graph(7, [(u - 1, v - 1) for u, v in FIGURE1_EDGES])


# --- C_{k,l} -----------------------------------------------------------------


@dataclass(frozen=True)
class Attachment:
    """One added vertex: a window of three consecutive cycle vertices starting at
    ``start`` and the cycle vertices of that window it is joined to."""

    start: int
    joins: tuple[int, ...]


@dataclass(frozen=True)
class CkLSpec:
    k: int
    attachments: tuple[Attachment, ...] = ()

    @property
    def ell(self) -> int:
        return len(self.attachments)

    def validate(self) -> None:
        if self.k < 3:
            raise InvalidSpec("cycle length must be at least 3")
        for i, att in enumerate(self.attachments):
            if not 0 <= att.start < self.k:
                raise InvalidSpec(f"attachment {i}: window start {att.start} outside 0..{self.k - 1}")
            if not att.joins:
                raise InvalidSpec(f"attachment {i}: empty join set")
            window = {(att.start + o) % self.k for o in range(3)}
            stray = set(att.joins) - window
            if stray:
                raise InvalidSpec(f"attachment {i}: joins {sorted(stray)} outside window {sorted(window)}")


@dataclass(frozen=True)
class CkLGraph:
    graph: Graph
    cycle: int
    added: int
    spec: CkLSpec


def build_ckl(spec: CkLSpec) -> CkLGraph:
    """Cycle vertices ``0..k-1`` followed by one added vertex per attachment."""
    spec.validate()
    k = spec.k
    edges = [(i, (i + 1) % k) for i in range(k)]
    for j, att in enumerate(spec.attachments):
        edges.extend((k + j, c) for c in att.joins)
    g = build_graph(k + spec.ell, edges)
    cyc = (1 << k) - 1
    out = CkLGraph(g, cyc, g.vertices & ~cyc, spec)
    if not is_isometric(g, cyc):
        raise InvalidSpec(f"cycle is no longer isometric in {spec}")
    return out


def _window_joins(k: int, start: int) -> list[tuple[int, ...]]:
    return [
        tuple(sorted({(start + o) % k for o in range(3) if b >> o & 1}))
        for b in range(1, 8)
    ]


def enumerate_ckl(k: int, ell: int, limit: int | None = None) -> Iterator[CkLSpec]:
    """Every spec with ``ell`` ordered attachments: window starts ascending,
    join subsets in binary order of their window offsets."""
    if k < 3 or ell < 0:
        raise OutOfRange("need k >= 3 and ell >= 0")
    choices = [Attachment(s, j) for s in range(k) for j in _window_joins(k, s)]
    specs = (CkLSpec(k, tuple(atts)) for atts in product(choices, repeat=ell))
    return islice(specs, limit)


def count_ckl(k: int, ell: int) -> int:
    return (7 * k) ** ell


def sample_ckl(k: int, ell: int, seed: int) -> CkLSpec:
    rng = random.Random(seed)
    atts = []
    for _ in range(ell):
        start = rng.randrange(k)
        atts.append(Attachment(start, _window_joins(k, start)[rng.randrange(7)]))
    return CkLSpec(k, tuple(atts))


def ckl_specs(k: int, ell: int, budget: int = 500, seed: int = 0) -> list[CkLSpec]:
    """Full enumeration when it fits in ``budget``, else ``budget`` seeded samples."""
    if count_ckl(k, ell) <= budget:
        return list(enumerate_ckl(k, ell))
    rng = random.Random(seed)
    return [sample_ckl(k, ell, rng.randrange(1 << 30)) for _ in range(budget)]


# --- catalogs ------------------------------------------------------------------


class Source(enum.Enum):
    EXHAUSTIVE_LABELED = "labeled"
    UNLABELED = "unlabeled"
    FILE = "file"


@dataclass(frozen=True)
class GraphCatalog:
    """Where graphs come from plus predicates they must pass.

    ``EXHAUSTIVE_LABELED`` yields every labelled connected graph on ``n``
    vertices; ``UNLABELED`` yields one graph per isomorphism class from the
    bundled catalog; ``FILE`` reads graph6 records from ``path``.
    """

    source: Source
    n: int | None = None
    path: str | None = None
    filters: tuple[Callable[[Graph], bool], ...] = ()

    def describe(self) -> str:
        what = {Source.EXHAUSTIVE_LABELED: f"labeled n={self.n}",
                Source.UNLABELED: f"unlabeled n={self.n}",
                Source.FILE: f"file {self.path}"}[self.source]
        return what + (f" with {len(self.filters)} filter(s)" if self.filters else "")


def exhaustive_labeled(n: int) -> Iterator[Graph]:
    """Every connected labelled graph on ``n`` vertices, in edge-bitmask order."""
    if n > EXHAUSTIVE_MAX_N:
        raise TooLarge(f"exhaustive labelled enumeration is limited to n <= {EXHAUSTIVE_MAX_N}")
    if n < 1:
        raise OutOfRange("n must be positive")
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for code in range(1 << len(pairs)):
        adj = [0] * n
        c = code
        i = 0
        while c:
            if c & 1:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            c >>= 1
            i += 1
        # connectivity on raw rows before paying for Graph validation
        seen = frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
        if seen == full:
            yield Graph(n, tuple(adj))


def unlabeled(n: int) -> Iterator[Graph]:
    """Connected graphs on ``n`` vertices, one per isomorphism class (n <= 8)."""
    from .codecs import parse_graph6

    if not 1 <= n <= UNLABELED_MAX_N:
        raise TooLarge(f"bundled catalog covers 1 <= n <= {UNLABELED_MAX_N}")
    text = resources.files("distpres.data").joinpath(_CATALOG_FILE).read_text()
    for i, line in enumerate(text.splitlines()):
        line = line.strip()
        if line:
            g = parse_graph6(line, record=i)
            if g.n == n:
                yield g


def from_file(path: str | Path) -> Iterator[Graph]:
    from .codecs import parse_graph6

    with open(path) as fh:
        for i, line in enumerate(fh):
            line = line.strip().removeprefix(">>graph6<<")
            if line:
                yield parse_graph6(line, record=i)


def catalog(source: GraphCatalog) -> Iterator[Graph]:
    """Connected graphs from ``source`` that pass all of its filters."""
    if source.source is Source.EXHAUSTIVE_LABELED:
        stream: Iterable[Graph] = exhaustive_labeled(source.n)
    elif source.source is Source.UNLABELED:
        stream = unlabeled(source.n)
    else:
        stream = (g for g in from_file(source.path) if is_connected(g))
    for g in stream:
        if all(f(g) for f in source.filters):
            yield g


def min_degree_at_least(t: int) -> Callable[[Graph], bool]:
    return lambda g: min_degree(g) >= t


def connected_graphs(max_n: int, labeled: bool = False, min_n: int = 1) -> Iterator[Graph]:
    """All connected graphs with ``min_n <= n <= max_n`` from one catalog kind."""
    kind = Source.EXHAUSTIVE_LABELED if labeled else Source.UNLABELED
    for n in range(min_n, max_n + 1):
        yield from catalog(GraphCatalog(kind, n=n))
