"""Edge-list and graph6 text codecs.

Edge-list: a header line ``"n m"`` then ``m`` lines ``"u v"`` with 0-based
endpoints.  graph6: the usual printable encoding (order header, then the upper
triangle column by column, packed six bits per character offset by 63).
"""

from __future__ import annotations

import re

from .errors import GraphError, ParseError
from .graph import MAX_N, Graph, build_graph

_INT_PAIR = re.compile(r"\s*(-?\d+)\s+(-?\d+)\s*")


def emit_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    offset = 0
    pairs = []
    for line in text.splitlines(keepends=True):
        if line.strip():
            m = _INT_PAIR.fullmatch(line.rstrip("\r\n"))
            if m is None:
                raise ParseError(f"expected two integers, got {line.strip()!r}", offset)
            pairs.append((int(m[1]), int(m[2]), offset))
        offset += len(line.encode())
    if not pairs:
        raise ParseError("missing 'n m' header", 0)
    n, m, _ = pairs[0]
    body = pairs[1:]
    if n < 1:
        raise ParseError(f"order must be positive, got {n}", 0)
    if n > MAX_N:
        raise ParseError(f"order {n} exceeds the supported maximum {MAX_N}", 0)
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}", offset)
    for u, v, at in body:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u},{v}) out of range for n={n}", at)
        if u == v:
            raise ParseError(f"self-loop at {u}", at)
    return build_graph(n, [(u, v) for u, v, _ in body])


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for p in range(0, len(bits), 6):
        val = 0
        for b in bits[p:p + 6]:
            val = val << 1 | b
        body.append(chr(val + 63))
    return head + "".join(body)


def parse_graph6(text: str, record: int | None = None) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[10:]
    if not data:
        raise ParseError("empty graph6 record", 0, record)
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range 63..126", pos, record)
    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    else:
        if len(data) < 4:
            raise ParseError("truncated long order header", len(data), record)
        if data[1] == "~":
            raise ParseError("orders above 258047 are not supported", 1, record)
        n = 0
        for ch in data[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    if n < 1:
        raise ParseError("graph6 order must be positive", 0, record)
    if n > MAX_N:
        raise ParseError(f"order {n} exceeds the supported maximum {MAX_N}", 0, record)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise ParseError(f"truncated record: {need} body bytes expected, {len(body)} present",
                         len(data), record)
    if len(body) > need:
        raise ParseError("trailing bytes after graph6 body", pos + need, record)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            val = ord(body[k // 6]) - 63
            if val >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc), pos, record) from exc


FORMATS = {
    "edgelist": (parse_edgelist, emit_edgelist),
    "graph6": (parse_graph6, emit_graph6),
}


def parse(text: str, fmt: str) -> Graph:
    return FORMATS[fmt][0](text)


def emit(g: Graph, fmt: str) -> str:
    return FORMATS[fmt][1](g)
