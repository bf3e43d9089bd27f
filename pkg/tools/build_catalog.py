"""Regenerate the bundled catalog of connected graphs up to isomorphism.

Orders 1..7 come from the networkx graph atlas.  Order 8 is grown from every
7-vertex atlas graph by adding a vertex with each possible neighbourhood and
keeping one representative per isomorphism class (Weisfeiler-Lehman hash
buckets, then VF2 within a bucket).  The expected counts are the number of
connected graphs on n unlabelled vertices: 1, 1, 2, 6, 21, 112, 853, 11117.

    python tools/build_catalog.py src/distpres/data/connected_graphs_1to8.g6
"""

import collections
import sys

import networkx as nx

from distpres.codecs import emit_graph6
from distpres.graph import build_graph

EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def to_graph(h: nx.Graph):
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return build_graph(len(index), [(index[u], index[v]) for u, v in h.edges])


def order8(seven):
    buckets = collections.defaultdict(list)
    for g in seven:
        for nbrs in range(1, 1 << 7):
            h = g.copy()
            h.add_node(7)
            h.add_edges_from((7, j) for j in range(7) if nbrs >> j & 1)
            if not nx.is_connected(h):
                continue
            key = (tuple(sorted(d for _, d in h.degree())),
                   nx.weisfeiler_lehman_graph_hash(h, iterations=3))
            bucket = buckets[key]
            if not any(nx.is_isomorphic(h, other) for other in bucket):
                bucket.append(h)
    return [h for bucket in buckets.values() for h in bucket]


def main(out_path):
    atlas = [g for g in nx.graph_atlas_g() if len(g) >= 1]
    by_n = collections.defaultdict(list)
    for g in atlas:
        if nx.is_connected(g):
            by_n[len(g)].append(g)
    by_n[8] = order8([g for g in atlas if len(g) == 7])
    lines = []
    for n in sorted(by_n):
        if len(by_n[n]) != EXPECTED[n]:
            raise SystemExit(f"n={n}: got {len(by_n[n])} graphs, expected {EXPECTED[n]}")
        codes = sorted(emit_graph6(to_graph(h)) for h in by_n[n])
        lines.extend(codes)
    with open(out_path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {out_path}")


if __name__ == "__main__":
    main(sys.argv[1])
