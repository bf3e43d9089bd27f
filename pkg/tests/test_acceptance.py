"""Acceptance criteria, one test per criterion.

Each test prints a ``test_criterion_N: PASS|FAIL`` line; the lines are
repeated in the terminal summary.  Run with ``pytest tests/test_acceptance.py``.
"""

import random
import time
from itertools import combinations

import pytest

from distpres.codecs import emit, parse
from distpres.decomposition import (
    PathJoinSpec,
    build_path_join,
    path_join_ddp,
    path_join_ddp_closed_form,
)
from distpres.families import Attachment, CkLSpec, build_ckl, complete, connected_graphs, cycle, figure1_graph
from distpres.graph import mask_of, members, neighborhood
from distpres.isometry import dp_profile, is_dp
from distpres.simplicial import (
    EliminationOrdering,
    OrderingKind,
    chordality,
    find_k_simplicial_ordering,
    induces_cycle,
    is_k_simplicial,
    is_sdp,
    is_weakly_k_simplicial,
    verify_ordering,
)
from distpres.sweeps import converse_search, run_conjecture, run_theorem
from oracles import brute_ddp, nx_isometric, random_graph, to_nx

# First non-dp member of C_{10,3} in enumeration order; missing order 9.
CONVERSE = CkLSpec(10, (Attachment(0, (0,)), Attachment(0, (1,)), Attachment(4, (5, 6))))


def test_criterion_1(criterion):
    start = time.perf_counter()
    prof = dp_profile(cycle(5))
    dp, sdp = is_dp(cycle(5)), is_sdp(cycle(5))
    elapsed = time.perf_counter() - start
    criterion(f"ddp={sorted(prof.ddp)} in {elapsed:.3f}s")
    assert prof.ddp == {1, 2, 3, 5} == brute_ddp(cycle(5))
    assert not dp and not sdp
    assert elapsed < 1.0


def test_criterion_2(criterion):
    start = time.perf_counter()
    g = figure1_graph()
    labels = EliminationOrdering(tuple(range(7)), OrderingKind.SDP, 4)
    sdp_ok = verify_ordering(g, labels)
    longest = chordality(g).longest_induced_cycle
    no_4_ordering = find_k_simplicial_ordering(g, 4) is None
    v1_fails = is_weakly_k_simplicial(g, 0, 4) and not is_k_simplicial(g, 0, 4)
    elapsed = time.perf_counter() - start
    criterion(f"longest induced cycle {longest}, {elapsed:.3f}s")
    assert sdp_ok and is_sdp(g)
    assert longest == 5
    assert no_4_ordering
    assert v1_fails
    # the offending path is labels 2-3-4-5: chordless, inner vertices away from vertex 1
    p = [1, 2, 3, 4]
    assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
    assert not any(g.has_edge(a, b) for a, b in combinations(p, 2) if abs(a - b) > 1)
    assert not neighborhood(g, 0, closed=True) & mask_of(p[1:-1])
    assert members(neighborhood(g, 0)) == [1, 4]
    assert induces_cycle(g, mask_of([0, *p]))
    assert elapsed < 1.0


def test_criterion_3(criterion):
    res = run_theorem("lemma-w4s", max_n=8)
    criterion(f"{res.checked} graphs, {len(res.violations)} violations, {res.runtime:.1f}s")
    assert res.checked == 12113
    assert res.violations == []
    assert res.runtime < 600


def test_criterion_4(criterion):
    res = run_theorem("thm-4chordal", max_n=7)
    four_chordal = sum(1 for g in connected_graphs(7) if chordality(g).longest_induced_cycle <= 4)
    criterion(f"{res.checked} graphs, {four_chordal} 4-chordal, {len(res.violations)} violations")
    assert res.checked == 996
    assert res.violations == []


def test_criterion_5(criterion):
    res = run_theorem("thm-kri", max_n=6, labeled=True)
    criterion(f"{res.checked} labelled graphs, {len(res.violations)} violations")
    assert res.checked == 1 + 1 + 4 + 38 + 728 + 26704
    assert res.violations == []


def test_criterion_6(criterion):
    decomp = run_theorem("thm-decomp", max_n=7)
    joins = run_theorem("cor-pathjoin")
    spec = PathJoinSpec(complete(3), 0, complete(3), 0, 2)
    probe = build_path_join(spec)
    criterion(f"decomposition {decomp.checked} graphs, path joins {joins.checked}, "
              f"{len(decomp.violations) + len(joins.violations)} violations")
    assert decomp.violations == [] and joins.violations == []
    assert joins.checked == 588
    # K3 -2- K3: both triangles plus one interior path vertex, dp
    assert probe.n == 7
    assert path_join_ddp(spec) == brute_ddp(probe) == set(range(1, 8))
    assert path_join_ddp_closed_form(spec) == set(range(1, 8))


def test_criterion_7(criterion):
    res = run_theorem("thm-ckl", budget=500, seed=0)
    with_small = {key: t["with_order_half_plus_2_witness"] for key, t in res.notes["orders"].items()}
    found = converse_search(10, 3)
    criterion(f"{res.checked} members, {len(res.violations)} dp members, "
              f"members with an order floor(k/2)+2 witness: {sum(with_small.values())}, "
              f"converse {'found' if found else 'missing'}")
    # converse: a non-dp member outside the theorem's range, checked against networkx
    assert found is not None and found[0] == CONVERSE and found[1] == [9]
    g = build_ckl(CONVERSE).graph
    h = to_nx(g)
    assert not any(nx_isometric(h, a) for a in combinations(range(g.n), 9))
    # every member is non-dp
    assert res.violations == []
    # and none has an isometric subgraph of order floor(k/2)+2
    assert all(v == 0 for v in with_small.values()), with_small


def test_criterion_8(criterion):
    proved = run_conjecture("nussbaum-two-thirds", max_n=7)
    half = run_conjecture("min-degree-half", max_n=7)
    criterion(f"two-thirds: {proved.checked} graphs, {len(proved.violations)} violations; "
              f"half: {half.checked} graphs, {len(half.findings)} findings")
    assert proved.checked > 0 and proved.violations == []
    assert half.ok


@pytest.mark.parametrize("fmt", ["edgelist", "graph6"])
def test_criterion_9(fmt, criterion):
    rng = random.Random(20240101)
    failures = 0
    for _ in range(1000):
        n = rng.randint(1, 20)
        g = random_graph(n, rng.random(), rng)
        failures += parse(emit(g, fmt), fmt) != g
    criterion(f"{fmt}: {failures} failures in 1000")
    assert failures == 0
