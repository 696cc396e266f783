"""Shared fixtures and independent brute-force oracles.

Oracles here deliberately avoid the implementation paths they check:
matching sizes come from explicit subset enumeration, never from the
blossom code or the bitmask perfect-matching search.
"""
from __future__ import annotations

import itertools
import random
from pathlib import Path

import pytest

from matchext.graph import Graph, build_graph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for picks in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if picks >> i & 1])


def brute_matchings(g: Graph, k: int) -> list[frozenset[tuple[int, int]]]:
    """All k-matchings by raw combination filtering (oracle)."""
    out = []
    for combo in itertools.combinations(g.edges(), k):
        covered = set()
        ok = True
        for u, v in combo:
            if u in covered or v in covered:
                ok = False
                break
            covered.update((u, v))
        if ok:
            out.append(frozenset(combo))
    return out


def brute_matching_number(g: Graph) -> int:
    """Maximum matching size by descending exhaustive search (oracle)."""
    for k in range(g.order // 2, 0, -1):
        for combo in itertools.combinations(g.edges(), k):
            covered = set()
            ok = True
            for u, v in combo:
                if u in covered or v in covered:
                    ok = False
                    break
                covered.update((u, v))
            if ok:
                return k
    return 0


def brute_independence_number(g: Graph) -> int:
    """Maximum independent set size by subset enumeration (oracle)."""
    best = 0
    for mask in range(1 << g.order):
        if mask.bit_count() <= best:
            continue
        if all(g.adj[v] & mask == 0 for v in range(g.order) if mask >> v & 1):
            best = mask.bit_count()
    return best


def load_corpus(name: str) -> list[str]:
    path = FIXTURES / name
    if not path.exists():
        pytest.skip(f"fixture {name} not generated")
    return path.read_text().split()


def check_partition_witness(g: Graph, k: int, w) -> None:
    """Re-verify a bad-partition witness from scratch."""
    from matchext.graph import induced_subgraph, mask_of
    from matchext.properties import is_factor_critical

    assert w.v1 | w.v2 == set(range(g.order))
    assert not w.v1 & w.v2
    assert len(w.v1) == len(w.v2) == 2 * k
    for half, comps in ((w.v1, w.components1), (w.v2, w.components2)):
        assert len(comps) == 2
        assert comps[0] | comps[1] == half
        assert not comps[0] & comps[1]
        for comp in comps:
            assert len(comp) >= 3
            assert is_factor_critical(induced_subgraph(g, mask_of(comp))[0])
            other = half - comp
            assert all(not g.has_edge(u, v) for u in comp for v in other)


def check_join_witness(g: Graph, n: int, w) -> None:
    """Re-verify an exceptional-join witness from scratch."""
    assert len(w.core) == n
    assert len(w.clique1) == len(w.clique2) == (g.order - n) // 2
    assert not (w.core & w.clique1 or w.core & w.clique2 or w.clique1 & w.clique2)
    assert w.core | w.clique1 | w.clique2 == set(range(g.order))
    for clique in (w.clique1, w.clique2):
        assert all(g.has_edge(u, v) for u in clique for v in clique if u != v)
    assert all(not g.has_edge(u, v) for u in w.clique1 for v in w.clique2)
    assert all(g.has_edge(c, v) for c in w.core for v in w.clique1 | w.clique2)
