"""Corpus-wide module invariants: the properties quantified over every
graph up to 8 vertices, swept over the committed isomorph-free corpora
(the numbered acceptance criteria live in test_acceptance.py).
"""
from __future__ import annotations

import itertools
import os
import random
from multiprocessing import Pool

import pytest

from matchext.families import FAMILIES, build_family, feasible_parameters
from matchext.gallai_edmonds import decompose
from matchext.graph import disjoint_union, join, odd_component_count
from matchext.graph6 import emit_graph6, parse_graph6
from matchext.harness import CHECKS, run_checks
from matchext.matching import (
    has_perfect_matching,
    matchings_of_size,
    maximum_matching,
)
from matchext.properties import (
    independence_number,
    is_factor_critical,
    is_k_extendable,
    is_n_factor_critical,
    vertex_connectivity,
)

from conftest import load_corpus
from test_matching import matching_poly_coeff
from test_properties import brute_vertex_connectivity

JOBS = min(8, os.cpu_count() or 1)


def _pool_all(worker, lines, chunksize=256):
    failures = []
    with Pool(JOBS) as pool:
        for result in pool.imap_unordered(worker, lines, chunksize=chunksize):
            if result is not None:
                failures.append(result)
    return failures


# --- matching engine over every graph <= 8 vertices ---------------------------

def _matching_invariants(line: str):
    g = parse_graph6(line)
    n = g.order
    blossom_size = len(maximum_matching(g))

    brute = 0
    for k in range(n // 2, -1, -1):
        if next(iter(matchings_of_size(g, k)), None) is not None:
            brute = k
            break
    if blossom_size != brute:
        return (line, "maximum_matching", blossom_size, brute)

    deficiency = max(
        odd_component_count(g, g.full_mask & ~mask) - mask.bit_count()
        for mask in range(1 << n)
    )
    if blossom_size != (n - deficiency) // 2:
        return (line, "tutte-berge", blossom_size, (n - deficiency) // 2)

    for k in range(n // 2 + 1):
        count = sum(1 for _ in matchings_of_size(g, k))
        if count != matching_poly_coeff(g, k):
            return (line, "matching-count", k, count)

    if has_perfect_matching(g) != (2 * blossom_size == n):
        return (line, "has-perfect-matching", None, None)
    return None


def test_matching_invariants_over_all_graphs_le8():
    failures = _pool_all(_matching_invariants, load_corpus("all_le8.g6"))
    assert not failures, failures[:5]


# --- property checkers over every connected graph <= 8 vertices ----------------

def _brute_alpha(g) -> int:
    best = 0
    for mask in range(1 << g.order):
        if mask.bit_count() > best and all(
            g.adj[v] & mask == 0 for v in range(g.order) if mask >> v & 1
        ):
            best = mask.bit_count()
    return best


def _checker_invariants(line: str):
    g = parse_graph6(line)
    if independence_number(g) != _brute_alpha(g):
        return (line, "independence")
    if vertex_connectivity(g) != brute_vertex_connectivity(g):
        return (line, "connectivity")
    if g.order % 2 == 0 and g.order >= 2:
        verdicts = {
            k: is_k_extendable(g, k) for k in range((g.order - 2) // 2 + 1)
        }
        for k, value in verdicts.items():
            if value and not all(verdicts[m] for m in range(k)):
                return (line, "monotonicity", k)
            if 2 * k <= g.order - 2 and is_n_factor_critical(g, 2 * k) and not value:
                return (line, "criticality-implies-extendable", k)
    return None


def test_checker_invariants_over_connected_le8():
    failures = _pool_all(_checker_invariants, load_corpus("connected_le8.g6"))
    assert not failures, failures[:5]


# --- decomposition invariants over every graph <= 8 vertices -------------------

def _decomposition_invariants(line: str):
    g = parse_graph6(line)
    ge = decompose(g)
    if (len(ge.d) == 0) != has_perfect_matching(g):
        return (line, "d-empty-iff-pm")
    if is_factor_critical(g) and (ge.d, ge.a, ge.c) != (
        frozenset(range(g.order)),
        frozenset(),
        frozenset(),
    ):
        return (line, "factor-critical-decomposition")
    return None


def test_decomposition_invariants_over_all_graphs_le8():
    failures = _pool_all(_decomposition_invariants, load_corpus("all_le8.g6"))
    assert not failures, failures[:5]


# --- codec identity over every corpus line -------------------------------------

@pytest.mark.parametrize(
    "name", ["connected_le8.g6", "all_le8.g6", "connected_9.g6", "mindeg5_10.g6"]
)
def test_codec_roundtrip_identity_over_corpus(name):
    for line in load_corpus(name):
        assert emit_graph6(parse_graph6(line)) == line


# --- independence algebra against corpus pairs ----------------------------------

def test_independence_algebra_on_corpus_pairs():
    small = [parse_graph6(line) for line in load_corpus("connected_le8.g6")
             if ord(line[0]) - 63 <= 5]
    rng = random.Random(2)
    for g1, g2 in rng.sample(list(itertools.product(small, small)), 400):
        a1, a2 = independence_number(g1), independence_number(g2)
        assert independence_number(join(g1, g2)) == max(a1, a2)
        assert independence_number(disjoint_union(g1, g2)) == a1 + a2


# --- every family instance passes every registered check ------------------------

def test_families_pass_all_checks_up_to_order_12():
    graphs = []
    for family in FAMILIES:
        for spec in feasible_parameters(family, 12):
            graphs.append(build_family(spec))
    assert len(graphs) > 100
    lines = [(i, emit_graph6(g)) for i, g in enumerate(graphs, start=1)]
    verdicts, decode_errors = run_checks(list(CHECKS), lines, jobs=JOBS)
    assert decode_errors == []
    for cid, v in verdicts.items():
        assert not v.violations, (cid, v.violations[:3])
    # the families are engineered to exercise the headline results
    assert verdicts["T-CRT-IND"].hits > 30
    assert verdicts["T-K12-IND"].hits > 10
    assert verdicts["T-MAIN-4K"].hits >= 1
