"""Deciders for every graph property the theorems quantify over:
k-extendability, k-half-extendability (two independent routes),
n-factor-criticality (two independent routes), factor-criticality,
independence number and vertex connectivity.

Precondition violations raise instead of returning False: the definitions
presuppose parity and connectivity, and a silent False would poison the
statistics of any sweep built on top.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import (
    Graph,
    complete_graph,
    is_connected,
    join,
    mask_of,
    odd_component_count,
    structure_metrics,
)
from .matching import (
    matching_masks,
    matching_number,
    matchings_of_size,
    perfect_matching_on,
)

Edge = tuple[int, int]


class PreconditionError(ValueError):
    """The property is not defined for this input."""


def _require_connected(g: Graph, what: str) -> None:
    if not is_connected(g):
        raise PreconditionError(f"{what} requires a connected graph")


def _validate_criticality_order(g: Graph, n: int) -> None:
    # n = order-1 can never hold (one leftover vertex) and anything above
    # order is meaningless; n = order is the vacuously-true boundary that
    # keeps single-vertex components factor-critical.
    if n < 0 or n > g.order or n == g.order - 1:
        raise PreconditionError(
            f"criticality parameter {n} outside [0, {g.order} - 2] + {{{g.order}}}"
        )


def is_k_extendable(g: Graph, k: int) -> bool:
    """Connected even-order G where some k-matching exists and every
    k-matching extends to a perfect matching."""
    if g.order % 2:
        raise PreconditionError("k-extendability requires even order")
    _require_connected(g, "k-extendability")
    if not 0 <= 2 * k <= g.order - 2:
        raise PreconditionError(f"k={k} outside [0, (order-2)/2] for order {g.order}")
    full = g.full_mask
    exists = False
    for covered in matching_masks(g, k):
        exists = True
        if not perfect_matching_on(g, full & ~covered):
            return False
    return exists


def failing_matching(g: Graph, k: int) -> tuple[Edge, ...] | None:
    """First k-matching (lexicographic) that extends to no perfect matching."""
    full = g.full_mask
    for m in matchings_of_size(g, k):
        covered = mask_of(v for e in m for v in e)
        if not perfect_matching_on(g, full & ~covered):
            return m
    return None


def is_n_factor_critical(g: Graph, n: int) -> bool:
    """G - S has a perfect matching for every vertex set S of size n.

    Mismatched parity returns False; sizes that can never work (n = order-1,
    n > order) are rejected.
    """
    _validate_criticality_order(g, n)
    if (g.order - n) % 2:
        return False
    full = g.full_mask
    for subset in itertools.combinations(range(g.order), n):
        if not perfect_matching_on(g, full & ~mask_of(subset)):
            return False
    return True


def failing_subset(g: Graph, n: int) -> tuple[int, ...] | None:
    """First size-n S (lexicographic) where G - S has no perfect matching."""
    full = g.full_mask
    for subset in itertools.combinations(range(g.order), n):
        if not perfect_matching_on(g, full & ~mask_of(subset)):
            return subset
    return None


def tutte_criterion(g: Graph, n: int) -> bool:
    """Independent route to n-factor-criticality: matching parity plus
    o(G - S) <= |S| - n for every S with |S| >= n.

    Exhaustive over all 2^order subsets; intended for desk-scale orders.
    """
    _validate_criticality_order(g, n)
    if (g.order - n) % 2:
        return False
    full = g.full_mask
    for smask in range(1 << g.order):
        size = smask.bit_count()
        if size >= n and odd_component_count(g, full & ~smask) > size - n:
            return False
    return True


def is_factor_critical(g: Graph) -> bool:
    """G - v has a perfect matching for every vertex (odd order required)."""
    if g.order % 2 == 0:
        return False
    full = g.full_mask
    return all(perfect_matching_on(g, full & ~(1 << v)) for v in range(g.order))


def is_k_half_extendable(g: Graph, k: int) -> bool:
    """Definitional route: for every vertex v, G - v has a k-matching and
    every k-matching of G - v lies in a perfect matching of G - v."""
    if g.order % 2 == 0:
        raise PreconditionError("k-half-extendability requires odd order")
    _require_connected(g, "k-half-extendability")
    if k < 0:
        raise PreconditionError("k must be non-negative")
    full = g.full_mask
    for v in range(g.order):
        sub = full & ~(1 << v)
        found = False
        for covered in matching_masks(g, k, within=sub):
            found = True
            if not perfect_matching_on(g, sub & ~covered):
                return False
        if not found:
            return False
    return True


def is_k_half_extendable_via_join(g: Graph, k: int) -> bool:
    """Dual oracle: G is k-half-extendable iff G joined with a single vertex
    is (k+1)-extendable.

    Only defined while k+1 stays inside the extendability range of the join,
    i.e. k <= (order-3)/2; beyond that the delegate raises.
    """
    if g.order % 2 == 0:
        raise PreconditionError("k-half-extendability requires odd order")
    _require_connected(g, "k-half-extendability")
    if k < 0:
        raise PreconditionError("k must be non-negative")
    return is_k_extendable(join(g, complete_graph(1)), k + 1)


def independence_number(g: Graph) -> int:
    """Exact maximum independent set size.

    Branch and bound with a greedy clique-cover upper bound; candidates are
    split on a maximum-degree vertex. Exact for all orders, fast well past
    the desk scale this package sweeps.
    """
    adj = g.adj
    best = 0

    def cover_bound(cand: int) -> int:
        count = 0
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            clique = low
            avail = rest & adj[v]
            while avail:
                ulow = avail & -avail
                u = ulow.bit_length() - 1
                clique |= ulow
                avail &= adj[u] & ~ulow
            rest &= ~clique
            count += 1
        return count

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if not cand or size + cover_bound(cand) <= best:
            return
        pick = -1
        pick_degree = -1
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            d = (adj[v] & cand).bit_count()
            if d > pick_degree:
                pick, pick_degree = v, d
            rest ^= low
        expand(cand & ~(1 << pick) & ~adj[pick], size + 1)
        expand(cand & ~(1 << pick), size)

    expand(g.full_mask, 0)
    return best


def _local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    # Max vertex-disjoint s-t paths by unit-capacity flow on the split
    # digraph: vertex v becomes arc 2v -> 2v+1 of capacity 1.
    n = g.order
    big = n
    cap: dict[tuple[int, int], int] = {}
    nbrs: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap[(b, a)] = 0
            nbrs[a].append(b)
            nbrs[b].append(a)
        cap[(a, b)] += c

    for v in range(n):
        add(2 * v, 2 * v + 1, 1 if v not in (s, t) else big)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, big)
        add(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for a in queue:
                for b in nbrs[a]:
                    if b not in parent and cap[(a, b)] > 0:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in parent:
            return flow
        bottleneck = big
        b = sink
        while b != source:
            a = parent[b]
            bottleneck = min(bottleneck, cap[(a, b)])
            b = a
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= bottleneck
            cap[(b, a)] += bottleneck
            b = a
        flow += bottleneck


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; order-1 for complete graphs, 0 when
    disconnected or on at most one vertex."""
    n = g.order
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    nonadjacent = [
        (s, t)
        for s in range(n)
        for t in range(s + 1, n)
        if not g.has_edge(s, t)
    ]
    if not nonadjacent:
        return n - 1
    return min(_local_vertex_connectivity(g, s, t) for s, t in nonadjacent)


@dataclass
class PropertyProfile:
    """Computed metric bundle for one graph, with a cache of parametrised
    verdicts keyed by (property name, parameter)."""

    order: int
    min_degree: int
    connectivity: int
    independence: int
    matching_number: int
    bipartite: bool
    verdicts: dict[tuple[str, int | None], bool] = field(default_factory=dict)

    def record(self, prop: str, parameter: int | None, value: bool) -> bool:
        self.verdicts[(prop, parameter)] = value
        return value


def profile(g: Graph) -> PropertyProfile:
    """Metric bundle for one graph; parametrised verdicts start empty."""
    metrics = structure_metrics(g)
    return PropertyProfile(
        order=g.order,
        min_degree=metrics.min_degree,
        connectivity=vertex_connectivity(g),
        independence=independence_number(g),
        matching_number=matching_number(g),
        bipartite=metrics.bipartite,
    )
