"""Exact matching machinery: maximum matching, perfect-matching tests,
forced extension, and bounded enumeration of k-matchings.

Maximum matching uses blossom-style augmenting paths with a fixed scan
order, so results are deterministic for a fixed labeling. Perfect-matching
existence is a separate memoised bitmask search shared per graph: it is the
hot primitive behind every extendability and factor-criticality sweep, and
its cache is keyed by induced-subgraph mask so deletions cost nothing.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .graph import Graph, bits

Edge = tuple[int, int]


class MatchingError(ValueError):
    """Input edge set is not a matching of the host graph."""


def validate_matching(g: Graph, edges: Iterable[Edge]) -> frozenset[Edge]:
    """Normalise and validate a matching; raises MatchingError on violation."""
    seen = 0
    out = set()
    for u, v in edges:
        if not (0 <= u < g.order and 0 <= v < g.order) or not g.has_edge(u, v):
            raise MatchingError(f"({u}, {v}) is not an edge of the graph")
        pair_mask = 1 << u | 1 << v
        if seen & pair_mask:
            raise MatchingError(f"edge ({u}, {v}) shares a vertex with another edge")
        seen |= pair_mask
        out.add((min(u, v), max(u, v)))
    return frozenset(out)


def matching_covered_mask(edges: Iterable[Edge]) -> int:
    m = 0
    for u, v in edges:
        m |= 1 << u | 1 << v
    return m


def perfect_matching_on(g: Graph, mask: int) -> bool:
    """Does the subgraph induced by mask have a perfect matching?"""
    if mask.bit_count() & 1:
        return False
    cache = g._pm_cache
    if cache is None:
        cache = {}
        g._set_cache("_pm_cache", cache)
    adj = g.adj

    def search(m: int) -> bool:
        if m == 0:
            return True
        hit = cache.get(m)
        if hit is not None:
            return hit
        low = m & -m
        v = low.bit_length() - 1
        rest = m ^ low
        nbrs = adj[v] & rest
        result = False
        while nbrs:
            ubit = nbrs & -nbrs
            if search(rest ^ ubit):
                result = True
                break
            nbrs ^= ubit
        cache[m] = result
        return result

    return search(mask)


def has_perfect_matching(g: Graph) -> bool:
    """True iff the matching number is order/2 (false for odd order)."""
    return perfect_matching_on(g, g.full_mask)


def extends_to_perfect(g: Graph, forced: Iterable[Edge]) -> bool:
    """Is the forced matching contained in some perfect matching?

    Reduces to a perfect-matching test on the graph minus all forced
    endpoints; forced must be a valid matching of g.
    """
    edges = validate_matching(g, forced)
    return perfect_matching_on(g, g.full_mask & ~matching_covered_mask(edges))


def matchings_of_size(g: Graph, k: int, within: int | None = None) -> Iterator[tuple[Edge, ...]]:
    """All matchings of exactly k edges, each exactly once.

    Yields tuples ordered by edge index, enumerated in lexicographic order of
    the sorted edge-index sequences; consumers may stop early. `within`
    restricts to edges inside a vertex bitmask.
    """
    if not 0 <= k <= g.order // 2:
        raise MatchingError(f"matching size {k} out of range [0, {g.order // 2}]")
    allowed = g.full_mask if within is None else within
    edges = [e for e in g.edges() if (1 << e[0] | 1 << e[1]) & ~allowed == 0]
    masks = [1 << u | 1 << v for u, v in edges]
    chosen: list[Edge] = []

    def rec(start: int, covered: int) -> Iterator[tuple[Edge, ...]]:
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for i in range(start, len(edges) - (k - len(chosen)) + 1):
            if masks[i] & covered:
                continue
            chosen.append(edges[i])
            yield from rec(i + 1, covered | masks[i])
            chosen.pop()

    return rec(0, 0)


def matching_masks(g: Graph, k: int, within: int | None = None) -> Iterator[int]:
    """Covered-vertex masks of all k-matchings, in the same order as
    matchings_of_size; cheaper when the edges themselves are not needed."""
    allowed = g.full_mask if within is None else within
    masks = [
        m
        for u, v in g.edges()
        if (m := 1 << u | 1 << v) & ~allowed == 0
    ]

    def rec(start: int, covered: int, need: int) -> Iterator[int]:
        if need == 0:
            yield covered
            return
        for i in range(start, len(masks) - need + 1):
            if masks[i] & covered:
                continue
            yield from rec(i + 1, covered | masks[i], need - 1)

    return rec(0, 0, k)


def maximum_matching(g: Graph) -> frozenset[Edge]:
    """A maximum matching, via blossom contraction on augmenting paths.

    Deterministic for a fixed labeling: the greedy seed and every scan run
    in ascending vertex order.
    """
    n = g.order
    adjlist = [list(bits(g.adj[v])) for v in range(n)]
    match = [-1] * n
    for u, v in g.edges():
        if match[u] == -1 and match[v] == -1:
            match[u] = v
            match[v] = u

    p = [-1] * n
    base = list(range(n))
    used = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool], queue: deque) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def try_augment(root: int) -> bool:
        for i in range(n):
            used[i] = False
            p[i] = -1
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adjlist[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom, queue)
                    mark_path(to, cur, v, in_blossom, queue)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = p[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            try_augment(v)
    return frozenset((u, match[u]) for u in range(n) if match[u] > u)


def matching_number(g: Graph) -> int:
    """The matching number (edge independence number)."""
    return len(maximum_matching(g))
